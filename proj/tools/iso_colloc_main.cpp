#include <string>
#include <vector>

#include "isocolloc/study.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return isocolloc::cli_main(args);
}
