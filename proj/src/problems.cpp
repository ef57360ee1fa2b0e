#include "isocolloc/problems.hpp"

#include <cmath>
#include <random>
#include <utility>

#include "isocolloc/errors.hpp"

namespace isocolloc {

namespace {

const double kPi = 3.14159265358979323846;

ManufacturedProblem make_p1() {
    Manufactured1D m;
    m.problem.a0 = [](double) { return 0.0; };
    m.problem.a1 = [](double) { return 0.0; };
    m.problem.f = [](double x) { return kPi * kPi * std::sin(kPi * x); };
    m.problem.bc = BoundaryKind::dirichlet_homogeneous;
    m.exact.u = [](double x) { return std::sin(kPi * x); };
    m.exact.du = [](double x) { return kPi * std::cos(kPi * x); };
    m.exact.d2u = [](double x) { return -kPi * kPi * std::sin(kPi * x); };
    return {"p1-dirichlet", m};
}

ManufacturedProblem make_p2() {
    Manufactured1D m;
    m.problem.a0 = [](double) { return 1.0; };
    m.problem.a1 = [](double) { return 1.0; };
    m.problem.f = [](double x) {
        return (1.0 + 4.0 * kPi * kPi) * std::sin(2.0 * kPi * x) +
               2.0 * kPi * std::cos(2.0 * kPi * x);
    };
    m.problem.bc = BoundaryKind::periodic;
    m.exact.u = [](double x) { return std::sin(2.0 * kPi * x); };
    m.exact.du = [](double x) { return 2.0 * kPi * std::cos(2.0 * kPi * x); };
    m.exact.d2u = [](double x) { return -4.0 * kPi * kPi * std::sin(2.0 * kPi * x); };
    return {"p2-periodic", m};
}

ManufacturedProblem make_p3() {
    Manufactured1D m;
    m.problem.a0 = [](double) { return 1.0; };
    m.problem.a1 = [](double x) { return x; };
    m.problem.f = [](double x) {
        const double ex = std::exp(x), s = std::sin(kPi * x), c = std::cos(kPi * x);
        return x * (ex * s + kPi * ex * c) - 2.0 * kPi * ex * c + kPi * kPi * ex * s;
    };
    m.problem.bc = BoundaryKind::dirichlet_homogeneous;
    m.exact.u = [](double x) { return std::sin(kPi * x) * std::exp(x); };
    m.exact.du = [](double x) {
        return std::exp(x) * (std::sin(kPi * x) + kPi * std::cos(kPi * x));
    };
    m.exact.d2u = [](double x) {
        return std::exp(x) *
               ((1.0 - kPi * kPi) * std::sin(kPi * x) + 2.0 * kPi * std::cos(kPi * x));
    };
    return {"p3-advection-reaction", m};
}

ManufacturedProblem make_p4() {
    Problem2D problem{
        [](double x, double y) {
            const double x2 = x * x, y2 = y * y;
            return 2.0 * x *
                   (x2 * x2 + 22.0 * x2 * y2 - 5.0 * x2 + 21.0 * y2 * y2 - 45.0 * y2 + 4.0);
        },
        GeometryMap::quarter_annulus()};
    Exact2D exact{
        [](double x, double y) {
            const double r2 = x * x + y * y;
            return -(r2 - 1.0) * (r2 - 4.0) * x * y * y;
        },
        [](double x, double y) {
            const double x2 = x * x, y2 = y * y;
            return y2 *
                   (-5.0 * x2 * x2 - 6.0 * x2 * y2 + 15.0 * x2 - y2 * y2 + 5.0 * y2 - 4.0);
        },
        [](double x, double y) {
            const double x2 = x * x, y2 = y * y;
            return 2.0 * x * y *
                   (-x2 * x2 - 4.0 * x2 * y2 + 5.0 * x2 - 3.0 * y2 * y2 + 10.0 * y2 - 4.0);
        }};
    return {"p4-annulus", Manufactured2D{std::move(problem), std::move(exact)}};
}

ManufacturedProblem make_p5() {
    // u = sin(a(y-4x)) sin(4a(x/4-y)) (x^3+y^3) with a = 4 pi / 15; both sine
    // factors vanish on the rhombus edges.
    const double a = 4.0 * kPi / 15.0;
    auto trig = [a](double x, double y, double& sA, double& cA, double& sB, double& cB) {
        const double A = a * (y - 4.0 * x);
        const double B = 4.0 * a * (0.25 * x - y);
        sA = std::sin(A);
        cA = std::cos(A);
        sB = std::sin(B);
        cB = std::cos(B);
    };
    Problem2D problem{
        [a, trig](double x, double y) {
            double sA, cA, sB, cB;
            trig(x, y, sA, cA, sB, cB);
            const double g = x * x * x + y * y * y;
            return sA * sB * (34.0 * a * a * g - 6.0 * (x + y)) +
                   16.0 * a * a * cA * cB * g +
                   6.0 * a * (4.0 * x * x - y * y) * cA * sB +
                   6.0 * a * (4.0 * y * y - x * x) * sA * cB;
        },
        GeometryMap::bilinear({0.0, 0.0}, {1.0, 0.25}, {0.25, 1.0}, {1.25, 1.25})};
    Exact2D exact{
        [trig](double x, double y) {
            double sA, cA, sB, cB;
            trig(x, y, sA, cA, sB, cB);
            return sA * sB * (x * x * x + y * y * y);
        },
        [a, trig](double x, double y) {
            double sA, cA, sB, cB;
            trig(x, y, sA, cA, sB, cB);
            const double g = x * x * x + y * y * y;
            return -4.0 * a * cA * sB * g + a * sA * cB * g + 3.0 * x * x * sA * sB;
        },
        [a, trig](double x, double y) {
            double sA, cA, sB, cB;
            trig(x, y, sA, cA, sB, cB);
            const double g = x * x * x + y * y * y;
            return a * cA * sB * g - 4.0 * a * sA * cB * g + 3.0 * y * y * sA * sB;
        }};
    return {"p5-rhombus", Manufactured2D{std::move(problem), std::move(exact)}};
}

}  // namespace

const std::vector<ManufacturedProblem>& manufactured_registry() {
    static const std::vector<ManufacturedProblem> registry = {
        make_p1(), make_p2(), make_p3(), make_p4(), make_p5()};
    return registry;
}

const ManufacturedProblem& find_problem(const std::string& name) {
    for (const auto& mp : manufactured_registry())
        if (mp.name == name) return mp;
    throw ConfigError("unknown problem '" + name + "'");
}

double manufactured_self_check(const ManufacturedProblem& mp, int samples,
                               unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.05, 0.95);
    const double d = 1e-4;
    double worst = 0.0;

    if (mp.is_1d()) {
        const auto& m = mp.as_1d();
        for (int s = 0; s < samples; ++s) {
            const double x = unit(rng);
            const double u0 = m.exact.u(x);
            const double d1 = (m.exact.u(x + d) - m.exact.u(x - d)) / (2.0 * d);
            const double d2 = (m.exact.u(x + d) - 2.0 * u0 + m.exact.u(x - d)) / (d * d);
            const double lu = -d2 + m.problem.a1(x) * d1 + m.problem.a0(x) * u0;
            const double fx = m.problem.f(x);
            worst = std::max(worst, std::abs(lu - fx) / std::max(1.0, std::abs(fx)));
        }
        return worst;
    }

    const auto& m = mp.as_2d();
    for (int s = 0; s < samples; ++s) {
        const Point2 p = m.problem.geometry(unit(rng), unit(rng));
        const double x = p[0], y = p[1];
        const double u0 = m.exact.u(x, y);
        const double uxx = (m.exact.u(x + d, y) - 2.0 * u0 + m.exact.u(x - d, y)) / (d * d);
        const double uyy = (m.exact.u(x, y + d) - 2.0 * u0 + m.exact.u(x, y - d)) / (d * d);
        const double fx = m.problem.f(x, y);
        worst = std::max(worst, std::abs(-(uxx + uyy) - fx) / std::max(1.0, std::abs(fx)));
    }
    return worst;
}

}  // namespace isocolloc
