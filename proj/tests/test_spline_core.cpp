#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "isocolloc/errors.hpp"
#include "isocolloc/knots.hpp"
#include "isocolloc/linalg.hpp"
#include "isocolloc/spline_space.hpp"

using namespace isocolloc;

namespace {

// Interpolate f at the Greville abscissae; exact for polynomials up to the
// space degree, which makes it a handy reproduction oracle.
std::vector<double> greville_interpolant(const SplineSpace1D& space, double (*f)(double)) {
    const std::vector<double> pts = space.greville_points();
    const int n = static_cast<int>(pts.size());
    DenseMatrix a(n, n);
    std::vector<double> rhs(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        const BasisSpan bs = space.basis(pts[static_cast<std::size_t>(r)], 0);
        for (int j = 0; j < bs.count; ++j)
            a(r, space.coefficient_index(bs.first_index + j)) += bs.value(0, j);
        rhs[static_cast<std::size_t>(r)] = f(pts[static_cast<std::size_t>(r)]);
    }
    return lu_solve(std::move(a), std::move(rhs));
}

}  // namespace

TEST_CASE("open uniform knot vectors") {
    const KnotVector kv1 = make_open_uniform(1, 1);
    CHECK(kv1.count() == 2);
    CHECK(kv1.knots().size() == 4);
    CHECK(kv1[0] == 0.0);
    CHECK(kv1[1] == 0.0);
    CHECK(kv1[2] == 1.0);
    CHECK(kv1[3] == 1.0);

    const KnotVector kv3 = make_open_uniform(3, 3);
    CHECK(kv3.count() == 6);
    const std::vector<double> expect = {0, 0, 0, 0, 1.0 / 3, 2.0 / 3, 1, 1, 1, 1};
    REQUIRE(kv3.knots().size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i)
        CHECK(kv3[static_cast<int>(i)] == expect[i]);
    CHECK(kv3.is_open());

    const KnotVector kv10 = make_open_uniform(10, 3);
    CHECK(kv10.count() == 13);
    CHECK(kv10.meshsize() == doctest::Approx(0.1));
    CHECK(kv10.element_count() == 10);

    CHECK_THROWS_AS(make_open_uniform(0, 3), InvalidArgument);
    CHECK_THROWS_AS(make_open_uniform(4, 0), InvalidArgument);
    CHECK_THROWS_AS(KnotVector(2, {0, 0, 0, 0.5, 0.5, 1, 1, 1}), InvalidArgument);
    CHECK_THROWS_AS(KnotVector(1, {0, 0.5, 0.2, 1}), InvalidArgument);
}

TEST_CASE("degree-zero basis is the element indicator") {
    const KnotVector kv(0, {0.0, 1.0});
    const BasisSpan bs = basis_span(kv, 0.4, 0);
    CHECK(bs.count == 1);
    CHECK(bs.first_index == 0);
    CHECK(bs.value(0, 0) == 1.0);
}

TEST_CASE("quadratic basis values match the hand recursion") {
    // [0,0,0,1,2,2,2]/2 at x = 0.25: N0 = (1-2x)^2, N1 = 2x(2-3x), N2 = 2x^2
    const KnotVector kv(2, {0.0, 0.0, 0.0, 0.5, 1.0, 1.0, 1.0});
    const BasisSpan bs = basis_span(kv, 0.25, 0);
    CHECK(bs.first_index == 0);
    CHECK(bs.value(0, 0) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(bs.value(0, 1) == doctest::Approx(0.625).epsilon(1e-14));
    CHECK(bs.value(0, 2) == doctest::Approx(0.125).epsilon(1e-14));
}

TEST_CASE("open basis is interpolatory at both ends") {
    for (int p : {1, 2, 3, 5, 7}) {
        const KnotVector kv = make_open_uniform(6, p);
        const BasisSpan at0 = basis_span(kv, 0.0, 0);
        CHECK(at0.first_index == 0);
        CHECK(at0.value(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
        const BasisSpan at1 = basis_span(kv, 1.0, 0);
        CHECK(at1.first_index + at1.count == kv.count());
        CHECK(at1.value(0, at1.count - 1) == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(basis_span(make_open_uniform(4, 2), 1.5, 0), InvalidArgument);
    CHECK_THROWS_AS(basis_span(make_open_uniform(4, 2), 0.5, 3), InvalidArgument);
}

TEST_CASE("partition of unity and derivative sums") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int p : {2, 3, 4, 5, 6, 7}) {
        const KnotVector kv = make_open_uniform(9, p);
        const double h = kv.meshsize();
        for (int trial = 0; trial < 1000; ++trial) {
            const double x = unit(rng);
            const BasisSpan bs = basis_span(kv, x, 2);
            double s0 = 0, s1 = 0, s2 = 0;
            for (int j = 0; j < bs.count; ++j) {
                s0 += bs.value(0, j);
                s1 += bs.value(1, j);
                s2 += bs.value(2, j);
            }
            CHECK(std::abs(s0 - 1.0) < 1e-12);
            CHECK(std::abs(s1) * h < 1e-9);
            CHECK(std::abs(s2) * h * h < 1e-9);
        }
    }
}

TEST_CASE("local support: function i vanishes outside (knot_i, knot_{i+p+1})") {
    const int p = 3;
    const KnotVector kv = make_open_uniform(8, p);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double x = unit(rng);
        const BasisSpan bs = basis_span(kv, x, 0);
        CHECK(bs.count <= p + 1);
        for (int j = 0; j < bs.count; ++j) {
            const int i = bs.first_index + j;
            if (bs.value(0, j) != 0.0) {
                CHECK(x >= kv[i] - 1e-14);
                CHECK(x <= kv[i + p + 1] + 1e-14);
            }
        }
    }
}

TEST_CASE("Greville abscissae") {
    // knots [0,0,0,0,1,2,3,3,3,3]/3, p=3
    const KnotVector kv(3, {0, 0, 0, 0, 1.0 / 3, 2.0 / 3, 1, 1, 1, 1});
    const std::vector<double> g = greville(kv);
    const std::vector<double> expect = {0.0, 1.0 / 9, 1.0 / 3, 2.0 / 3, 8.0 / 9, 1.0};
    REQUIRE(g.size() == expect.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        CHECK(g[i] == doctest::Approx(expect[i]).epsilon(1e-14));

    for (int p : {2, 3, 4, 6}) {
        const std::vector<double> gp = greville(make_open_uniform(7, p));
        CHECK(gp.front() == doctest::Approx(0.0));
        CHECK(gp.back() == doctest::Approx(1.0));
    }

    // uniform periodic, even degree: Greville points sit at element midpoints
    for (int p : {4, 6}) {
        const SplineSpace1D space = SplineSpace1D::periodic_uniform(10, p);
        const std::vector<double> pts = space.greville_points();
        REQUIRE(static_cast<int>(pts.size()) == 10);
        for (int e = 0; e < 10; ++e)
            CHECK(pts[static_cast<std::size_t>(e)] ==
                  doctest::Approx((e + 0.5) / 10.0).epsilon(1e-12));
    }
}

TEST_CASE("spline evaluation reproduces constants and the identity") {
    for (int p : {2, 3, 5}) {
        const SplineSpace1D space = SplineSpace1D::open_uniform(7, p);
        const std::vector<double> ones(static_cast<std::size_t>(space.dim()), 1.0);
        const std::vector<double> gre = space.greville_points();
        for (double x : {0.0, 0.123, 0.5, 0.987, 1.0}) {
            CHECK(space.eval(ones, x, 0) == doctest::Approx(1.0).epsilon(1e-13));
            CHECK(space.eval(gre, x, 0) == doctest::Approx(x).epsilon(1e-12));
            CHECK(space.eval(gre, x, 1) == doctest::Approx(1.0).epsilon(1e-11));
        }
    }
    const SplineSpace1D space = SplineSpace1D::open_uniform(4, 2);
    CHECK_THROWS_AS(space.eval(std::vector<double>{1.0, 2.0}, 0.5, 0), InvalidArgument);
}

TEST_CASE("polynomial reproduction through Greville interpolation") {
    const SplineSpace1D space = SplineSpace1D::open_uniform(6, 3);
    auto cubic = [](double x) { return 1.0 + x - 2.0 * x * x + 0.5 * x * x * x; };
    const std::vector<double> coeffs = greville_interpolant(space, +cubic);
    for (int k = 0; k <= 100; ++k) {
        const double x = k / 100.0;
        CHECK(std::abs(space.eval(coeffs, x, 0) - cubic(x)) < 1e-10);
    }
}

TEST_CASE("derivatives agree with centered finite differences") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unit(0.05, 0.95);
    for (int p : {3, 4, 5}) {
        const SplineSpace1D space = SplineSpace1D::open_uniform(9, p);
        const double h = space.meshsize();
        const double step = 1e-6 * h;
        std::vector<double> coeffs(static_cast<std::size_t>(space.dim()));
        for (auto& c : coeffs) c = unit(rng);
        for (int trial = 0; trial < 50; ++trial) {
            double x = unit(rng);
            // keep away from knots so the one-sided stencil stays in-element
            x = (std::floor(x / h) + 0.5 + 0.3 * (unit(rng) - 0.5)) * h;
            const double d1 = space.eval(coeffs, x, 1);
            const double fd1 =
                (space.eval(coeffs, x + step, 0) - space.eval(coeffs, x - step, 0)) /
                (2.0 * step);
            CHECK(std::abs(d1 - fd1) <= 1e-6 * std::max(1.0, std::abs(d1)));
            const double d2 = space.eval(coeffs, x, 2);
            const double fd2 =
                (space.eval(coeffs, x + step, 1) - space.eval(coeffs, x - step, 1)) /
                (2.0 * step);
            CHECK(std::abs(d2 - fd2) <= 1e-5 * std::max(1.0, std::abs(d2)));
        }
    }
}

TEST_CASE("periodic spaces wrap values and derivatives") {
    for (int p : {3, 4, 5}) {
        const SplineSpace1D space = SplineSpace1D::periodic_uniform(10, p);
        CHECK(space.dim() == 10);
        std::mt19937_64 rng(41);
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        std::vector<double> coeffs(10);
        for (auto& c : coeffs) c = unit(rng);
        for (int r = 0; r < p; ++r)
            CHECK(std::abs(space.eval(coeffs, 0.0, r) - space.eval(coeffs, 1.0, r)) <
                  1e-10 * std::max(1.0, std::abs(space.eval(coeffs, 0.0, r))));
        // constants are exactly periodic reproduced
        const std::vector<double> ones(10, 1.0);
        for (double x : {0.0, 0.31, 0.77, 1.0})
            CHECK(space.eval(ones, x, 0) == doctest::Approx(1.0).epsilon(1e-13));
    }
}
