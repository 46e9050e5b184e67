#include <doctest.h>

#include <cmath>
#include <complex>

#include "boolsd/errors.hpp"
#include "boolsd/quadrature.hpp"
#include "oracles.hpp"

using boolsd::integrate;
using boolsd::integrate_complex;
using Complex = std::complex<double>;

TEST_CASE("polynomials and classics") {
    CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) == doctest::Approx(1.0 / 3).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI) ==
          doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("endpoint square-root singularity") {
    // int_0^1 1/sqrt(x) dx = 2
    const double v = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("semi-infinite and doubly infinite ranges") {
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, inf) ==
          doctest::Approx(1.0).epsilon(1e-11));
    CHECK(integrate([](double x) { return std::exp(-0.5 * x * x); }, -inf, inf) ==
          doctest::Approx(std::sqrt(2.0 * M_PI)).epsilon(1e-11));
    CHECK(integrate([](double x) { return 1.0 / (1.0 + x * x); }, -inf, inf) ==
          doctest::Approx(M_PI).epsilon(1e-11));
}

TEST_CASE("breakpoints steer the subdivision") {
    // |x| has a kink at 0
    const double cuts[] = {0.0};
    CHECK(integrate([](double x) { return std::fabs(x); }, -1.0, 2.0, {}, cuts) ==
          doctest::Approx(2.5).epsilon(1e-13));
}

TEST_CASE("complex Cauchy kernel near the axis") {
    // int_{-1}^{1} 1/(z - x) dx = log(z+1) - log(z-1), checked against Romberg
    const Complex z(0.3, 1e-4);
    const double cuts[] = {z.real()};
    const Complex got = integrate_complex([z](double x) { return 1.0 / (z - x); }, -1.0, 1.0,
                                          {}, cuts);
    const Complex expect = std::log(z + 1.0) - std::log(z - 1.0);
    CHECK(std::abs(got - expect) < 1e-9);
}

TEST_CASE("exhaustion raises a diagnostic carrying the partial value") {
    boolsd::QuadOptions opt;
    opt.max_intervals = 4;
    opt.abs_tol = 1e-300;
    opt.rel_tol = 1e-300;
    CHECK_THROWS_AS(integrate([](double x) { return std::sin(50.0 * x) / (1e-30 + x * x); },
                              0.0, 1.0, opt),
                    boolsd::QuadratureError);
}

TEST_CASE("matches an independent Romberg oracle on a smooth integrand") {
    auto f = [](double x) { return std::exp(x) * std::cos(3.0 * x); };
    const double want = oracle::romberg(f, 0.0, 2.0);
    CHECK(integrate(f, 0.0, 2.0) == doctest::Approx(want).epsilon(1e-11));
}
