#include <doctest.h>

#include <cmath>

#include "boolsd/catalog.hpp"
#include "boolsd/errors.hpp"
#include "boolsd/grid.hpp"
#include "boolsd/measure.hpp"
#include "oracles.hpp"

using namespace boolsd;

namespace {
const double kInf = std::numeric_limits<double>::infinity();

SpectralMeasure gaussian_measure() {
    return SpectralMeasure(
        {}, [](double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI); },
        {{-kInf, kInf}}, 1.0);
}
}  // namespace

TEST_CASE("construction invariants") {
    CHECK_THROWS_AS(SpectralMeasure::from_atoms({{0.0, -1.0}}), DomainError);
    CHECK_THROWS_AS(SpectralMeasure::from_atoms({{1.0, 0.5}, {1.0, 0.5}}), DomainError);
    CHECK_THROWS_AS(SpectralMeasure({}, [](double) { return -1.0; }, {{0.0, 1.0}}, {}),
                    DomainError);
    // declared mass off by more than 1e-6 is a hard error
    CHECK_THROWS_AS(SpectralMeasure::from_atoms({{0.0, 1.0}}, 1.01), MassMismatchError);
    CHECK(gaussian_measure().total_mass() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("dilate") {
    const auto mu = gaussian_measure();
    SUBCASE("identity at c = 1") {
        const auto same = dilate(mu, DilationFactor(1.0));
        for (double x : {-1.0, 0.3, 2.0}) CHECK(same.density_at(x) == mu.density_at(x));
    }
    SUBCASE("D_{sqrt v}(N(0,1)) = N(0,v)") {
        const double v = 2.7;
        const auto scaled = dilate(mu, DilationFactor(std::sqrt(v)));
        for (double x : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
            const double expect = std::exp(-0.5 * x * x / v) / std::sqrt(2.0 * M_PI * v);
            CHECK(scaled.density_at(x) == doctest::Approx(expect).epsilon(1e-12));
        }
    }
    SUBCASE("symmetric two-point fixed by D_{-1}") {
        const auto bern = SpectralMeasure::from_atoms({{-1.0, 0.5}, {1.0, 0.5}}, 1.0);
        const auto flipped = dilate(bern, DilationFactor(-1.0));
        CHECK(flipped.atom_mass_at(1.0) == 0.5);
        CHECK(flipped.atom_mass_at(-1.0) == 0.5);
    }
    SUBCASE("mass preserved, round trip exact on atoms") {
        const auto mu2 = SpectralMeasure::from_atoms({{-2.0, 0.25}, {0.5, 0.75}}, 1.0);
        const auto back = dilate(dilate(mu2, DilationFactor(3.0)), DilationFactor(1.0 / 3.0));
        CHECK(back.atom_mass_at(-2.0) == 0.25);
        CHECK(back.atom_mass_at(0.5) == 0.75);
        CHECK(dilate(mu, DilationFactor(2.0)).total_mass() ==
              doctest::Approx(1.0).epsilon(1e-9));
    }
    CHECK_THROWS_AS(DilationFactor(0.0), DomainError);
}

TEST_CASE("shift_classical") {
    const auto mu = gaussian_measure();
    const auto shifted = shift_classical(mu, 1.7);
    for (double x : linspace(-3.0, 5.0, 10))
        CHECK(shifted.density_at(x) ==
              doctest::Approx(std::exp(-0.5 * (x - 1.7) * (x - 1.7)) / std::sqrt(2.0 * M_PI))
                  .epsilon(1e-12));
    const auto delta = shift_classical(SpectralMeasure::dirac(2.0), -3.0);
    CHECK(delta.atom_mass_at(-1.0) == 1.0);
    const auto same = shift_classical(mu, 0.0);
    CHECK(same.density_at(0.4) == mu.density_at(0.4));
    CHECK(shifted.total_mass() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("triplet_from_pair: tau concentrated at 0 is pure Gaussian part") {
    GeneratingPair pair{0.0, SpectralMeasure::from_atoms({{0.0, 0.7}})};
    const auto t = triplet_from_pair(pair);
    CHECK(t.gaussian_a == doctest::Approx(0.7));
    CHECK(t.atoms.empty());
    CHECK(t.profile.is_zero());
    CHECK(t.gamma == doctest::Approx(0.0));
}

TEST_CASE("triplet_from_pair: symmetric tau gives gamma = 0") {
    // atoms +-1/2 plus a symmetric bump density
    GeneratingPair pair{
        0.0, SpectralMeasure({{-0.5, 0.2}, {0.5, 0.2}},
                             [](double x) { return std::exp(-x * x); }, {{-3.0, 3.0}}, {})};
    const auto t = triplet_from_pair(pair);
    CHECK(t.gaussian_a == 0.0);
    CHECK(t.gamma == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("pair_from_triplet: pure Gaussian triplet is delta_0 tau") {
    LevyTriplet t{1.0, {}, {}, 0.0};
    const auto pair = pair_from_triplet(t);
    CHECK(pair.b == doctest::Approx(0.0));
    CHECK(pair.tau.atom_mass_at(0.0) == doctest::Approx(1.0));
    CHECK_FALSE(pair.tau.has_density());
}

TEST_CASE("pair_from_triplet: Cauchy Levy profile ell = 1/pi gives tau Cauchy") {
    // nu(dx) = (1/pi)/x^2 * x^2/( ...) -> tau density (1/pi)/(1+x^2), b = 0
    auto ell = [](double) { return 1.0 / M_PI; };
    KProfile prof = KProfile::from_ell(ell, -kInf, kInf, profile_grid(-30.0, 30.0, 301));
    LevyTriplet t{0.0, prof, {}, 0.0};
    const auto pair = pair_from_triplet(t);
    CHECK(pair.b == doctest::Approx(0.0).epsilon(1e-9));
    for (double x : {-2.0, 0.0, 0.7, 5.0})
        CHECK(pair.tau.density_at(x) ==
              doctest::Approx(1.0 / (M_PI * (1.0 + x * x))).epsilon(1e-12));
}

TEST_CASE("condition (T) violations are rejected") {
    CHECK_THROWS_AS(pair_from_triplet(LevyTriplet{-0.1, {}, {}, 0.0}), InvalidTripletError);
    CHECK_THROWS_AS(pair_from_triplet(LevyTriplet{0.0, {}, {{0.0, 1.0}}, 0.0}),
                    InvalidTripletError);
}

TEST_CASE("round trip on the Kesten triplet") {
    const auto entry = catalog::kesten(1.5);
    const double c = 2.0 * std::sqrt(0.5);
    auto kc = entry.k_closed;
    auto ell = [kc, c](double x) { return (x != 0.0 && std::fabs(x) < c) ? std::fabs(x) * kc(x) : 0.0; };
    KProfile prof = KProfile::from_ell(ell, -c, c, profile_grid(-c, c, 301));
    LevyTriplet t{0.0, prof, {}, 0.25};
    const auto pair = pair_from_triplet(t);
    const auto t2 = triplet_from_pair(pair);
    CHECK(t2.gaussian_a == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(t2.gamma == doctest::Approx(0.25).epsilon(1e-9));
    double sup = 0.0;
    for (double x : linspace(-c + 1e-3, c - 1e-3, 41)) {
        if (x == 0.0) continue;
        sup = std::max(sup, std::fabs(t2.profile.ell_at(x) - ell(x)));
    }
    CHECK(sup < 1e-6);
}

TEST_CASE("20 randomized pairs round trip") {
    for (int trial = 0; trial < 20; ++trial) {
        const double b = oracle::uniform(-3.0, 3.0);
        std::vector<Atom> atoms;
        if (trial % 2 == 0) atoms.push_back({oracle::uniform(-2.0, 2.0), oracle::uniform(0.1, 1.0)});
        if (trial % 3 == 0) atoms.push_back({3.0, oracle::uniform(0.1, 0.5)});
        const double center = oracle::uniform(-1.0, 1.0);
        const double width = oracle::uniform(0.5, 2.0);
        const double scale = oracle::uniform(0.1, 2.0);
        GeneratingPair pair{
            b, SpectralMeasure(std::move(atoms),
                               [center, width, scale](double x) {
                                   const double u = (x - center) / width;
                                   return scale * std::exp(-u * u);
                               },
                               {{center - 6.0 * width, center + 6.0 * width}}, {})};
        const auto t = triplet_from_pair(pair);
        const auto pair2 = pair_from_triplet(t);
        CHECK(pair2.b == doctest::Approx(pair.b).epsilon(1e-9));
        CHECK(pair2.tau.atom_mass_at(0.0) ==
              doctest::Approx(pair.tau.atom_mass_at(0.0)).epsilon(1e-9));
        double sup = 0.0;
        for (double x : linspace(center - 5.0 * width, center + 5.0 * width, 33))
            sup = std::max(sup, std::fabs(pair2.tau.density_at(x) - pair.tau.density_at(x)));
        CHECK(sup < 1e-6);
    }
}
