#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <complex>
#include <vector>

#include "causet/rng.hpp"
#include "causet/schwartz.hpp"

using namespace causet;
using complexd = std::complex<double>;

namespace {

// Independent quadrature oracle: composite Simpson over a fresh sampling of
// the continuum function at four times the resolution.
double oracle_expectation(const std::function<double(double)>& f, double R, double h) {
    const std::size_t m = static_cast<std::size_t>(std::llround(2.0 * R / (h / 4.0)));
    const double step = 2.0 * R / static_cast<double>(m);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i <= m; ++i) {
        const double x = -R + static_cast<double>(i) * step;
        const double w = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        const double density = f(x) * f(x);
        num += w * x * density;
        den += w * density;
    }
    return num / den;
}

TestFunction gaussian_mixture(CounterStream& rng, int components) {
    std::vector<TestFunction> parts;
    std::vector<complexd> coeffs;
    for (int i = 0; i < components; ++i) {
        parts.push_back(TestFunction::gaussian(rng.next_in(-3, 3), rng.next_in(0.5, 2.0)));
        coeffs.emplace_back(rng.next_in(-2, 2), rng.next_in(-2, 2));
    }
    return superpose(parts, coeffs);
}

}  // namespace

TEST_CASE("seminorm reference values for the unit gaussian") {
    const TestFunction f = TestFunction::gaussian(0.0);

    CHECK(std::abs(seminorm(f, {0, 0}) - 1.0) < 1e-10);
    // sup of |x e^{-x^2}| is 1/sqrt(2e) at x = 1/sqrt(2)
    CHECK(std::abs(seminorm(f, {1, 0}) - 0.42888194248035344) < 1e-9);
    // sup of |d/dx e^{-x^2}| is sqrt(2/e)
    CHECK(std::abs(seminorm(f, {0, 1}) - 0.85776388496070688) < 1e-8);
}

TEST_CASE("higher derivative stencils against the analytic suprema") {
    const TestFunction f = TestFunction::gaussian(0.0);
    CHECK(std::abs(seminorm(f, {0, 2}) - 2.0) < 1e-6);
    CHECK(std::abs(seminorm(f, {0, 3}) - 3.903566145539902) < 1e-6);
    CHECK(std::abs(seminorm(f, {0, 4}) - 12.0) < 1e-5);
}

TEST_CASE("seminorm of the zero function vanishes for every index") {
    const TestFunction zero = TestFunction::sampled([](double) { return complexd{0, 0}; });
    for (unsigned alpha = 0; alpha <= 4; ++alpha) {
        for (unsigned beta = 0; beta <= 4; ++beta) {
            CHECK(seminorm(zero, {alpha, beta}) == 0.0);
        }
    }
}

TEST_CASE("seminorm index validation") {
    const TestFunction f = TestFunction::gaussian(0.0);
    CHECK_THROWS_AS(seminorm(f, {0, 5}), std::invalid_argument);
    CHECK_THROWS_AS(seminorm(f, {5, 0}), std::invalid_argument);

    const TestFunction coarse(1.0, std::vector<complexd>(4, {1.0, 0.0}));
    CHECK_THROWS_AS(seminorm(coarse, {0, 2}), std::invalid_argument);
}

TEST_CASE("seminorm is absolutely homogeneous") {
    // beta <= 1 keeps the finite-difference sums well conditioned; higher
    // derivative stencils amplify rounding past the 1e-12 scale
    CounterStream rng(2718);
    for (int trial = 0; trial < 10; ++trial) {
        const TestFunction f = gaussian_mixture(rng, 3);
        const complexd c{rng.next_in(-3, 3), rng.next_in(-3, 3)};
        const TestFunction scaled = superpose(std::array{f}, std::array{c});
        for (unsigned alpha = 0; alpha <= 1; ++alpha) {
            for (unsigned beta = 0; beta <= 1; ++beta) {
                const double lhs = seminorm(scaled, {alpha, beta});
                const double rhs = std::abs(c) * seminorm(f, {alpha, beta});
                CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, rhs));
            }
        }
    }
}

TEST_CASE("seminorm satisfies the triangle inequality on gaussian mixtures") {
    CounterStream rng(1618);
    for (int trial = 0; trial < 15; ++trial) {
        const TestFunction f = gaussian_mixture(rng, 2);
        const TestFunction g = gaussian_mixture(rng, 3);
        const TestFunction sum = superpose(std::array{f, g}, std::array{complexd{1}, complexd{1}});
        for (unsigned alpha = 0; alpha <= 2; ++alpha) {
            for (unsigned beta = 0; beta <= 2; ++beta) {
                const SeminormIndex idx{alpha, beta};
                CHECK(seminorm(sum, idx) <= seminorm(f, idx) + seminorm(g, idx) + 1e-12);
            }
        }
    }
}

TEST_CASE("derivative seminorm converges at fourth order from the default grid") {
    const double analytic = 0.85776388496070688;  // sup |(e^{-x^2})'|
    double errs[3];
    for (int k = 0; k < 3; ++k) {
        const double h = default_spacing / static_cast<double>(1 << k);
        const TestFunction f = TestFunction::gaussian(0.0, 1.0, default_half_width, h);
        errs[k] = std::abs(seminorm(f, {0, 1}) - analytic);
    }
    const double order = std::log2(errs[0] / errs[2]) / 2.0;
    CHECK(order >= 3.7);
}

TEST_CASE("expectation of centered and shifted gaussians") {
    CHECK(std::abs(expectation(TestFunction::gaussian(0.0))) < 1e-10);

    const TestFunction shifted = TestFunction::gaussian(2.0);
    const double oracle = oracle_expectation(
        [](double x) { return std::exp(-(x - 2.0) * (x - 2.0)); }, default_half_width,
        default_spacing);
    CHECK(std::abs(expectation(shifted) - 2.0) < 1e-8);
    CHECK(std::abs(expectation(shifted) - oracle) < 1e-8);
}

TEST_CASE("expectation of a perturbed gaussian matches the oracle") {
    const auto perturbed = [](double x) { return std::exp(-x * x) * (1.0 + x / 10.0); };
    const TestFunction f =
        TestFunction::sampled([&](double x) { return complexd{perturbed(x), 0.0}; });
    const double oracle = oracle_expectation(perturbed, default_half_width, default_spacing);
    CHECK(std::abs(expectation(f) - oracle) < 1e-8);
}

TEST_CASE("expectation rejects the zero function") {
    const TestFunction zero = TestFunction::sampled([](double) { return complexd{0, 0}; });
    CHECK_THROWS_AS(expectation(zero), std::domain_error);
}

TEST_CASE("expectation is scale invariant") {
    const TestFunction f = TestFunction::gaussian(1.5, 0.8);
    const double q = expectation(f);
    for (complexd c : {complexd{2.5, 0.0}, complexd{1.0, 2.0}, complexd{-0.3, 0.1}}) {
        const TestFunction scaled = superpose(std::array{f}, std::array{c});
        CHECK(std::abs(expectation(scaled) - q) < 1e-12);
    }
}

TEST_CASE("expectation moves continuously with the center") {
    double previous = -10.0;
    double max_jump = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double s = -1.0 + 2.0 * static_cast<double>(i) / 99.0;
        const double q = expectation(TestFunction::gaussian(s));
        if (i > 0) max_jump = std::max(max_jump, std::abs(q - previous));
        CHECK(q > previous);  // monotone
        previous = q;
    }
    CHECK(max_jump < 10.0 * default_spacing);
}

TEST_CASE("window membership is strict") {
    const TestFunction shifted = TestFunction::gaussian(2.0);
    CHECK(in_preimage(shifted, {1.0, 3.0}));
    CHECK(!in_preimage(TestFunction::gaussian(0.0), {1.0, 3.0}));

    const double q = expectation(shifted);
    CHECK(!in_preimage(shifted, {q, q + 1.0}));  // boundary excluded
    CHECK_THROWS_AS(in_preimage(shifted, {3.0, 1.0}), std::invalid_argument);
}

TEST_CASE("superposition") {
    const TestFunction f = TestFunction::gaussian(1.0);

    const TestFunction same = superpose(std::array{f}, std::array{complexd{1.0, 0.0}});
    CHECK(same.values()[100] == f.values()[100]);
    CHECK(expectation(same) == expectation(f));

    const TestFunction cancel =
        superpose(std::array{f, f}, std::array{complexd{1.0}, complexd{-1.0}});
    CHECK(cancel.max_magnitude() == 0.0);
    CHECK_THROWS_AS(expectation(cancel), std::domain_error);

    const TestFunction pair = superpose(
        std::array{TestFunction::gaussian(2.0), TestFunction::gaussian(-2.0)},
        std::array{complexd{1.0}, complexd{1.0}});
    CHECK(std::abs(expectation(pair)) < 1e-8);

    const TestFunction other_grid = TestFunction::gaussian(0.0, 1.0, 8.0);
    CHECK_THROWS_AS(superpose(std::array{f, other_grid}, std::array{complexd{1.0}, complexd{1.0}}),
                    std::invalid_argument);
}

TEST_CASE("rapid decay proxy") {
    CHECK(TestFunction::gaussian(2.0).rapidly_decaying());
    CHECK(!TestFunction::gaussian(9.5).rapidly_decaying());
}

TEST_CASE("grid construction") {
    const TestFunction f = TestFunction::gaussian(0.0);
    CHECK(f.size() == 5121);
    CHECK(f.spacing() == default_spacing);
    CHECK(f.x(0) == -default_half_width);
    CHECK(f.x(f.size() - 1) == default_half_width);
    CHECK(f.x(2560) == 0.0);

    CHECK_THROWS_AS(TestFunction(1.0, std::vector<complexd>{{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(TestFunction(-1.0, std::vector<complexd>(8, {1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(TestFunction::gaussian(0.0, -1.0), std::invalid_argument);
}
