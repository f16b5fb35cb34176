#include "gasvol/error.hpp"
#include "gasvol/local_linear.hpp"
#include "gasvol/rng.hpp"
#include "gasvol/simulate.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

using namespace gasvol;

namespace {

DesignPairs random_design(std::uint64_t seed, std::size_t n, double slope, double intercept) {
    Rng rng(seed);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = rng.normal();
        y[i] = intercept + slope * x[i];
    }
    return DesignPairs(x, y);
}

}  // namespace

TEST_SUITE("local_linear") {
    TEST_CASE("constant responses are reproduced") {
        Rng rng(1);
        std::vector<double> x(200), y(200, 1.7);
        for (auto& v : x) v = rng.normal();
        const DesignPairs pairs(x, y);
        for (double at : {-1.0, 0.0, 0.4, 1.3}) CHECK(std::abs(lle_fit(pairs, at, 0.3) - 1.7) < 1e-12);
    }

    TEST_CASE("affine responses are reproduced for any h and x") {
        const DesignPairs pairs = random_design(2, 300, 3.0, 2.0);
        for (double h : {0.05, 0.2, 0.8, 3.0}) {
            for (double at : {-1.5, -0.2, 0.0, 0.9, 1.8}) {
                const double expect = 2.0 + 3.0 * at;
                CHECK(std::abs(lle_fit(pairs, at, h) - expect) <= 1e-10 * std::max(1.0, std::abs(expect)));
            }
        }
    }

    TEST_CASE("weights sum to one and kill the first moment") {
        const DesignPairs pairs = random_design(3, 400, 0.0, 0.0);
        for (double at : {-1.0, 0.0, 0.7}) {
            const auto w = effective_weights(pairs, at, 0.4);
            double s0 = 0.0, s1 = 0.0;
            for (std::size_t t = 0; t < pairs.size(); ++t) {
                s0 += w.weights[t];
                s1 += w.weights[t] * (pairs.regressor()[t] - at);
            }
            CHECK(std::abs(s0 - 1.0) < 1e-10);
            CHECK(std::abs(s1) < 1e-10);
        }
    }

    TEST_CASE("symmetric design gives equal weights on mirrored points") {
        std::vector<double> x{-0.8, -0.5, -0.2, 0.2, 0.5, 0.8}, y{1, 2, 3, 4, 5, 6};
        const DesignPairs pairs(x, y);
        const auto w = effective_weights(pairs, 0.0, 1.0);
        CHECK(w.weights[0] == doctest::Approx(w.weights[5]).epsilon(1e-14));
        CHECK(w.weights[1] == doctest::Approx(w.weights[4]).epsilon(1e-14));
        CHECK(w.weights[2] == doctest::Approx(w.weights[3]).epsilon(1e-14));
    }

    TEST_CASE("symmetric five-point design: weights are the renormalized kernel") {
        const double h = 0.4;
        std::vector<double> x{-h, -h / 2, 0.0, h / 2, h}, y{1, 2, 3, 4, 5};
        const DesignPairs pairs(x, y);
        const auto w = effective_weights(pairs, 0.0, h);
        CHECK(w.inflations == 0);
        const double total = 0.5625 + 0.75 + 0.5625;
        CHECK(w.weights[0] == doctest::Approx(0.0));
        CHECK(w.weights[1] == doctest::Approx(0.5625 / total).epsilon(1e-14));
        CHECK(w.weights[2] == doctest::Approx(0.75 / total).epsilon(1e-14));
        CHECK(w.weights[3] == doctest::Approx(0.5625 / total).epsilon(1e-14));
    }

    TEST_CASE("sparse window inflates the bandwidth") {
        const DesignPairs pairs = random_design(4, 200, 1.0, 0.0);
        const auto fit = lle_fit_detail(pairs, 4.0, 0.05);
        CHECK(fit.inflations > 0);
        CHECK(fit.h == doctest::Approx(0.05 * std::pow(kInflateFactor, fit.inflations)));
        CHECK(fit.window_count >= kMinWindowPoints);
    }

    TEST_CASE("degenerate window is reported with its point") {
        std::vector<double> x(50, 1.0), y(50, 2.0);
        const DesignPairs pairs(x, y);
        try {
            (void)lle_fit(pairs, 1.0, 0.1);
            FAIL("expected EstimationError");
        } catch (const EstimationError& e) {
            CHECK(e.point() == 1.0);
        }
        CHECK_THROWS_AS(lle_fit(pairs, 1.0, -0.1), EstimationError);
    }

    TEST_CASE("fit is invariant under reordering of the pairs") {
        const ReturnSeries s = simulate(SimSpec{Arch1{}, 500, 500, 5});
        const DesignPairs pairs(s);
        std::vector<std::size_t> perm(pairs.size());
        std::iota(perm.begin(), perm.end(), 0);
        Rng rng(6);
        for (std::size_t i = perm.size() - 1; i > 0; --i) {
            std::swap(perm[i], perm[static_cast<std::size_t>(rng.uniform() * static_cast<double>(i + 1))]);
        }
        std::vector<double> x, y;
        for (auto i : perm) {
            x.push_back(pairs.regressor()[i]);
            y.push_back(pairs.response()[i]);
        }
        const DesignPairs shuffled(x, y);
        for (double at : {-0.5, 0.0, 0.3}) {
            CHECK(lle_fit(pairs, at, 0.3) == doctest::Approx(lle_fit(shuffled, at, 0.3)).epsilon(1e-12));
        }
    }
}
