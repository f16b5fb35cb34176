#include "gasvol/error.hpp"
#include "gasvol/simulate.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

using namespace gasvol;

namespace {

double mean_square(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s / static_cast<double>(v.size());
}

}  // namespace

TEST_SUITE("simulate") {
    TEST_CASE("zero innovations give a zero path") {
        const std::vector<double> eps(50, 0.0);
        for (const SimModel& m : {SimModel{Arch1{}}, SimModel{Garch11{}}, SimModel{HtModel{}},
                                  SimModel{ArchEpsTilde{}}}) {
            for (double x : simulate_with_innovations(m, eps)) CHECK(x == 0.0);
        }
    }

    TEST_CASE("hand-checked recursions") {
        const std::vector<double> eps{1.0, -2.0, 0.5};
        const auto arch = simulate_with_innovations(Arch1{}, eps);
        CHECK(arch[0] == doctest::Approx(std::sqrt(0.2)));
        CHECK(arch[1] == doctest::Approx(-2.0 * std::sqrt(0.1 + 0.5 * 0.2)));
        const auto garch = simulate_with_innovations(Garch11{}, eps);
        const double s2 = 0.1 + 0.3 * 0.2 + 0.2 * 0.2;
        CHECK(garch[1] == doctest::Approx(-2.0 * std::sqrt(s2)));
        const auto ht = simulate_with_innovations(HtModel{}, eps);
        CHECK(ht[0] == doctest::Approx(ht_sigma(0.0)));
        CHECK(ht[1] == doctest::Approx(-2.0 * ht_sigma(ht[0])));
    }

    TEST_CASE("true volatility examples") {
        CHECK(*true_sigma2(HtModel{}, -1.2) == doctest::Approx(0.187087).epsilon(1e-5));
        CHECK(*true_sigma2(Arch1{}, 1.0) == doctest::Approx(0.6));
        CHECK(*true_sigma2(Arch1{}, 0.0) == doctest::Approx(0.1));
        CHECK_FALSE(true_sigma2(Garch11{}, 0.5).has_value());
        CHECK(*true_sigma2(ArchEpsTilde{}, 1.0) == doctest::Approx(0.6));
    }

    TEST_CASE("same seed, same series") {
        const SimSpec spec{HtModel{}, 300, 500, 42};
        const auto a = simulate(spec);
        const auto b = simulate(spec);
        REQUIRE(a.size() == 300);
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
        const auto c = simulate(SimSpec{HtModel{}, 300, 500, 43});
        CHECK(a[0] != c[0]);
    }

    TEST_CASE("GARCH unconditional variance and stationarity") {
        const auto s = simulate(SimSpec{Garch11{}, 40000, 500, 7});
        const auto v = s.values();
        CHECK(mean_square(v) == doctest::Approx(0.2).epsilon(0.08));
        const auto first = mean_square(v.subspan(0, v.size() / 2));
        const auto second = mean_square(v.subspan(v.size() / 2));
        CHECK(std::abs(first - second) < 0.2 * 0.2);
    }

    TEST_CASE("HT model is asymmetric") {
        CHECK(*true_sigma2(HtModel{}, 1.0) > *true_sigma2(HtModel{}, -1.0));
        const auto s = simulate(SimSpec{HtModel{}, 20000, 500, 9});
        double pos = 0.0, neg = 0.0;
        std::size_t np = 0, nn = 0;
        for (std::size_t t = 1; t < s.size(); ++t) {
            if (s[t - 1] > 0.2) {
                pos += s[t] * s[t];
                ++np;
            } else if (s[t - 1] < -0.2) {
                neg += s[t] * s[t];
                ++nn;
            }
        }
        CHECK(pos / np > 1.2 * (neg / nn));
    }

    TEST_CASE("specification errors") {
        CHECK_THROWS_AS(simulate(SimSpec{Arch1{}, 10, 500, 1}), ConfigError);
        CHECK_THROWS_AS(simulate(SimSpec{Arch1{}, 100, 10, 1}), ConfigError);
        CHECK_THROWS_AS(simulate(SimSpec{Garch11{GarchParams{0.1, 0.7, 0.4}}, 100, 500, 1}), ConfigError);
        CHECK_THROWS_AS(simulate(SimSpec{Arch1{0.1, 1.2}, 100, 500, 1}), ConfigError);
        CHECK(model_name(HtModel{}) == "ht");
    }
}
