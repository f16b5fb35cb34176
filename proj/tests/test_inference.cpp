#include "gasvol/error.hpp"
#include "gasvol/gas.hpp"
#include "gasvol/inference.hpp"
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

GasModel fitted(const SimModel& model, std::size_t n, std::uint64_t seed) {
    GasOptions opts;
    opts.pilot.seed = seed;
    return GasModel(simulate(SimSpec{model, n, 500, seed}), opts);
}

}  // namespace

TEST_SUITE("inference") {
    TEST_CASE("band uses the normal quantile and brackets the centre") {
        const GasModel m = fitted(Arch1{}, 1000, 1);
        const std::vector<double> grid{-0.5, -0.2, 0.0, 0.2, 0.5};
        const auto curve = confidence_band(m, grid, WidthConfig::global());
        CHECK(std::abs(curve.z - 1.959964) < 1e-6);
        for (const auto& p : curve.points) {
            REQUIRE(p.ok());
            CHECK(p.lower <= p.center);
            CHECK(p.center <= p.upper);
            CHECK(p.center == doctest::Approx(p.estimate - p.bias_correction));
            CHECK(p.half_width == doctest::Approx(curve.z * std::sqrt(p.plan->functionals.v_hat /
                                                                      (static_cast<double>(m.pairs().size()) * p.h))));
            CHECK(p.bias_correction == doctest::Approx(0.5 * p.h * p.h * p.plan->functionals.b_hat));
        }
    }

    TEST_CASE("bands are nested in the confidence level") {
        const GasModel m = fitted(Arch1{}, 800, 2);
        const std::vector<double> grid{-0.4, 0.0, 0.3};
        BandOptions narrow, wide;
        narrow.alpha = 0.10;
        wide.alpha = 0.01;
        const auto a = confidence_band(m, grid, WidthConfig::local_default(), narrow);
        const auto b = confidence_band(m, grid, WidthConfig::local_default(), wide);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            CHECK(b.points[i].lower < a.points[i].lower);
            CHECK(b.points[i].upper > a.points[i].upper);
        }
    }

    TEST_CASE("zero curvature means no bias correction") {
        Rng rng(3);
        std::vector<double> x(500), y(500);
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = rng.normal();
            y[i] = 0.5 * std::pow(rng.normal(), 2);
        }
        PilotNetwork flat;
        flat.bias = 0.5;
        const std::vector<double> grid{0.0, 0.5};
        const auto curve = confidence_band(DesignPairs(x, y), flat, 3.0, grid, WidthConfig::global());
        for (const auto& p : curve.points) {
            CHECK(p.bias_correction == 0.0);
            CHECK(p.center == p.estimate);
        }
    }

    TEST_CASE("out-of-support point is reported per point") {
        const GasModel m = fitted(Arch1{}, 500, 4);
        const std::vector<double> grid{0.0, 50.0};
        const auto curve = confidence_band(m, grid, WidthConfig::global());
        CHECK(curve.points[0].ok());
        CHECK_FALSE(curve.points[1].ok());
        CHECK_THROWS_AS(confidence_band(m, grid, WidthConfig::global(), BandOptions{1.5, true, false}), ConfigError);
    }

    TEST_CASE("interval average") {
        Rng rng(5);
        std::vector<double> x(400), y(400, 0.3);
        for (auto& v : x) v = rng.normal();
        PilotNetwork flat;
        flat.bias = 0.3;
        const DesignPairs constant(x, y);
        const auto avg = interval_averaged_estimate(constant, flat, 3.0, make_window(0.0, 1.0, 400));
        CHECK(avg.sigma2 == doctest::Approx(0.3).epsilon(1e-10));

        const GasModel m = fitted(Arch1{}, 1000, 5);
        const auto w = interval_averaged_estimate(m.pairs(), m.net(), m.m4eps(),
                                                  make_window(0.1, 0.6, m.pairs().size()));
        double sum = 0.0;
        std::size_t count = 0;
        for (double xi : m.pairs().regressor()) {
            if (xi >= w.lo && xi <= w.hi) {
                sum += lle_fit(m.pairs(), xi, w.h);
                ++count;
            }
        }
        CHECK(w.count == count);
        CHECK(w.sigma2 == doctest::Approx(sum / static_cast<double>(count)).epsilon(1e-10));
    }

    TEST_CASE("interval average on model 1 matches the occupancy-weighted truth") {
        const GasModel m = fitted(Arch1{}, 5000, 6);
        const IntervalWindow w = make_window(0.0, 1.2, m.pairs().size());
        const auto avg = interval_averaged_estimate(m.pairs(), m.net(), m.m4eps(), w);
        double truth = 0.0;
        std::size_t count = 0;
        for (double x : m.pairs().regressor()) {
            if (x >= avg.lo && x <= avg.hi) {
                truth += 0.1 + 0.5 * x * x;
                ++count;
            }
        }
        truth /= static_cast<double>(count);
        CHECK(std::abs(avg.sigma2 - truth) <= 0.10 * truth);
    }

    TEST_CASE("symmetry test critical value and decision rule") {
        const GasModel m = fitted(Garch11{}, 1000, 7);
        const auto res = symmetry_test(m, 20, 0.01, WidthConfig::global());
        CHECK(std::abs(res.critical_value - 3.29053) < 1e-5);
        CHECK(res.pairs.size() == 10);
        bool any = false;
        for (const auto& p : res.pairs) {
            CHECK(p.exceeds == (std::abs(p.t_stat) >= res.critical_value));
            any = any || p.exceeds;
        }
        CHECK(res.reject == any);
        const auto never = symmetry_test(m, 20, 0.0, WidthConfig::global());
        CHECK(std::isinf(never.critical_value));
        CHECK_FALSE(never.reject);
        CHECK_THROWS_AS(symmetry_test(m, 7, 0.01, WidthConfig::global()), ConfigError);
    }

    TEST_CASE("mirrored design gives zero statistics") {
        const ReturnSeries s = simulate(SimSpec{Arch1{}, 600, 500, 8});
        const DesignPairs base(s);
        std::vector<double> x, y;
        for (std::size_t t = 0; t < base.size(); ++t) {
            x.push_back(base.regressor()[t]);
            y.push_back(base.response()[t]);
            x.push_back(-base.regressor()[t]);
            y.push_back(base.response()[t]);
        }
        GasOptions opts;
        opts.pilot.seed = 8;
        const GasModel m(DesignPairs(x, y), opts);
        const auto res = symmetry_test(m, 20, 0.05, WidthConfig::global());
        for (const auto& p : res.pairs) CHECK(std::abs(p.t_stat) < 1e-8);
        CHECK_FALSE(res.reject);
    }

    TEST_CASE("statistics are invariant under permutation of the pairs") {
        const GasModel m = fitted(HtModel{}, 800, 9);
        const std::size_t n = m.pairs().size();
        REQUIRE(std::gcd(n, std::size_t{7919}) == 1);
        std::vector<double> x, y;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = (i * 7919) % n;
            x.push_back(m.pairs().regressor()[j]);
            y.push_back(m.pairs().response()[j]);
        }
        const GasModel shuffled(DesignPairs(x, y), m.net());
        const auto a = symmetry_test(m, 20, 0.01, WidthConfig::global());
        const auto b = symmetry_test(shuffled, 20, 0.01, WidthConfig::global());
        REQUIRE(a.pairs.size() == b.pairs.size());
        for (std::size_t i = 0; i < a.pairs.size(); ++i) {
            CHECK(a.pairs[i].t_stat == doctest::Approx(b.pairs[i].t_stat).epsilon(1e-9));
        }
    }

    TEST_CASE("asymmetric HT volatility is detected") {
        const GasModel m = fitted(HtModel{}, 2000, 10);
        CHECK(symmetry_test(m, 20, 0.01, WidthConfig::global()).reject);
    }

    TEST_CASE("test points lie inside the central range") {
        const GasModel m = fitted(Garch11{}, 500, 11);
        const auto xs = symmetry_points(m.pairs(), 20);
        REQUIRE(xs.size() == 10);
        const double q = std::min(-m.pairs().regressor_quantile(0.01), m.pairs().regressor_quantile(0.99));
        CHECK(xs.back() == doctest::Approx(q));
        CHECK(xs.front() == doctest::Approx(q / 10));
    }
}
