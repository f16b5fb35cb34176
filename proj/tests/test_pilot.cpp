#include "gasvol/error.hpp"
#include "gasvol/pilot.hpp"
#include "gasvol/rng.hpp"
#include "gasvol/simulate.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

using namespace gasvol;

namespace {

PilotNetwork one_node(double bias, double c, double a, double b) {
    PilotNetwork net;
    net.bias = bias;
    net.nodes.push_back({c, a, b});
    return net;
}

DesignPairs arch_pairs(std::size_t n, std::uint64_t seed) {
    return DesignPairs(simulate(SimSpec{Arch1{0.1, 0.5}, n, 500, seed}));
}

}  // namespace

TEST_SUITE("pilot") {
    TEST_CASE("sigmoid derivatives against closed forms") {
        CHECK(sigmoid(0.0) == 0.5);
        CHECK(sigmoid_d1(0.0) == 0.25);
        CHECK(sigmoid_d2(0.0) == 0.0);
        for (double z : {-3.0, -0.5, 0.7, 2.0}) {
            const double s = 1.0 / (1.0 + std::exp(-z));
            CHECK(sigmoid_d1(z) == doctest::Approx(s * (1 - s)).epsilon(1e-14));
            CHECK(sigmoid_d2(z) == doctest::Approx(s * (1 - s) * (1 - 2 * s)).epsilon(1e-12));
        }
    }

    TEST_CASE("evaluation examples") {
        PilotNetwork empty;
        empty.bias = 0.7;
        empty.nodes.push_back({0.0, 1.0, 0.0});
        CHECK(pilot_eval(empty, 3.0) == 0.7);
        CHECK(pilot_second_derivative(empty, 1.0) == 0.0);
        CHECK(pilot_eval(one_node(0.3, 2.0, 1.0, 0.0), 0.0) == doctest::Approx(1.3));
        CHECK(pilot_second_derivative(one_node(0.0, 1.0, 1.0, 0.0), 0.0) == 0.0);
        // saturation: positive a tends to bias + c, negative a to bias
        CHECK(pilot_eval(one_node(0.3, 2.0, 1.0, 0.0), 60.0) == doctest::Approx(2.3));
        CHECK(pilot_eval(one_node(0.3, 2.0, -1.0, 0.0), 60.0) == doctest::Approx(0.3));
    }

    TEST_CASE("analytic derivatives match finite differences on fitted networks") {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const DesignPairs pairs = arch_pairs(400, seed);
            PilotFitOptions opts;
            opts.seed = seed;
            const PilotNetwork net = fit_pilot(pairs, opts).net;
            Rng rng(seed + 100);
            for (int i = 0; i < 100; ++i) {
                const double x = rng.uniform(pairs.min_regressor(), pairs.max_regressor());
                const double h = 1e-3;
                const auto d1 = [&](double step) {
                    return (pilot_first_derivative(net, x + step) - pilot_first_derivative(net, x - step)) / (2 * step);
                };
                const double fd2 = (4.0 * d1(h / 2) - d1(h)) / 3.0;
                const double an2 = pilot_second_derivative(net, x);
                CHECK(std::abs(fd2 - an2) <= 1e-5 * std::max(std::abs(an2), 1e-6));
                const double fd1 = (pilot_eval(net, x + 1e-5) - pilot_eval(net, x - 1e-5)) / 2e-5;
                CHECK(std::abs(fd1 - pilot_first_derivative(net, x)) <= 1e-5 * std::max(1.0, std::abs(fd1)));
            }
        }
    }

    TEST_CASE("constant responses give a flat network") {
        Rng rng(4);
        std::vector<double> x(300), y(300, 5.0);
        for (auto& v : x) v = rng.normal();
        const DesignPairs pairs(x, y);
        const auto fit = fit_pilot(pairs, {});
        for (double at = pairs.min_regressor(); at <= pairs.max_regressor(); at += 0.05) {
            CHECK(std::abs(pilot_eval(fit.net, at) - 5.0) <= 0.01);
        }
    }

    TEST_CASE("model 1 pilot tracks the true volatility function") {
        const DesignPairs pairs = arch_pairs(2000, 5);
        PilotFitOptions opts;
        opts.seed = 5;
        const auto fit = fit_pilot(pairs, opts);
        const double sd = pairs.regressor_stddev();
        for (double x = -sd; x <= sd; x += sd / 10) {
            CHECK(std::abs(pilot_eval(fit.net, x) - (0.1 + 0.5 * x * x)) <= 0.1);
        }
    }

    TEST_CASE("fit is deterministic given the seed") {
        const DesignPairs pairs = arch_pairs(500, 6);
        PilotFitOptions opts;
        opts.seed = 99;
        const auto a = fit_pilot(pairs, opts);
        const auto b = fit_pilot(pairs, opts);
        REQUIRE(a.net.nodes.size() == b.net.nodes.size());
        CHECK(a.net.bias == b.net.bias);
        for (std::size_t k = 0; k < a.net.nodes.size(); ++k) {
            CHECK(a.net.nodes[k].c == b.net.nodes[k].c);
            CHECK(a.net.nodes[k].a == b.net.nodes[k].a);
            CHECK(a.net.nodes[k].b == b.net.nodes[k].b);
        }
    }

    TEST_CASE("BIC choice and weight budget") {
        const DesignPairs pairs = arch_pairs(800, 7);
        PilotFitOptions opts;
        opts.seed = 7;
        const auto fit = fit_pilot(pairs, opts);
        const auto& r = fit.report;
        REQUIRE(r.bic.size() == r.candidates.size());
        const auto best = std::min_element(r.bic.begin(), r.bic.end()) - r.bic.begin();
        CHECK(r.chosen_d == r.candidates[static_cast<std::size_t>(best)]);
        CHECK(static_cast<int>(fit.net.hidden_count()) == r.chosen_d);
        const double n = static_cast<double>(pairs.size());
        for (std::size_t i = 0; i < r.bic.size(); ++i) {
            const double p = 3.0 * r.candidates[i] + 1.0;
            CHECK(r.bic[i] == doctest::Approx(n * std::log(r.rss_per_candidate[i] / n) + p * std::log(n)));
        }
        CHECK(fit.net.output_weight_l1() <= fit.net.weight_budget * (1 + 1e-12));

        opts.weight_budget = 0.05;
        const auto tight = fit_pilot(pairs, opts);
        CHECK(tight.net.output_weight_l1() <= 0.05 * (1 + 1e-12));
    }

    TEST_CASE("more restarts never increase the residual sum of squares") {
        const DesignPairs pairs = arch_pairs(400, 8);
        PilotFitOptions opts;
        opts.seed = 8;
        opts.d_candidates = {3};
        opts.weight_decay = 0.0;
        double previous = std::numeric_limits<double>::infinity();
        for (int restarts : {1, 2, 4, 6}) {
            opts.restarts = restarts;
            PilotFit fit;
            try {
                fit = fit_pilot(pairs, opts);
            } catch (const FitError& e) {
                fit = e.best_effort();
            }
            CHECK(fit.report.rss <= previous);
            previous = fit.report.rss;
        }
    }

    TEST_CASE("m4eps") {
        std::vector<double> x(100, 0.0), y(100, 1.0);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = (i % 2 ? 1.0 : -1.0);
        // X_t^2 == 1 and X_t^4 == 1 with q == 1 gives exactly 1
        const DesignPairs ones(x, y);
        PilotNetwork unit;
        unit.bias = 1.0;
        CHECK(estimate_m4eps(ones, unit) == doctest::Approx(1.0));
        PilotNetwork zero;
        CHECK_THROWS_AS(estimate_m4eps(ones, zero), DegeneratePilotError);
    }

    TEST_CASE("m4eps near 3 on Gaussian model 1") {
        std::vector<double> m4;
        for (std::uint64_t seed = 1; seed <= 7; ++seed) {
            const DesignPairs pairs = arch_pairs(5000, seed);
            PilotFitOptions opts;
            opts.seed = seed;
            m4.push_back(estimate_m4eps(pairs, fit_pilot(pairs, opts).net));
        }
        std::sort(m4.begin(), m4.end());
        CHECK(std::abs(m4[3] - 3.0) <= 0.4);
    }

    TEST_CASE("save and load round trip") {
        PilotNetwork net = one_node(0.1, 0.25, -1.5, 0.3);
        net.nodes.push_back({-0.2, 2.0, -0.1});
        net.input_mean = 0.01;
        net.input_scale = 0.7;
        std::stringstream io;
        save_pilot(io, net);
        const PilotNetwork back = load_pilot(io);
        REQUIRE(back.hidden_count() == 2);
        for (double x : {-1.0, 0.0, 0.5}) CHECK(pilot_eval(back, x) == pilot_eval(net, x));
        std::stringstream bad("hidden_count=1\nbias=oops\n");
        CHECK_THROWS_AS(load_pilot(bad), ParseError);
    }

    TEST_CASE("configuration errors") {
        const DesignPairs pairs = arch_pairs(200, 10);
        PilotFitOptions opts;
        opts.d_candidates = {};
        CHECK_THROWS_AS(fit_pilot(pairs, opts), ConfigError);
        opts.d_candidates = {0};
        CHECK_THROWS_AS(fit_pilot(pairs, opts), ConfigError);
    }
}
