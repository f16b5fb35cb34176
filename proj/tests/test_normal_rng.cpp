#include "gasvol/error.hpp"
#include "gasvol/normal.hpp"
#include "gasvol/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

using namespace gasvol;

TEST_SUITE("normal") {
    TEST_CASE("quantile reference values") {
        // high-precision values of the standard normal quantile
        CHECK(std::abs(normal_quantile(0.975) - 1.959963984540054) < 1e-9);
        CHECK(std::abs(normal_quantile(0.9995) - 3.290526731491926) < 1e-9);
        CHECK(std::abs(normal_quantile(0.5)) < 1e-12);
        CHECK(std::abs(normal_quantile(1e-10) + 6.361340902404056) < 1e-8);
        CHECK(std::isinf(normal_quantile(1.0)));
        CHECK(std::isinf(normal_quantile(0.0)));
        CHECK_THROWS_AS(normal_quantile(1.5), ConfigError);
    }

    TEST_CASE("quantile inverts the cdf") {
        for (double p = 0.001; p < 1.0; p += 0.0137) {
            CHECK(std::abs(normal_cdf(normal_quantile(p)) - p) < 1e-12);
        }
    }

    TEST_CASE("pdf") {
        CHECK(normal_pdf(0.0) == doctest::Approx(0.3989422804014327).epsilon(1e-14));
    }
}

TEST_SUITE("rng") {
    TEST_CASE("same seed, same stream") {
        Rng a(42), b(42);
        for (int i = 0; i < 1000; ++i) CHECK(a.normal() == b.normal());
    }

    TEST_CASE("derived seeds are distinct") {
        std::set<std::uint64_t> seen;
        for (std::uint64_t i = 0; i < 200; ++i) {
            for (std::uint64_t j = 0; j < 5; ++j) seen.insert(derive_seed(7, i, j));
        }
        CHECK(seen.size() == 1000);
        CHECK(derive_seed(7, 1, 2) != derive_seed(7, 2, 1));
    }

    TEST_CASE("normal moments") {
        Rng rng(3);
        const int n = 400000;
        double s1 = 0, s2 = 0, s4 = 0;
        for (int i = 0; i < n; ++i) {
            const double z = rng.normal();
            s1 += z;
            s2 += z * z;
            s4 += z * z * z * z;
        }
        CHECK(std::abs(s1 / n) < 4.0 / std::sqrt(n));
        CHECK(std::abs(s2 / n - 1.0) < 4.0 * std::sqrt(2.0 / n));
        CHECK(std::abs(s4 / n - 3.0) < 4.0 * std::sqrt(96.0 / n));
    }

    TEST_CASE("uniform range") {
        Rng rng(9);
        for (int i = 0; i < 10000; ++i) {
            const double u = rng.uniform();
            CHECK((u >= 0.0 && u < 1.0));
        }
    }
}
