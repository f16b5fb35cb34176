#include "gasvol/csv.hpp"
#include "gasvol/error.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

using namespace gasvol;

namespace {

std::vector<double> read(const std::string& text, std::optional<std::string> column = {}) {
    std::istringstream in(text);
    return read_csv_column(in, column);
}

std::size_t error_line(const std::string& text, std::optional<std::string> column = {}) {
    try {
        read(text, column);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_SUITE("csv") {
    TEST_CASE("with and without header") {
        CHECK(read("1.5\n-2\n3e-1\n") == std::vector<double>{1.5, -2.0, 0.3});
        CHECK(read("ret\n1\n2\n") == std::vector<double>{1.0, 2.0});
        CHECK(read("date,ret\n20200101,0.5\n20200102,-0.25\n", std::string("ret")) ==
              std::vector<double>{0.5, -0.25});
        CHECK(read("a,b\r\n1,2\r\n\n3,4\r\n") == std::vector<double>{1.0, 3.0});
    }

    TEST_CASE("errors carry line numbers") {
        CHECK(error_line("x\n1\nabc\n") == 3);
        CHECK(error_line("a,b\n1,2\n3\n", std::string("b")) == 3);
        CHECK(error_line("x\n1\ninf\n") == 3);
        CHECK(error_line("x\n") == 1);
        CHECK_THROWS_AS(read(""), ParseError);
        CHECK_THROWS_AS(read("a,b\n1,2\n", std::string("c")), ParseError);
        CHECK_THROWS_AS(read("1\n2\n", std::string("c")), ParseError);
        CHECK_THROWS_AS(read_csv_column(std::filesystem::path("/nonexistent/file.csv")), DataError);
    }

    TEST_CASE("round trip of written numbers") {
        const std::vector<double> v{0.1, 1.0 / 3.0, -2.5e-17, 12345678.9};
        std::ostringstream out;
        write_series_csv(out, v, "r");
        const auto back = read(out.str());
        REQUIRE(back.size() == v.size());
        for (std::size_t i = 0; i < v.size(); ++i) CHECK(back[i] == v[i]);
        CHECK(format_number(0.1) == "0.1");
    }

    TEST_CASE("manifest keeps order and overwrites") {
        Manifest m;
        m.set("seed", std::uint64_t{7});
        m.set("model", "ht");
        m.set("alpha", 0.05);
        m.set("bias", true);
        m.set("seed", 8);
        std::ostringstream out;
        m.write(out);
        CHECK(out.str() == "seed=8\nmodel=ht\nalpha=0.05\nbias=true\n");
        CHECK(m.get("model") == "ht");
        CHECK_FALSE(m.get("missing").has_value());
    }

    TEST_CASE("band csv marks failed points") {
        VolatilityCurve curve;
        BandPoint ok;
        ok.x = 0.5;
        ok.estimate = 0.2;
        BandPoint bad;
        bad.x = 9.0;
        bad.error = "outside the regressor support";
        curve.points = {ok, bad};
        std::ostringstream out;
        write_band_csv(out, curve);
        std::istringstream in(out.str());
        std::string header, row1, row2;
        std::getline(in, header);
        std::getline(in, row1);
        std::getline(in, row2);
        CHECK(header == "x,estimate,bias_correction,center,half_width,lower,upper,h,error");
        CHECK(row1 == "0.5,0.2,0,0,0,0,0,0,");
        CHECK(row2 == "9,,,,,,,,\"outside the regressor support\"");
    }
}
