#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(GASVOL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("gasvol_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("exit codes") {
        const fs::path dir = scratch("codes");
        CHECK(run("--help") == 0);
        CHECK(run("") == 1);
        CHECK(run("frobnicate") == 1);
        CHECK(run("estimate --in " + (dir / "missing.csv").string() + " --out " + dir.string()) == 2);
        CHECK(run("simulate --model nope --out " + dir.string()) == 1);
        CHECK(run("simulate --model ht --n 300 --out " + (dir / "sim").string()) == 0);
        const std::string in = (dir / "sim" / "series.csv").string();
        CHECK(fs::exists(in));
        CHECK(run("bands --in " + in + " --alpha 2 --out " + (dir / "b").string()) == 1);
        CHECK(run("bands --in " + in + " --width wide --out " + (dir / "b").string()) == 1);
        CHECK(run("symtest --in " + in + " --nx 7 --out " + (dir / "s").string()) == 1);
        {
            std::ofstream bad(dir / "bad.csv");
            bad << "x\n1\nfoo\n";
        }
        CHECK(run("estimate --in " + (dir / "bad.csv").string() + " --out " + (dir / "e").string()) == 2);
    }

    TEST_CASE("same seed, same bytes") {
        const fs::path dir = scratch("determinism");
        for (const char* tag : {"a", "b"}) {
            REQUIRE(run("simulate --model garch --n 400 --seed 9 --out " + (dir / tag).string()) == 0);
        }
        CHECK(slurp(dir / "a" / "series.csv") == slurp(dir / "b" / "series.csv"));
        CHECK(slurp(dir / "a" / "manifest.txt") == slurp(dir / "b" / "manifest.txt"));
        const std::string in = (dir / "a" / "series.csv").string();
        for (const char* tag : {"c", "d"}) {
            REQUIRE(run("estimate --in " + in + " --grid-points 11 --seed 4 --out " + (dir / tag).string()) == 0);
        }
        CHECK(slurp(dir / "c" / "curve.csv") == slurp(dir / "d" / "curve.csv"));
        CHECK(slurp(dir / "c" / "pilot.txt") == slurp(dir / "d" / "pilot.txt"));
        CHECK(run("bands --in " + in + " --pilot-in " + (dir / "c" / "pilot.txt").string() + " --out " +
                  (dir / "e").string()) == 0);
        CHECK(fs::exists(dir / "e" / "bands.csv"));
    }
}
