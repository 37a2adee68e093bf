#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace
{

struct Run
{
    int status = -1;
    std::string out;
};

Run run(const std::string & args)
{
    const std::string cmd = std::string(HYPMAASS_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE * pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

int count_lines(const std::string & s)
{
    int n = 0;
    for (char c : s) {
        n += c == '\n';
    }
    return n;
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("qforms table")
    {
        const auto r = run("qforms --D 5 --z i --radius 3 --format csv");
        CHECK(r.status == 0);
        // header plus eight rows
        CHECK(count_lines(r.out) == 9);
    }

    TEST_CASE("fourier table with ratio column")
    {
        const auto r = run("fourier --function f --k 6 --D 5 --n 1..5 --y 1.0 --format json");
        REQUIRE(r.status == 0);
        const auto j = nlohmann::json::parse(r.out);
        REQUIRE(j["rows"].size() == 5);
        const double expected[] = {1, -24, 252, -1472, 4830};
        for (int i = 0; i < 5; ++i) {
            CHECK(j["rows"][i]["ratio_re"].get<double>() == doctest::Approx(expected[i]).epsilon(1e-6));
        }
    }

    TEST_CASE("eval rejects a non-discriminant")
    {
        CHECK(run("eval --function omega --k 6 --D 7 --x 0.1 --y 1.2").status == 2);
    }

    TEST_CASE("eval grid")
    {
        const auto r = run("eval --function f --k 6 --D 5 --x 0:0.5:3 --y 1.2 --format csv");
        CHECK(r.status == 0);
        CHECK(count_lines(r.out) == 4);
        CHECK(run("eval --function f --k 6 --D 5 --x 0:0.5:0 --y 1.2").status == 2);
        CHECK(run("eval --function f --k 6 --D 5 --x 0 --y -1").status == 2);
    }

    TEST_CASE("verify usage errors")
    {
        CHECK(run("verify --suite all --k 3").status == 2);
        CHECK(run("verify --suite nonsense").status == 2);
        CHECK(run("verify --suite lemma22 --tolerance broken").status == 2);
        CHECK(run("bogus").status == 2);
    }

    TEST_CASE("verify vigneras writes 100 sample reports")
    {
        const auto r = run("verify --suite vigneras --k 6 --seed 42 --json - --quiet");
        REQUIRE(r.status == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["schema"] == 1);
        int samples = 0;
        for (const auto & rep : j["reports"]) {
            CHECK(rep["passed"] == true);
            samples += rep["check_name"].get<std::string>().rfind("vigneras.sample", 0) == 0;
        }
        CHECK(samples == 100);
    }

    TEST_CASE("verify theorem1 covers parts i, ii and iii")
    {
        const auto r = run("verify --suite theorem1 --k 6 --D 5 --json - --quiet");
        REQUIRE(r.status == 0);
        const auto j = nlohmann::json::parse(r.out);
        bool i = false, ii = false, iii = false;
        for (const auto & rep : j["reports"]) {
            const auto name = rep["check_name"].get<std::string>();
            i = i || name.rfind("theorem1.i_", 0) == 0;
            ii = ii || name.rfind("theorem1.ii_", 0) == 0;
            iii = iii || name.rfind("theorem1.iii_", 0) == 0;
        }
        CHECK(i);
        CHECK(ii);
        CHECK(iii);
    }

    TEST_CASE("a failing check gives exit status 1")
    {
        CHECK(run("verify --suite lemma22 --tolerance lemma22.i_norm_identity=-1 --quiet").status == 1);
    }
}
