#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    std::string out;
    int code = -1;
};

Run tate(const std::string& args) {
    Run r;
    const std::string cmd = std::string("\"") + TATE_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("index") {
    CHECK(tate("index --f '1*t^1'").out == "1\n");
    CHECK(tate("--field F5 index --f 1").out == "0\n");
    CHECK(tate("index --matrix 't,0;0,t^2'").out == "3\n");
    const auto j = nlohmann::json::parse(tate("index --f 't^-2 + 1' --json").out);
    CHECK(j.at("index") == -2);
    CHECK(j.at("field") == "Q");
}

TEST_CASE("commutator and tame symbol") {
    CHECK(tate("commutator --f 't' --g 2").out == "1/2\n");
    CHECK(tate("tame --f t --g t").out == "-1\n");
    const auto r = tate("--field F5 --json commutator --f 't^2 + t^3' --g '3*t^-1' --mode graded");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("match") == true);
    CHECK(j.at("commutator").at("mode") == "graded");
    CHECK(j.at("commutator").at("value").is_number_integer());
}

TEST_CASE("exit codes") {
    CHECK(tate("index").code == 2);
    CHECK(tate("index --f t --matrix t").code == 2);
    CHECK(tate("--field F4 index --f t").code == 2);
    CHECK(tate("index --f 0").code == 2);
    CHECK(tate("verify --suite nope").code == 2);
    CHECK(tate("--precision 1 commutator --f 'inv(1-t)' --g 't^-3'").code == 3);
    CHECK(tate("--precision 4 commutator --f 'inv(1-t)' --g 't^-3'").code == 0);
}

TEST_CASE("verify is deterministic") {
    const auto a = tate("--seed 3 --json verify --cases 5");
    const auto b = tate("verify --cases 5 --seed 3 --json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j.at("status") == "pass");
    CHECK(j.at("suites").size() == 5);
    CHECK(tate("--seed 4 --json verify --cases 5").out != a.out);
}
