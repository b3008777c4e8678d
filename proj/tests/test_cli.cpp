#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(TRIALITY_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("verify emits one JSON object per check") {
    Run r = run("verify --suite schottky --json");
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        for (const char* k : {"check", "paper", "status", "detail", "elapsed_ms"}) CHECK(j.contains(k));
        CHECK(j["status"] == "pass");
        ++count;
    }
    CHECK(count >= 4);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("verify --suite nonsense").code == 2);
    CHECK(run("dim").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("dim --genus 2").code == 2);
}

TEST_CASE("dim text and json output") {
    Run t = run("dim --genus 4");
    CHECK(t.code == 0);
    CHECK(t.out.find("dim N_C = 14") != std::string::npos);
    CHECK(t.out.find("(14, 98, 112)") != std::string::npos);

    Run j = run("dim --genus 4 --json");
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["dimension"] == 14);
    CHECK(doc["character"]["rho"] == 112);

    Run c = run("dim --genus 4 --delta 6 --json");
    auto cyc = nlohmann::json::parse(c.out);
    CHECK(cyc["cyclic"] == true);
    CHECK(cyc["dimension"] == "14");
}

TEST_CASE("cyclic flag with a mismatched delta warns") {
    Run r = run("dim --genus 4 --delta 1 --cyclic", true);
    CHECK(r.out.find("warning") != std::string::npos);
}

TEST_CASE("other subcommands run") {
    CHECK(run("hodge --genus 5").code == 0);
    CHECK(run("schottky").code == 0);
    CHECK(run("liealg").code == 0);
}
