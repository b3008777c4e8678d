#include "doctest.h"

#include "triality/checks.hpp"
#include "triality/concordance.hpp"

#include <algorithm>
#include <set>

using namespace triality;

TEST_CASE("registry names are unique and every check has a concordance entry") {
    std::set<std::string> names;
    for (const auto& c : check_registry()) CHECK(names.insert(c.name).second);
    CHECK(concordance_diff().empty());
    CHECK_THROWS_AS(concordance_for("no-such-check"), std::out_of_range);
}

TEST_CASE("suite coverage") {
    const auto suites = suite_names();
    for (const char* s : {"clifford", "isotropic", "liealg", "reps", "lefschetz", "schottky"})
        CHECK(std::find(suites.begin(), suites.end(), s) != suites.end());
    CHECK(is_suite("all"));
    CHECK_FALSE(is_suite("bogus"));
    auto n = std::count_if(check_registry().begin(), check_registry().end(),
                           [](const CheckSpec& c) { return c.suite == "clifford"; });
    CHECK(n >= 6);
}

TEST_CASE("every check passes with a small trial count") {
    CheckContext ctx{3, 10};
    for (const auto& r : run_checks("all", ctx)) {
        INFO(r.check_name << ": " << r.detail);
        CHECK(r.status == CheckStatus::pass);
    }
}

TEST_CASE("parallel and sequential runs agree") {
    CheckContext ctx{5, 5};
    auto a = run_checks("isotropic", ctx, true), b = run_checks("isotropic", ctx, false);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].check_name == b[i].check_name);
        CHECK(a[i].status == b[i].status);
        CHECK(a[i].detail == b[i].detail);
    }
}

TEST_CASE("concordance document lists entries by rank") {
    const std::string doc = emit_concordance();
    CHECK(doc.find("## Conventions") != std::string::npos);
    std::size_t last = 0;
    auto entries = concordance_entries();
    std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.rank < y.rank; });
    for (const auto& e : entries) {
        auto pos = doc.find("`" + e.check_name + "`");
        if (pos == std::string::npos) pos = doc.find(e.check_name);
        REQUIRE(pos != std::string::npos);
        CHECK(pos >= last);
        last = pos;
    }
}
