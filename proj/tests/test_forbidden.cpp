#include <map>
#include <set>

#include "doctest.h"
#include "xxxr/forbidden.hpp"

using namespace xxxr;

TEST_CASE("family has 37 distinct members with the right spread") {
    auto members = build_forbidden(base_pair());
    CHECK(members.size() == 37);

    std::set<SLWord> patterns;
    std::map<int, int> per_term;
    for (const auto& m : members) {
        patterns.insert(m.pattern);
        ++per_term[m.term];
    }
    CHECK(patterns.size() == 37);
    CHECK(per_term[1] == 6);
    CHECK(per_term[2] == 3);
    CHECK(per_term[3] == 4);
    CHECK(per_term[4] == 4);
    CHECK(per_term[5] == 4);
    CHECK(per_term[6] == 6);
    CHECK(per_term[7] == 2);
    CHECK(per_term[8] == 4);
    CHECK(per_term[9] == 4);
}

TEST_CASE("every member image fails avoidance at both parities") {
    for (const auto& d : check_forbidden_images(base_pair())) {
        CHECK(d.even_witness.has_value());
        CHECK(d.odd_witness.has_value());
    }
}

TEST_CASE("family representatives recover their predicted witnesses") {
    auto checks = check_family_witnesses(base_pair());
    REQUIRE(checks.size() == 9);
    for (const auto& c : checks) {
        CHECK(c.pass);
    }
    CHECK(checks[0].x == "0110110010");
    CHECK(checks[0].expected.size() == 34);
    // The witnesses for terms 3 and 9 are palindromes.
    CHECK(checks[2].x == reverse_word(checks[2].x));
    CHECK(checks[8].x == reverse_word(checks[8].x));
}

TEST_CASE("avoiding patterns exclude the family") {
    CHECK(sl_avoiders_exclude_forbidden(base_pair(), 7));
}

TEST_CASE("nested-language factor list") {
    auto factors = lower_language_forbidden_factors();
    REQUIRE(factors.size() == 6);
    CHECK(factors[0] == "LLL");
    CHECK(factors[1] == "SSL");
    CHECK(factors[2] == "SLSLS");
    CHECK(factors[3] == "LSLSLLSLSLLSLSL");
    CHECK(factors[4] == "LLSLLSLLSLSL");
    CHECK(factors[5] == "LSLLSLSLLSLLSLSLLSL");
}
