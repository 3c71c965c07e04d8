#include <doctest.h>

#include <set>

#include "autcl/verify.hpp"

using namespace autcl;

TEST_CASE("registry report is id-unique, sorted and passing") {
    VerifyOptions opts;
    opts.dihedral_max = 8;  // small bound keeps this fast
    auto cases = run_verification(VerifyScope::Dihedral, opts);
    REQUIRE_FALSE(cases.empty());
    std::set<std::string> ids;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        CHECK(ids.insert(cases[i].id).second);
        if (i) CHECK(cases[i - 1].id < cases[i].id);
        CHECK_FALSE(cases[i].description.empty());
        CHECK_FALSE(cases[i].expected.empty());
    }
    CHECK(all_passed(cases));
}

TEST_CASE("conjecture scope honours the prime list") {
    VerifyOptions opts;
    opts.heis_primes = {3};
    auto cases = run_verification(VerifyScope::Conjecture, opts);
    REQUIRE(cases.size() == 1);
    CHECK(cases[0].id == "conj-heis-p3");
    CHECK(cases[0].status == TheoremCase::Status::Pass);
}
