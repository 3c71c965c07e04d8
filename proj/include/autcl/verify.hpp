#pragma once

#include <string>
#include <vector>

#include "autcl/group.hpp"

namespace autcl {

struct VerifyOptions {
    int dihedral_max = 30;
    int dicyclic_max = 12;
    std::vector<int> heis_primes = {3, 5};
    int max_order = default_order_cap;  // battery members above this are skipped
};

enum class VerifyScope { Theorems, Dihedral, Dicyclic, Conjecture };

struct TheoremCase {
    std::string id;
    std::string description;
    std::string expected;
    std::string actual;
    enum class Status { Pass, Fail, Skip } status = Status::Skip;
};

// Runs the registry slice selected by the scope; the result is sorted by id
// and each registered id appears exactly once.
std::vector<TheoremCase> run_verification(VerifyScope scope, const VerifyOptions& opts);

bool all_passed(const std::vector<TheoremCase>& cases);

}  // namespace autcl
