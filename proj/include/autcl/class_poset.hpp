#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autcl/automorphism.hpp"
#include "autcl/poset.hpp"
#include "autcl/subgroup.hpp"

namespace autcl {

// One orbit of subgroups under Aut(G).
struct AutClass {
    std::vector<int> subgroup_indices;  // into the lattice, ascending
    std::vector<int> canonical;         // lexicographically least member list
    int subgroup_order = 0;             // common order of all members
};

struct LatticeVerdict {
    bool is_lattice = false;
    int bad_i = -1, bad_j = -1;   // witness pair on failure
    bool missing_meet = false;
    std::vector<int> candidates;  // the ambiguous bound set
};

// The poset of automorphic classes of subgroups, ordered by
// [H] <~ [K] iff some automorphism maps a representative of [H] into a
// representative of [K].
struct ClassPoset {
    GroupPtr parent;
    SubgroupLattice lattice;
    AutomorphismGroup auts;
    std::vector<AutClass> classes;  // by subgroup order, then canonical members
    std::vector<std::uint8_t> leq;  // flat count x count
    std::vector<std::pair<int, int>> hasse;
    std::vector<std::string> labels;
    std::optional<LatticeTables> lattice_tables;  // filled by is_lattice on success

    int count() const { return static_cast<int>(classes.size()); }
    bool le(int i, int j) const { return leq[i * count() + j] != 0; }
    int bottom() const { return 0; }
    int top() const { return count() - 1; }

    Poset to_poset() const;
    // Class containing the subgroup with exactly these members, or -1.
    int class_of(const std::vector<int>& members) const;
};

// Partition of the lattice's subgroups into orbits under (f, H) -> f(H).
std::vector<AutClass> class_orbits(const SubgroupLattice& lat, const AutomorphismGroup& auts);

// Existence of f with f(H) <= K for the canonical representatives; by
// representative independence this equals the double-existential definition.
bool class_leq(const AutClass& c1, const AutClass& c2, const AutomorphismGroup& auts);

enum class BuildStrategy { Auto, BruteForce, ClosedForm };

// Full construction. Auto picks the closed-form subgroup/automorphism
// listings for dihedral n >= 3 and dicyclic m >= 3 and brute force otherwise;
// ClosedForm throws outside those bounds. The result always passes the poset
// axioms (checked exhaustively).
ClassPoset build_autcl(const GroupPtr& g, BuildStrategy strategy = BuildStrategy::Auto,
                       int max_order = default_order_cap);

// Greatest lower / least upper bound among the classes, when it exists.
std::optional<int> poset_meet(const ClassPoset& p, int i, int j);
std::optional<int> poset_join(const ClassPoset& p, int i, int j);

// True iff every pair has both bounds; fills p.lattice_tables on success.
LatticeVerdict is_lattice(ClassPoset& p);

}  // namespace autcl
