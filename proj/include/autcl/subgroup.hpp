#pragma once

#include <cstdint>
#include <vector>

#include "autcl/group.hpp"

namespace autcl {

struct Subgroup {
    GroupPtr parent;
    std::vector<int> members;  // sorted element indices, identity always present

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int x) const;
};

enum class SubgroupType { Generic, Type1, Type2 };

// Closed-form listing metadata: Type1(d) is the rotation subgroup <r^d>
// (resp. <x^d>), Type2(d, i) is <r^d, r^i s> (resp. <x^d, x^i y>).
struct SubgroupTag {
    SubgroupType type = SubgroupType::Generic;
    int d = 0;
    int i = 0;
};

// Canonical order of subgroups: by size, then lexicographic member list.
bool members_less(const std::vector<int>& a, const std::vector<int>& b);

struct SubgroupLattice {
    GroupPtr parent;
    std::vector<Subgroup> subgroups;  // canonical order; [0] = {e}, last = G
    std::vector<SubgroupTag> tags;    // parallel to subgroups
    std::vector<std::uint8_t> leq;    // flat count x count containment matrix
    std::vector<int> meet_table;      // flat; empty unless tables were built
    std::vector<int> join_table;

    int count() const { return static_cast<int>(subgroups.size()); }
    bool le(int i, int j) const { return leq[i * count() + j] != 0; }
    bool has_tables() const { return !meet_table.empty(); }
    int meet(int i, int j) const { return meet_table[i * count() + j]; }
    int join(int i, int j) const { return join_table[i * count() + j]; }
    int bottom() const { return 0; }
    int top() const { return count() - 1; }

    // Index of the subgroup with exactly these members, or -1.
    int index_of(const std::vector<int>& members) const;
};

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& seed);

// Generic enumeration: all cyclic subgroups, then saturation under pairwise
// join. Meet/join tables are built eagerly when the lattice has at most
// `eager_tables_limit` subgroups.
SubgroupLattice all_subgroups(const GroupPtr& g, int max_order = default_order_cap,
                              int eager_tables_limit = 128);

// Closed-form listings. The (n)/(m) forms construct the group themselves;
// the GroupPtr forms reuse an existing dihedral/dicyclic group.
SubgroupLattice dihedral_subgroups_closed_form(int n);
SubgroupLattice dihedral_subgroups_closed_form(const GroupPtr& g);
SubgroupLattice dicyclic_subgroups_closed_form(int m);
SubgroupLattice dicyclic_subgroups_closed_form(const GroupPtr& g);

}  // namespace autcl
