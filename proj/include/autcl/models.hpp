#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "autcl/class_poset.hpp"
#include "autcl/group.hpp"
#include "autcl/poset.hpp"

namespace autcl {

// Symbolic class labels for the dihedral/dicyclic models. Cyc d is the class
// of the rotation subgroup <r^d> (resp. <x^d>); Dih/Dic d is the class of
// <r^d, s> (resp. <x^d, y>).
enum class SymbolKind { Cyc, Dih, Dic };

struct SymbolicClass {
    SymbolKind kind = SymbolKind::Cyc;
    int divisor = 1;
};

// AutCl built symbolically from divisors, with meet and join as gcd/lcm on
// the divisor labels (min/max of prime exponents) plus kind promotion.
struct SymbolicLattice {
    FamilyKind family = FamilyKind::Dihedral;  // Dihedral or Dicyclic
    int n = 0;  // dihedral n; rotation modulus 2m for dicyclic
    int m = 0;  // dicyclic m; 0 for dihedral
    std::vector<SymbolicClass> classes;  // by subgroup order, Cyc before Dih/Dic, then divisor
    std::vector<std::uint8_t> leq;
    std::vector<std::string> labels;

    int count() const { return static_cast<int>(classes.size()); }
    bool le(int i, int j) const { return leq[i * count() + j] != 0; }
    int subgroup_order(int idx) const;
    int index_of(SymbolKind kind, int divisor) const;  // -1 if absent

    int meet(int i, int j) const;  // formula-based
    int join(int i, int j) const;
    LatticeTables tables() const;

    Poset to_poset() const;
    // representative subgroup of the class as concrete element indices of the
    // matching make_dihedral/make_dicyclic group
    std::vector<int> concrete_members(int idx) const;
};

SymbolicLattice autcl_dihedral_model(int n);  // n >= 3
SymbolicLattice autcl_dicyclic_model(int m);  // m >= 3

enum class ChainFamily { Trivial, CyclicPGroup, ElementaryAbelian, QuaternionOrder8, NotChain };

struct ChainPrediction {
    bool chain = false;
    ChainFamily family = ChainFamily::NotChain;
};

// Chain classification from the table alone: cyclic p-group, elementary
// abelian p-group, or the order-8 group with a unique involution.
ChainPrediction predict_chain(const FiniteGroup& g);

std::string to_string(ChainFamily f);

struct ConjectureResult {
    int p = 0;
    bool isomorphic = false;  // to the Figure9 catalog poset
    ClassPoset poset;
    std::vector<int> class_subgroup_orders;
    std::vector<int> orbit_sizes;
};

// Builds AutCl(Heis(Z_p)) by brute force and compares it against the
// 5-element double-atom catalog shape. The verdict is a computation, not an
// assertion: callers decide what to do with a non-isomorphic result.
ConjectureResult check_heisenberg_conjecture(int p, int max_order = default_order_cap);

}  // namespace autcl
