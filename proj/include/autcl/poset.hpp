#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace autcl {

struct Poset {
    int n = 0;
    std::vector<std::uint8_t> leq;   // flat n x n
    std::vector<std::string> labels; // empty or size n

    bool le(int i, int j) const { return leq[i * n + j] != 0; }
};

// Reports the first poset-axiom violation, if any (reflexivity,
// antisymmetry, transitivity).
std::optional<std::string> poset_axiom_violation(const Poset& p);

struct LatticeTables {
    int n = 0;
    std::vector<int> meet;  // flat n x n
    std::vector<int> join;

    int meet_at(int i, int j) const { return meet[i * n + j]; }
    int join_at(int i, int j) const { return join[i * n + j]; }
};

struct LatticeCheck {
    bool is_lattice = false;
    // on failure: the offending pair, which bound is ambiguous, and the set
    // of maximal lower bounds / minimal upper bounds found
    int bad_i = -1, bad_j = -1;
    bool missing_meet = false;
    std::vector<int> candidates;
    std::optional<LatticeTables> tables;
};

// Greatest lower / least upper bound of {i, j}, when it exists.
std::optional<int> bound_meet(const Poset& p, int i, int j);
std::optional<int> bound_join(const Poset& p, int i, int j);

LatticeCheck check_lattice(const Poset& p);

struct Lattice {
    Poset poset;
    LatticeTables tables;
};

// Throws std::invalid_argument when p is not a lattice.
Lattice as_lattice(const Poset& p);

// Cover edges (transitive reduction), sorted pairs (lower, upper).
std::vector<std::pair<int, int>> hasse_edges(const Poset& p);

bool is_chain(const Poset& p);

struct TripleWitness {
    int x = -1, y = -1, z = -1;
};

struct LawResult {
    bool holds = true;
    std::optional<TripleWitness> witness;
};

// Direct check of x ^ (y v z) = (x ^ y) v (x ^ z) over all triples.
LawResult is_distributive(const Lattice& l);
// x <= z implies x v (y ^ z) = (x v y) ^ z, over all triples.
LawResult is_modular(const Lattice& l);

struct ComplementResult {
    bool holds = true;
    std::optional<int> uncomplemented;  // first element with no complement
};
ComplementResult is_complemented(const Lattice& l);

// Five elements closed under the ambient meet/join and isomorphic to the
// pentagon / diamond, as {bottom, a, b, c, top} (a < b for N5).
struct SublatticeWitness {
    std::array<int, 5> elems{};
};
std::optional<SublatticeWitness> find_sublattice_N5(const Lattice& l);
std::optional<SublatticeWitness> find_sublattice_M3(const Lattice& l);

// Order isomorphism P -> Q by backtracking with (down-set size, up-set size,
// cover degree) pruning; the mapping is re-verified before returning.
std::optional<std::vector<int>> poset_isomorphic(const Poset& p, const Poset& q);

enum class CatalogKind { Chain, M2, M3, N5, Divisor, Boolean, Figure9 };

// Named reference posets; `parameter` is the chain length, divisor argument
// or boolean rank and is ignored for the fixed shapes.
Poset catalog(CatalogKind kind, int parameter = 0);

}  // namespace autcl
