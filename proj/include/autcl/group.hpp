#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace autcl {

enum class FamilyKind { Cyclic, Dihedral, Dicyclic, ElementaryAbelian, Heisenberg, Product, Adhoc };

struct Family {
    FamilyKind kind = FamilyKind::Adhoc;
    int a = 0;  // n (cyclic/dihedral), m (dicyclic), p (elementary abelian/heisenberg)
    int b = 0;  // k (elementary abelian)
};

// Compact tag matching the CLI descriptor grammar: "Z:6", "D:4", "Q:3", "EA:3,2", "heis:3", ...
std::string family_tag(const Family& fam);

// A finite group given by its full multiplication table. Elements are the
// indices 0..order-1; the enumeration per family is fixed (rotations first
// for dihedral/dicyclic, row-major tuples for elementary abelian and
// Heisenberg groups) so downstream artifacts are reproducible.
struct FiniteGroup {
    int order = 0;
    std::vector<int> table;  // row-major, table[i*order + j] = index of g_i * g_j
    int identity = 0;
    std::vector<int> inverse;
    std::vector<std::pair<std::string, int>> generators;
    Family family;

    int mul(int i, int j) const { return table[i * order + j]; }
    int inv(int i) const { return inverse[i]; }
    int pow(int g, int k) const;  // k >= 0
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

// Hard cap used by the enumeration-heavy operations; overridable per call
// (the CLI mirrors it via --max-order / AUTCL_MAX_ORDER).
inline constexpr int default_order_cap = 512;

FiniteGroup make_cyclic(int n);
FiniteGroup make_dihedral(int n);
FiniteGroup make_dicyclic(int m);
FiniteGroup make_elementary_abelian(int p, int k, int max_order = default_order_cap);
FiniteGroup make_heisenberg(int p, int max_order = default_order_cap);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           int max_order = default_order_cap);

int element_order(const FiniteGroup& g, int x);
int exponent(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);
std::vector<int> center(const FiniteGroup& g);

// Least subgroup containing the seed elements, as a sorted index list.
std::vector<int> closure_of(const FiniteGroup& g, const std::vector<int>& seed);

// Small generating set: starts from constructor metadata (or greedily built
// when absent) and drops redundant generators. Empty for the trivial group.
std::vector<int> small_generating_set(const FiniteGroup& g);

struct AxiomReport {
    bool ok = true;
    std::vector<std::string> failures;  // first entry names the violating cell/triple
};

// Exhaustive check of the multiplication-table invariants: identity row and
// column, inverses, associativity (all triples up to order 256, a fixed
// pseudo-random sample above that) and generator closure.
AxiomReport verify_group_axioms(const FiniteGroup& g);

}  // namespace autcl
