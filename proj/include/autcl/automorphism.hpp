#pragma once

#include <vector>

#include "autcl/group.hpp"
#include "autcl/subgroup.hpp"

namespace autcl {

struct Automorphism {
    std::vector<int> perm;  // perm[i] = image of element i
};

struct AutomorphismGroup {
    GroupPtr parent;
    std::vector<Automorphism> elements;  // duplicate-free, sorted by perm array

    int count() const { return static_cast<int>(elements.size()); }
    bool contains(const Automorphism& f) const;
};

// All automorphisms, found by enumerating candidate generator images
// (filtered by element order), extending each assignment to a word map over
// the whole group and keeping exactly the bijective homomorphisms.
AutomorphismGroup automorphisms_bruteforce(const GroupPtr& g, int max_order = default_order_cap);

// phi(r) = r^a, phi(s) = r^b s for a coprime to n, b mod n. Requires n >= 3.
AutomorphismGroup aut_dihedral_closed_form(int n);
AutomorphismGroup aut_dihedral_closed_form(const GroupPtr& g);

// phi(x) = x^a, phi(y) = x^b y for a coprime to 2m, b mod 2m. Requires m >= 3.
AutomorphismGroup aut_dicyclic_closed_form(int m);
AutomorphismGroup aut_dicyclic_closed_form(const GroupPtr& g);

Automorphism compose(const Automorphism& f, const Automorphism& g);  // f after g
Automorphism inverse_automorphism(const Automorphism& f);

// Exhaustive check: bijective, identity-fixing, f(ab) = f(a)f(b) for all pairs.
bool is_automorphism(const FiniteGroup& g, const Automorphism& f);

Subgroup apply_automorphism(const Automorphism& f, const Subgroup& h);

}  // namespace autcl
