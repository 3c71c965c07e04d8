#include "autcl/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace autcl {

namespace {

bool perm_less(const Automorphism& a, const Automorphism& b) { return a.perm < b.perm; }

}  // namespace

bool AutomorphismGroup::contains(const Automorphism& f) const {
    return std::binary_search(elements.begin(), elements.end(), f, perm_less);
}

AutomorphismGroup automorphisms_bruteforce(const GroupPtr& g, int max_order) {
    const FiniteGroup& G = *g;
    if (G.order > max_order)
        throw std::invalid_argument("automorphisms_bruteforce: order cap exceeded");

    const std::vector<int> gens = small_generating_set(G);
    const int k = static_cast<int>(gens.size());

    std::vector<int> ord(G.order);
    for (int i = 0; i < G.order; ++i) ord[i] = element_order(G, i);

    // BFS factorization: every element as parent * generator
    std::vector<int> parent(G.order, -1), via(G.order, -1), bfs;
    bfs.reserve(G.order);
    bfs.push_back(G.identity);
    parent[G.identity] = G.identity;
    for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
        int cur = bfs[qi];
        for (int j = 0; j < k; ++j) {
            int w = G.mul(cur, gens[j]);
            if (parent[w] < 0) {
                parent[w] = cur;
                via[w] = j;
                bfs.push_back(w);
            }
        }
    }
    if (static_cast<int>(bfs.size()) != G.order)
        throw std::logic_error("generating set does not generate the group");

    std::vector<std::vector<int>> candidates(k);
    for (int j = 0; j < k; ++j)
        for (int x = 0; x < G.order; ++x)
            if (ord[x] == ord[gens[j]]) candidates[j].push_back(x);

    AutomorphismGroup out;
    out.parent = g;
    std::vector<int> img(k, 0), perm(G.order), seen(G.order);
    std::vector<int> pick(k, 0);
    for (;;) {
        for (int j = 0; j < k; ++j) img[j] = candidates[j][pick[j]];
        // extend along the BFS tree
        perm[G.identity] = G.identity;
        for (std::size_t qi = 1; qi < bfs.size(); ++qi) {
            int el = bfs[qi];
            perm[el] = G.mul(perm[parent[el]], img[via[el]]);
        }
        bool ok = true;
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < G.order && ok; ++i) {
            if (seen[perm[i]]) ok = false;
            seen[perm[i]] = 1;
        }
        // f(a * gen) = f(a) * f(gen) for every a suffices: each element is a
        // word in the generators
        for (int i = 0; i < G.order && ok; ++i)
            for (int j = 0; j < k && ok; ++j)
                if (perm[G.mul(i, gens[j])] != G.mul(perm[i], img[j])) ok = false;
        if (ok) out.elements.push_back({perm});

        int d = k - 1;
        while (d >= 0 && pick[d] + 1 == static_cast<int>(candidates[d].size())) {
            pick[d] = 0;
            --d;
        }
        if (d < 0) break;
        ++pick[d];
    }
    std::sort(out.elements.begin(), out.elements.end(), perm_less);
    return out;
}

namespace {

AutomorphismGroup rotation_aut_family(const GroupPtr& g, int n, int half) {
    // shared shape of Aut(D_n) and Aut(Q_4m): i -> a*i on rotations,
    // half + i -> half + (a*i + b) on the coset
    AutomorphismGroup out;
    out.parent = g;
    for (int a = 1; a < n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        for (int b = 0; b < n; ++b) {
            Automorphism f;
            f.perm.resize(2 * n);
            for (int i = 0; i < n; ++i) {
                f.perm[i] = (a * i) % n;
                f.perm[half + i] = half + (a * i + b) % n;
            }
            out.elements.push_back(std::move(f));
        }
    }
    std::sort(out.elements.begin(), out.elements.end(), perm_less);
    return out;
}

}  // namespace

AutomorphismGroup aut_dihedral_closed_form(const GroupPtr& g) {
    if (g->family.kind != FamilyKind::Dihedral || g->family.a < 3)
        throw std::invalid_argument("aut_dihedral_closed_form: requires a dihedral group, n >= 3");
    return rotation_aut_family(g, g->family.a, g->family.a);
}

AutomorphismGroup aut_dihedral_closed_form(int n) {
    if (n < 3) throw std::invalid_argument("aut_dihedral_closed_form: requires n >= 3");
    return aut_dihedral_closed_form(share(make_dihedral(n)));
}

AutomorphismGroup aut_dicyclic_closed_form(const GroupPtr& g) {
    if (g->family.kind != FamilyKind::Dicyclic || g->family.a < 3)
        throw std::invalid_argument("aut_dicyclic_closed_form: requires a dicyclic group, m >= 3");
    return rotation_aut_family(g, 2 * g->family.a, 2 * g->family.a);
}

AutomorphismGroup aut_dicyclic_closed_form(int m) {
    if (m < 3) throw std::invalid_argument("aut_dicyclic_closed_form: requires m >= 3");
    return aut_dicyclic_closed_form(share(make_dicyclic(m)));
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
    if (f.perm.size() != g.perm.size())
        throw std::invalid_argument("compose: size mismatch");
    Automorphism h;
    h.perm.resize(f.perm.size());
    for (std::size_t i = 0; i < f.perm.size(); ++i) h.perm[i] = f.perm[g.perm[i]];
    return h;
}

Automorphism inverse_automorphism(const Automorphism& f) {
    Automorphism h;
    h.perm.resize(f.perm.size());
    for (std::size_t i = 0; i < f.perm.size(); ++i) h.perm[f.perm[i]] = static_cast<int>(i);
    return h;
}

bool is_automorphism(const FiniteGroup& g, const Automorphism& f) {
    if (static_cast<int>(f.perm.size()) != g.order) return false;
    std::vector<char> seen(g.order, 0);
    for (int i = 0; i < g.order; ++i) {
        if (f.perm[i] < 0 || f.perm[i] >= g.order || seen[f.perm[i]]) return false;
        seen[f.perm[i]] = 1;
    }
    if (f.perm[g.identity] != g.identity) return false;
    for (int i = 0; i < g.order; ++i)
        for (int j = 0; j < g.order; ++j)
            if (f.perm[g.mul(i, j)] != g.mul(f.perm[i], f.perm[j])) return false;
    return true;
}

Subgroup apply_automorphism(const Automorphism& f, const Subgroup& h) {
    if (!h.parent || static_cast<int>(f.perm.size()) != h.parent->order)
        throw std::invalid_argument("apply_automorphism: parent mismatch");
    Subgroup img;
    img.parent = h.parent;
    img.members.reserve(h.members.size());
    for (int x : h.members) img.members.push_back(f.perm[x]);
    std::sort(img.members.begin(), img.members.end());
    return img;
}

}  // namespace autcl
