#include "autcl/models.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "autcl/numeric.hpp"

namespace autcl {

int SymbolicLattice::subgroup_order(int idx) const {
    const auto& c = classes[idx];
    if (c.kind == SymbolKind::Cyc) return n / c.divisor;
    return 2 * n / c.divisor;  // dihedral 2n/d, dicyclic 4m/d with n = 2m
}

int SymbolicLattice::index_of(SymbolKind kind, int divisor) const {
    for (int i = 0; i < count(); ++i)
        if (classes[i].kind == kind && classes[i].divisor == divisor) return i;
    return -1;
}

namespace {

bool symbolic_le(const SymbolicLattice& l, const SymbolicClass& a, const SymbolicClass& b) {
    // Cyc d <= Cyc d'  iff d' | d   (and likewise Dih/Dic vs Dih/Dic)
    // Cyc d <= Dih d'  iff d' | d;  Dih is never below Cyc
    (void)l;
    if (a.kind != SymbolKind::Cyc && b.kind == SymbolKind::Cyc) return false;
    return a.divisor % b.divisor == 0;
}

}  // namespace

int SymbolicLattice::meet(int i, int j) const {
    const auto& a = classes[i];
    const auto& b = classes[j];
    // lcm of divisors = max of prime exponents; the result stays Dih/Dic only
    // when both arguments are
    int d = std::lcm(a.divisor, b.divisor);
    SymbolKind kind = (a.kind != SymbolKind::Cyc && b.kind != SymbolKind::Cyc)
                          ? a.kind
                          : SymbolKind::Cyc;
    int idx = index_of(kind, d);
    if (idx < 0) throw std::logic_error("symbolic meet fell outside the model");
    return idx;
}

int SymbolicLattice::join(int i, int j) const {
    const auto& a = classes[i];
    const auto& b = classes[j];
    // gcd of divisors = min of prime exponents; any Dih/Dic argument promotes
    int d = std::gcd(a.divisor, b.divisor);
    SymbolKind kind = (a.kind == SymbolKind::Cyc && b.kind == SymbolKind::Cyc)
                          ? SymbolKind::Cyc
                          : (family == FamilyKind::Dihedral ? SymbolKind::Dih : SymbolKind::Dic);
    int idx = index_of(kind, d);
    if (idx < 0) throw std::logic_error("symbolic join fell outside the model");
    return idx;
}

LatticeTables SymbolicLattice::tables() const {
    LatticeTables t;
    t.n = count();
    t.meet.resize(t.n * t.n);
    t.join.resize(t.n * t.n);
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j) {
            t.meet[i * t.n + j] = meet(i, j);
            t.join[i * t.n + j] = join(i, j);
        }
    return t;
}

Poset SymbolicLattice::to_poset() const {
    Poset p;
    p.n = count();
    p.leq = leq;
    p.labels = labels;
    return p;
}

std::vector<int> SymbolicLattice::concrete_members(int idx) const {
    const auto& c = classes[idx];
    std::vector<int> members;
    if (c.kind == SymbolKind::Cyc) {
        for (int k = 0; k * c.divisor < n; ++k) members.push_back(k * c.divisor);
    } else {
        for (int k = 0; k * c.divisor < n; ++k) members.push_back(k * c.divisor);
        for (int k = 0; k * c.divisor < n; ++k) members.push_back(n + k * c.divisor);
    }
    return members;
}

namespace {

SymbolicLattice build_model(FamilyKind family, int n, int m) {
    SymbolicLattice l;
    l.family = family;
    l.n = n;
    l.m = m;
    const bool dihedral = family == FamilyKind::Dihedral;
    const SymbolKind upper = dihedral ? SymbolKind::Dih : SymbolKind::Dic;
    for (int d : divisors(n)) l.classes.push_back({SymbolKind::Cyc, d});
    for (int d : divisors(dihedral ? n : m)) l.classes.push_back({upper, d});

    std::sort(l.classes.begin(), l.classes.end(), [&](const SymbolicClass& a, const SymbolicClass& b) {
        int oa = a.kind == SymbolKind::Cyc ? n / a.divisor : 2 * n / a.divisor;
        int ob = b.kind == SymbolKind::Cyc ? n / b.divisor : 2 * n / b.divisor;
        if (oa != ob) return oa < ob;
        if (a.kind != b.kind) return a.kind == SymbolKind::Cyc;
        return a.divisor < b.divisor;
    });

    const int c = l.count();
    l.leq.assign(c * c, 0);
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j)
            if (symbolic_le(l, l.classes[i], l.classes[j])) l.leq[i * c + j] = 1;

    l.labels.resize(c);
    auto pw = [](const std::string& sym, int d) {
        return d == 1 ? sym : sym + "^" + std::to_string(d);
    };
    for (int i = 0; i < c; ++i) {
        const auto& cls = l.classes[i];
        if (cls.kind == SymbolKind::Cyc) {
            l.labels[i] = cls.divisor == n ? "[{e}]"
                                           : "[<" + pw(dihedral ? "r" : "x", cls.divisor) + ">]";
        } else if (dihedral) {
            l.labels[i] = cls.divisor == n ? "[<s>]" : "[<" + pw("r", cls.divisor) + ", s>]";
        } else {
            l.labels[i] = cls.divisor == m ? "[<y>]" : "[<" + pw("x", cls.divisor) + ", y>]";
        }
    }
    return l;
}

}  // namespace

SymbolicLattice autcl_dihedral_model(int n) {
    if (n < 3) throw std::invalid_argument("autcl_dihedral_model: requires n >= 3");
    return build_model(FamilyKind::Dihedral, n, 0);
}

SymbolicLattice autcl_dicyclic_model(int m) {
    if (m < 3) throw std::invalid_argument("autcl_dicyclic_model: requires m >= 3");
    return build_model(FamilyKind::Dicyclic, 2 * m, m);
}

ChainPrediction predict_chain(const FiniteGroup& g) {
    if (g.order == 1) return {true, ChainFamily::Trivial};
    bool cyclic = false;
    for (int i = 0; i < g.order && !cyclic; ++i) cyclic = element_order(g, i) == g.order;
    if (cyclic && is_prime_power(g.order)) return {true, ChainFamily::CyclicPGroup};
    const bool abelian = is_abelian(g);
    if (abelian && is_prime(exponent(g))) return {true, ChainFamily::ElementaryAbelian};
    if (g.order == 8 && !abelian) {
        int involutions = 0;
        for (int i = 0; i < g.order; ++i)
            if (element_order(g, i) == 2) ++involutions;
        if (involutions == 1) return {true, ChainFamily::QuaternionOrder8};
    }
    return {false, ChainFamily::NotChain};
}

std::string to_string(ChainFamily f) {
    switch (f) {
        case ChainFamily::Trivial: return "trivial";
        case ChainFamily::CyclicPGroup: return "cyclic p-group";
        case ChainFamily::ElementaryAbelian: return "elementary abelian p-group";
        case ChainFamily::QuaternionOrder8: return "quaternion group of order 8";
        case ChainFamily::NotChain: return "not a chain";
    }
    return "not a chain";
}

ConjectureResult check_heisenberg_conjecture(int p, int max_order) {
    ConjectureResult res;
    res.p = p;
    auto g = share(make_heisenberg(p, max_order));
    res.poset = build_autcl(g, BuildStrategy::BruteForce, max_order);
    for (const auto& cls : res.poset.classes) {
        res.class_subgroup_orders.push_back(cls.subgroup_order);
        res.orbit_sizes.push_back(static_cast<int>(cls.subgroup_indices.size()));
    }
    res.isomorphic = poset_isomorphic(res.poset.to_poset(), catalog(CatalogKind::Figure9))
                         .has_value();
    return res;
}

}  // namespace autcl
