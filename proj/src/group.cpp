#include "autcl/group.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "autcl/numeric.hpp"

namespace autcl {

std::string family_tag(const Family& fam) {
    switch (fam.kind) {
        case FamilyKind::Cyclic: return "Z:" + std::to_string(fam.a);
        case FamilyKind::Dihedral: return "D:" + std::to_string(fam.a);
        case FamilyKind::Dicyclic: return "Q:" + std::to_string(fam.a);
        case FamilyKind::ElementaryAbelian:
            return "EA:" + std::to_string(fam.a) + "," + std::to_string(fam.b);
        case FamilyKind::Heisenberg: return "heis:" + std::to_string(fam.a);
        case FamilyKind::Product: return "prod";
        case FamilyKind::Adhoc: return "adhoc";
    }
    return "adhoc";
}

int FiniteGroup::pow(int g, int k) const {
    int acc = identity, base = g;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

namespace {

constexpr int hard_table_cap = 2048;  // keeps table allocation sane

void check_order(int order, const char* who) {
    if (order < 1) throw std::invalid_argument(std::string(who) + ": invalid order");
    if (order > hard_table_cap)
        throw std::invalid_argument(std::string(who) + ": order exceeds table cap");
}

FiniteGroup with_inverses(FiniteGroup g) {
    g.inverse.assign(g.order, -1);
    for (int i = 0; i < g.order; ++i) {
        for (int j = 0; j < g.order; ++j) {
            if (g.mul(i, j) == g.identity && g.mul(j, i) == g.identity) {
                g.inverse[i] = j;
                break;
            }
        }
        if (g.inverse[i] < 0) throw std::logic_error("constructor produced element with no inverse");
    }
    return g;
}

}  // namespace

FiniteGroup make_cyclic(int n) {
    check_order(n, "make_cyclic");
    FiniteGroup g;
    g.order = n;
    g.identity = 0;
    g.family = {FamilyKind::Cyclic, n, 0};
    g.table.resize(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.table[i * n + j] = (i + j) % n;
    g.generators = {{"g", 1 % n}};
    return with_inverses(std::move(g));
}

FiniteGroup make_dihedral(int n) {
    check_order(n, "make_dihedral");
    // indices: i < n is r^i, n + i is r^i s
    const int order = 2 * n;
    check_order(order, "make_dihedral");
    FiniteGroup g;
    g.order = order;
    g.identity = 0;
    g.family = {FamilyKind::Dihedral, n, 0};
    g.table.resize(order * order);
    auto rot = [n](int i) { return ((i % n) + n) % n; };
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) {
            int v;
            if (i < n && j < n) v = rot(i + j);
            else if (i < n) v = n + rot(i + (j - n));
            else if (j < n) v = n + rot((i - n) - j);
            else v = rot((i - n) - (j - n));
            g.table[i * order + j] = v;
        }
    }
    g.generators = {{"r", 1 % n}, {"s", n}};
    return with_inverses(std::move(g));
}

FiniteGroup make_dicyclic(int m) {
    check_order(m, "make_dicyclic");
    // indices: i < 2m is x^i, 2m + i is x^i y;  y^2 = x^m, y x y^-1 = x^-1
    const int nn = 2 * m, order = 4 * m;
    check_order(order, "make_dicyclic");
    FiniteGroup g;
    g.order = order;
    g.identity = 0;
    g.family = {FamilyKind::Dicyclic, m, 0};
    g.table.resize(order * order);
    auto rot = [nn](int i) { return ((i % nn) + nn) % nn; };
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) {
            int v;
            if (i < nn && j < nn) v = rot(i + j);
            else if (i < nn) v = nn + rot(i + (j - nn));
            else if (j < nn) v = nn + rot((i - nn) - j);
            else v = rot((i - nn) - (j - nn) + m);
            g.table[i * order + j] = v;
        }
    }
    g.generators = {{"x", 1 % nn}, {"y", nn}};
    return with_inverses(std::move(g));
}

FiniteGroup make_elementary_abelian(int p, int k, int max_order) {
    if (!is_prime(p)) throw std::invalid_argument("make_elementary_abelian: p must be prime");
    if (k < 1) throw std::invalid_argument("make_elementary_abelian: k must be positive");
    long long ord = 1;
    for (int i = 0; i < k; ++i) {
        ord *= p;
        if (ord > max_order)
            throw std::invalid_argument("make_elementary_abelian: order cap exceeded");
    }
    const int order = static_cast<int>(ord);
    FiniteGroup g;
    g.order = order;
    g.identity = 0;
    g.family = {FamilyKind::ElementaryAbelian, p, k};
    g.table.resize(order * order);
    // element index = row-major tuple (a_1,...,a_k), a_1 most significant
    std::vector<int> ai(k), bj(k);
    for (int i = 0; i < order; ++i) {
        int t = i;
        for (int d = k - 1; d >= 0; --d) { ai[d] = t % p; t /= p; }
        for (int j = 0; j < order; ++j) {
            t = j;
            for (int d = k - 1; d >= 0; --d) { bj[d] = t % p; t /= p; }
            int v = 0;
            for (int d = 0; d < k; ++d) v = v * p + (ai[d] + bj[d]) % p;
            g.table[i * order + j] = v;
        }
    }
    int stride = order / p;
    for (int d = 0; d < k; ++d) {
        g.generators.emplace_back("g" + std::to_string(d + 1), stride);
        stride /= p;
    }
    return with_inverses(std::move(g));
}

FiniteGroup make_heisenberg(int p, int max_order) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("make_heisenberg: p must be an odd prime");
    long long ord = static_cast<long long>(p) * p * p;
    if (ord > max_order) throw std::invalid_argument("make_heisenberg: order cap exceeded");
    const int order = static_cast<int>(ord);
    // index = a*p^2 + b*p + c for the unitriangular matrix [[1,a,b],[0,1,c],[0,0,1]]
    FiniteGroup g;
    g.order = order;
    g.identity = 0;
    g.family = {FamilyKind::Heisenberg, p, 0};
    g.table.resize(order * order);
    for (int i = 0; i < order; ++i) {
        int a1 = i / (p * p), b1 = (i / p) % p, c1 = i % p;
        for (int j = 0; j < order; ++j) {
            int a2 = j / (p * p), b2 = (j / p) % p, c2 = j % p;
            int a = (a1 + a2) % p;
            int b = (b1 + b2 + a1 * c2) % p;
            int c = (c1 + c2) % p;
            g.table[i * order + j] = (a * p + b) * p + c;
        }
    }
    g.generators = {{"x", p * p}, {"y", 1}, {"z", p}};
    return with_inverses(std::move(g));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, int max_order) {
    long long ord = static_cast<long long>(g.order) * h.order;
    if (ord > max_order) throw std::invalid_argument("direct_product: order cap exceeded");
    const int order = static_cast<int>(ord);
    FiniteGroup p;
    p.order = order;
    p.identity = g.identity * h.order + h.identity;
    p.family = {FamilyKind::Product, 0, 0};
    p.table.resize(order * order);
    for (int i = 0; i < order; ++i) {
        int gi = i / h.order, hi = i % h.order;
        for (int j = 0; j < order; ++j) {
            int gj = j / h.order, hj = j % h.order;
            p.table[i * order + j] = g.mul(gi, gj) * h.order + h.mul(hi, hj);
        }
    }
    for (const auto& [name, idx] : g.generators)
        p.generators.emplace_back(name + "_1", idx * h.order + h.identity);
    for (const auto& [name, idx] : h.generators)
        p.generators.emplace_back(name + "_2", g.identity * h.order + idx);
    return with_inverses(std::move(p));
}

int element_order(const FiniteGroup& g, int x) {
    if (x < 0 || x >= g.order) throw std::invalid_argument("element_order: index out of range");
    int y = x, k = 1;
    while (y != g.identity) {
        y = g.mul(y, x);
        ++k;
    }
    return k;
}

int exponent(const FiniteGroup& g) {
    long long e = 1;
    for (int i = 0; i < g.order; ++i) e = std::lcm(e, static_cast<long long>(element_order(g, i)));
    return static_cast<int>(e);
}

bool is_abelian(const FiniteGroup& g) {
    for (int i = 0; i < g.order; ++i)
        for (int j = i + 1; j < g.order; ++j)
            if (g.mul(i, j) != g.mul(j, i)) return false;
    return true;
}

std::vector<int> center(const FiniteGroup& g) {
    std::vector<int> z;
    for (int i = 0; i < g.order; ++i) {
        bool central = true;
        for (int j = 0; j < g.order && central; ++j) central = g.mul(i, j) == g.mul(j, i);
        if (central) z.push_back(i);
    }
    return z;
}

std::vector<int> closure_of(const FiniteGroup& g, const std::vector<int>& seed) {
    std::vector<char> in(g.order, 0);
    std::vector<int> list;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            list.push_back(x);
        }
    };
    add(g.identity);
    for (int s : seed) {
        if (s < 0 || s >= g.order) throw std::invalid_argument("closure_of: index out of range");
        add(s);
    }
    // every ordered pair gets multiplied once the later element is processed
    for (std::size_t qi = 0; qi < list.size(); ++qi) {
        int a = list[qi];
        for (std::size_t j = 0; j < list.size(); ++j) {
            add(g.mul(a, list[j]));
            add(g.mul(list[j], a));
        }
    }
    std::sort(list.begin(), list.end());
    return list;
}

std::vector<int> small_generating_set(const FiniteGroup& g) {
    std::vector<int> gens;
    for (const auto& [name, idx] : g.generators)
        if (idx != g.identity && std::find(gens.begin(), gens.end(), idx) == gens.end())
            gens.push_back(idx);
    if (static_cast<int>(closure_of(g, gens).size()) != g.order) {
        // greedy: add the first element not yet generated, repeat
        for (;;) {
            auto cl = closure_of(g, gens);
            if (static_cast<int>(cl.size()) == g.order) break;
            std::vector<char> in(g.order, 0);
            for (int x : cl) in[x] = 1;
            for (int x = 0; x < g.order; ++x)
                if (!in[x]) {
                    gens.push_back(x);
                    break;
                }
        }
    }
    for (int i = static_cast<int>(gens.size()) - 1; i >= 0; --i) {
        std::vector<int> rest;
        for (int j = 0; j < static_cast<int>(gens.size()); ++j)
            if (j != i) rest.push_back(gens[j]);
        if (static_cast<int>(closure_of(g, rest).size()) == g.order) gens = std::move(rest);
    }
    return gens;
}

AxiomReport verify_group_axioms(const FiniteGroup& g) {
    AxiomReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        if (rep.failures.size() < 8) rep.failures.push_back(std::move(msg));
    };
    if (g.order < 1 || static_cast<int>(g.table.size()) != g.order * g.order) {
        fail("table size does not match order");
        return rep;
    }
    for (int i = 0; i < g.order * g.order; ++i)
        if (g.table[i] < 0 || g.table[i] >= g.order) {
            fail("table entry out of range at cell (" + std::to_string(i / g.order) + "," +
                 std::to_string(i % g.order) + ")");
            return rep;
        }
    for (int j = 0; j < g.order; ++j) {
        if (g.mul(g.identity, j) != j)
            fail("identity row violated at j=" + std::to_string(j));
        if (g.mul(j, g.identity) != j)
            fail("identity column violated at i=" + std::to_string(j));
    }
    if (static_cast<int>(g.inverse.size()) != g.order) {
        fail("inverse array size mismatch");
    } else {
        for (int i = 0; i < g.order; ++i)
            if (g.inverse[i] < 0 || g.inverse[i] >= g.order ||
                g.mul(i, g.inverse[i]) != g.identity)
                fail("inverse violated at i=" + std::to_string(i));
    }
    auto assoc_at = [&](int i, int j, int k) {
        if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k))) {
            fail("associativity violated at triple (" + std::to_string(i) + "," +
                 std::to_string(j) + "," + std::to_string(k) + ")");
            return false;
        }
        return true;
    };
    if (g.order <= 256) {
        for (int i = 0; i < g.order && rep.ok; ++i)
            for (int j = 0; j < g.order && rep.ok; ++j)
                for (int k = 0; k < g.order && rep.ok; ++k) assoc_at(i, j, k);
    } else {
        std::uint64_t state = 0x9e3779b97f4a7c15ull;  // fixed-seed sample above 256
        auto next = [&] {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        for (int t = 0; t < (1 << 21) && rep.ok; ++t) {
            int i = static_cast<int>(next() % g.order);
            int j = static_cast<int>(next() % g.order);
            int k = static_cast<int>(next() % g.order);
            assoc_at(i, j, k);
        }
    }
    std::vector<int> gen_idx;
    for (const auto& [name, idx] : g.generators) gen_idx.push_back(idx);
    if (static_cast<int>(closure_of(g, gen_idx).size()) != g.order)
        fail("generators do not generate the group");
    return rep;
}

}  // namespace autcl
