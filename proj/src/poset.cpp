#include "autcl/poset.hpp"

#include <algorithm>
#include <stdexcept>

#include "autcl/numeric.hpp"

namespace autcl {

std::optional<std::string> poset_axiom_violation(const Poset& p) {
    for (int i = 0; i < p.n; ++i)
        if (!p.le(i, i)) return "not reflexive at " + std::to_string(i);
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (i != j && p.le(i, j) && p.le(j, i))
                return "not antisymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j) {
            if (!p.le(i, j)) continue;
            for (int k = 0; k < p.n; ++k)
                if (p.le(j, k) && !p.le(i, k))
                    return "not transitive at (" + std::to_string(i) + "," + std::to_string(j) +
                           "," + std::to_string(k) + ")";
        }
    return std::nullopt;
}

namespace {

// unique maximal element of `set` within p, if any; otherwise all maximal
// elements land in `maximal`
std::optional<int> unique_maximal(const Poset& p, const std::vector<int>& set,
                                  std::vector<int>* maximal) {
    std::vector<int> maxes;
    for (int a : set) {
        bool is_max = true;
        for (int b : set)
            if (a != b && p.le(a, b)) {
                is_max = false;
                break;
            }
        if (is_max) maxes.push_back(a);
    }
    if (maxes.size() == 1) return maxes[0];
    if (maximal) *maximal = std::move(maxes);
    return std::nullopt;
}

std::optional<int> unique_minimal(const Poset& p, const std::vector<int>& set,
                                  std::vector<int>* minimal) {
    std::vector<int> mins;
    for (int a : set) {
        bool is_min = true;
        for (int b : set)
            if (a != b && p.le(b, a)) {
                is_min = false;
                break;
            }
        if (is_min) mins.push_back(a);
    }
    if (mins.size() == 1) return mins[0];
    if (minimal) *minimal = std::move(mins);
    return std::nullopt;
}

}  // namespace

std::optional<int> bound_meet(const Poset& p, int i, int j) {
    std::vector<int> lower;
    for (int k = 0; k < p.n; ++k)
        if (p.le(k, i) && p.le(k, j)) lower.push_back(k);
    return unique_maximal(p, lower, nullptr);
}

std::optional<int> bound_join(const Poset& p, int i, int j) {
    std::vector<int> upper;
    for (int k = 0; k < p.n; ++k)
        if (p.le(i, k) && p.le(j, k)) upper.push_back(k);
    return unique_minimal(p, upper, nullptr);
}

LatticeCheck check_lattice(const Poset& p) {
    LatticeCheck out;
    LatticeTables t;
    t.n = p.n;
    t.meet.assign(p.n * p.n, -1);
    t.join.assign(p.n * p.n, -1);
    for (int i = 0; i < p.n; ++i) {
        for (int j = i; j < p.n; ++j) {
            std::vector<int> lower, upper;
            for (int k = 0; k < p.n; ++k) {
                if (p.le(k, i) && p.le(k, j)) lower.push_back(k);
                if (p.le(i, k) && p.le(j, k)) upper.push_back(k);
            }
            std::vector<int> ambiguous;
            auto m = unique_maximal(p, lower, &ambiguous);
            if (!m) {
                out.bad_i = i;
                out.bad_j = j;
                out.missing_meet = true;
                out.candidates = std::move(ambiguous);
                return out;
            }
            auto jn = unique_minimal(p, upper, &ambiguous);
            if (!jn) {
                out.bad_i = i;
                out.bad_j = j;
                out.missing_meet = false;
                out.candidates = std::move(ambiguous);
                return out;
            }
            t.meet[i * p.n + j] = t.meet[j * p.n + i] = *m;
            t.join[i * p.n + j] = t.join[j * p.n + i] = *jn;
        }
    }
    out.is_lattice = true;
    out.tables = std::move(t);
    return out;
}

Lattice as_lattice(const Poset& p) {
    auto chk = check_lattice(p);
    if (!chk.is_lattice) throw std::invalid_argument("as_lattice: poset is not a lattice");
    return {p, std::move(*chk.tables)};
}

std::vector<std::pair<int, int>> hasse_edges(const Poset& p) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < p.n; ++i) {
        for (int j = 0; j < p.n; ++j) {
            if (i == j || !p.le(i, j)) continue;
            bool cover = true;
            for (int k = 0; k < p.n && cover; ++k)
                if (k != i && k != j && p.le(i, k) && p.le(k, j)) cover = false;
            if (cover) edges.emplace_back(i, j);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

bool is_chain(const Poset& p) {
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j)
            if (!p.le(i, j) && !p.le(j, i)) return false;
    return true;
}

LawResult is_distributive(const Lattice& l) {
    const auto& t = l.tables;
    for (int x = 0; x < t.n; ++x)
        for (int y = 0; y < t.n; ++y)
            for (int z = 0; z < t.n; ++z)
                if (t.meet_at(x, t.join_at(y, z)) !=
                    t.join_at(t.meet_at(x, y), t.meet_at(x, z)))
                    return {false, TripleWitness{x, y, z}};
    return {};
}

LawResult is_modular(const Lattice& l) {
    const auto& t = l.tables;
    for (int x = 0; x < t.n; ++x)
        for (int z = 0; z < t.n; ++z) {
            if (!l.poset.le(x, z)) continue;
            for (int y = 0; y < t.n; ++y)
                if (t.join_at(x, t.meet_at(y, z)) != t.meet_at(t.join_at(x, y), z))
                    return {false, TripleWitness{x, y, z}};
        }
    return {};
}

ComplementResult is_complemented(const Lattice& l) {
    const auto& t = l.tables;
    int bottom = 0, top = 0;
    for (int i = 0; i < t.n; ++i) {
        bottom = t.meet_at(bottom, i);
        top = t.join_at(top, i);
    }
    for (int a = 0; a < t.n; ++a) {
        bool found = false;
        for (int b = 0; b < t.n && !found; ++b)
            found = t.meet_at(a, b) == bottom && t.join_at(a, b) == top;
        if (!found) return {false, a};
    }
    return {};
}

std::optional<SublatticeWitness> find_sublattice_N5(const Lattice& l) {
    const auto& p = l.poset;
    const auto& t = l.tables;
    // pentagon: a < b on one side, c incomparable to both, with
    // a^c = b^c and a v c = b v c; the five elements are then closed
    for (int a = 0; a < p.n; ++a)
        for (int b = 0; b < p.n; ++b) {
            if (a == b || !p.le(a, b)) continue;
            for (int c = 0; c < p.n; ++c) {
                if (p.le(c, a) || p.le(a, c) || p.le(c, b) || p.le(b, c)) continue;
                int m = t.meet_at(a, c), jn = t.join_at(a, c);
                if (m == t.meet_at(b, c) && jn == t.join_at(b, c))
                    return SublatticeWitness{{m, a, b, c, jn}};
            }
        }
    return std::nullopt;
}

std::optional<SublatticeWitness> find_sublattice_M3(const Lattice& l) {
    const auto& p = l.poset;
    const auto& t = l.tables;
    // diamond: pairwise incomparable triple with a common meet and join
    for (int a = 0; a < p.n; ++a)
        for (int b = a + 1; b < p.n; ++b) {
            if (p.le(a, b) || p.le(b, a)) continue;
            int m = t.meet_at(a, b), jn = t.join_at(a, b);
            for (int c = b + 1; c < p.n; ++c) {
                if (p.le(a, c) || p.le(c, a) || p.le(b, c) || p.le(c, b)) continue;
                if (t.meet_at(a, c) == m && t.meet_at(b, c) == m && t.join_at(a, c) == jn &&
                    t.join_at(b, c) == jn)
                    return SublatticeWitness{{m, a, b, c, jn}};
            }
        }
    return std::nullopt;
}

namespace {

struct Signature {
    int down = 0, up = 0, covers_below = 0, covers_above = 0;
    auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const Poset& p) {
    auto edges = hasse_edges(p);
    std::vector<Signature> sig(p.n);
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j) {
            if (p.le(j, i)) ++sig[i].down;
            if (p.le(i, j)) ++sig[i].up;
        }
    for (auto [lo, hi] : edges) {
        ++sig[lo].covers_above;
        ++sig[hi].covers_below;
    }
    return sig;
}

bool extend_map(const Poset& p, const Poset& q, const std::vector<Signature>& sp,
                const std::vector<Signature>& sq, std::vector<int>& map, std::vector<char>& used,
                int next) {
    if (next == p.n) return true;
    for (int cand = 0; cand < q.n; ++cand) {
        if (used[cand] || sp[next] != sq[cand]) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev)
            ok = p.le(prev, next) == q.le(map[prev], cand) &&
                 p.le(next, prev) == q.le(cand, map[prev]);
        if (!ok) continue;
        map[next] = cand;
        used[cand] = 1;
        if (extend_map(p, q, sp, sq, map, used, next + 1)) return true;
        used[cand] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> poset_isomorphic(const Poset& p, const Poset& q) {
    if (p.n != q.n) return std::nullopt;
    auto sp = signatures(p), sq = signatures(q);
    auto mp = sp, mq = sq;
    std::sort(mp.begin(), mp.end());
    std::sort(mq.begin(), mq.end());
    if (mp != mq) return std::nullopt;
    std::vector<int> map(p.n, -1);
    std::vector<char> used(q.n, 0);
    if (!extend_map(p, q, sp, sq, map, used, 0)) return std::nullopt;
    // paranoid re-verification edge by edge
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (p.le(i, j) != q.le(map[i], map[j]))
                throw std::logic_error("poset_isomorphic produced an invalid mapping");
    return map;
}

Poset catalog(CatalogKind kind, int parameter) {
    Poset p;
    auto alloc = [&](int n) {
        p.n = n;
        p.leq.assign(n * n, 0);
        for (int i = 0; i < n; ++i) p.leq[i * n + i] = 1;
        p.labels.resize(n);
    };
    auto set = [&](int i, int j) { p.leq[i * p.n + j] = 1; };
    switch (kind) {
        case CatalogKind::Chain: {
            if (parameter < 1) throw std::invalid_argument("catalog: chain needs k >= 1");
            alloc(parameter);
            for (int i = 0; i < p.n; ++i) {
                p.labels[i] = std::to_string(i);
                for (int j = i; j < p.n; ++j) set(i, j);
            }
            break;
        }
        case CatalogKind::M2: {
            alloc(4);
            p.labels = {"0", "a", "b", "1"};
            set(0, 1); set(0, 2); set(0, 3); set(1, 3); set(2, 3);
            break;
        }
        case CatalogKind::M3: {
            alloc(5);
            p.labels = {"0", "a", "b", "c", "1"};
            for (int m = 1; m <= 3; ++m) { set(0, m); set(m, 4); }
            set(0, 4);
            break;
        }
        case CatalogKind::N5: {
            alloc(5);
            p.labels = {"0", "a", "b", "c", "1"};
            set(0, 1); set(1, 2); set(0, 2); set(0, 3);
            set(1, 4); set(2, 4); set(3, 4); set(0, 4);
            break;
        }
        case CatalogKind::Divisor: {
            if (parameter < 1) throw std::invalid_argument("catalog: divisor lattice needs n >= 1");
            auto divs = divisors(parameter);
            alloc(static_cast<int>(divs.size()));
            for (int i = 0; i < p.n; ++i) {
                p.labels[i] = std::to_string(divs[i]);
                for (int j = 0; j < p.n; ++j)
                    if (divs[j] % divs[i] == 0) set(i, j);
            }
            break;
        }
        case CatalogKind::Boolean: {
            if (parameter < 0 || parameter > 10)
                throw std::invalid_argument("catalog: boolean lattice needs 0 <= k <= 10");
            alloc(1 << parameter);
            for (int i = 0; i < p.n; ++i) {
                std::string lab = "{";
                for (int b = 0; b < parameter; ++b)
                    if (i & (1 << b)) lab += (lab.size() > 1 ? "," : "") + std::to_string(b + 1);
                p.labels[i] = lab + "}";
                for (int j = 0; j < p.n; ++j)
                    if ((i & j) == i) set(i, j);
            }
            break;
        }
        case CatalogKind::Figure9: {
            // bottom < {a, b} < c < top with a, b incomparable
            alloc(5);
            p.labels = {"0", "a", "b", "c", "1"};
            set(0, 1); set(0, 2); set(0, 3); set(0, 4);
            set(1, 3); set(1, 4); set(2, 3); set(2, 4); set(3, 4);
            break;
        }
    }
    return p;
}

}  // namespace autcl
