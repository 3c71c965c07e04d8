#include "autcl/subgroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace autcl {

bool Subgroup::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

bool members_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

int SubgroupLattice::index_of(const std::vector<int>& members) const {
    auto it = std::lower_bound(subgroups.begin(), subgroups.end(), members,
                               [](const Subgroup& s, const std::vector<int>& m) {
                                   return members_less(s.members, m);
                               });
    if (it == subgroups.end() || it->members != members) return -1;
    return static_cast<int>(it - subgroups.begin());
}

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& seed) {
    return {g, closure_of(*g, seed)};
}

namespace {

// Shared finalizer: sorts canonically, checks Lagrange, builds leq and
// (optionally) meet/join tables.
SubgroupLattice finalize_lattice(GroupPtr g, std::vector<std::pair<std::vector<int>, SubgroupTag>> subs,
                                 int eager_tables_limit) {
    std::sort(subs.begin(), subs.end(),
              [](const auto& a, const auto& b) { return members_less(a.first, b.first); });
    for (std::size_t i = 1; i < subs.size(); ++i)
        if (subs[i].first == subs[i - 1].first)
            throw std::logic_error("subgroup listing contains a duplicate");

    SubgroupLattice lat;
    lat.parent = g;
    for (auto& [members, tag] : subs) {
        if (g->order % static_cast<int>(members.size()) != 0)
            throw std::logic_error("subgroup order does not divide group order");
        lat.subgroups.push_back({g, std::move(members)});
        lat.tags.push_back(tag);
    }
    const int c = lat.count();
    lat.leq.assign(c * c, 0);
    for (int i = 0; i < c; ++i) {
        const auto& a = lat.subgroups[i].members;
        for (int j = 0; j < c; ++j) {
            const auto& b = lat.subgroups[j].members;
            if (a.size() <= b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end()))
                lat.leq[i * c + j] = 1;
        }
    }
    if (c <= eager_tables_limit) {
        lat.meet_table.assign(c * c, -1);
        lat.join_table.assign(c * c, -1);
        for (int i = 0; i < c; ++i) {
            for (int j = i; j < c; ++j) {
                const auto& a = lat.subgroups[i].members;
                const auto& b = lat.subgroups[j].members;
                std::vector<int> isect;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(isect));
                int mi = lat.index_of(isect);
                std::vector<int> uni;
                std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
                int ji = lat.index_of(closure_of(*g, uni));
                if (mi < 0 || ji < 0)
                    throw std::logic_error("meet/join fell outside the subgroup list");
                lat.meet_table[i * c + j] = lat.meet_table[j * c + i] = mi;
                lat.join_table[i * c + j] = lat.join_table[j * c + i] = ji;
            }
        }
    }
    return lat;
}

}  // namespace

SubgroupLattice all_subgroups(const GroupPtr& g, int max_order, int eager_tables_limit) {
    const FiniteGroup& G = *g;
    if (G.order > max_order) throw std::invalid_argument("all_subgroups: order cap exceeded");

    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> list;
    auto add = [&](std::vector<int> members) {
        if (seen.insert(members).second) list.push_back(std::move(members));
    };
    add({G.identity});
    for (int x = 0; x < G.order; ++x) {
        std::vector<int> cyc{G.identity};
        for (int y = x; y != G.identity; y = G.mul(y, x)) cyc.push_back(y);
        std::sort(cyc.begin(), cyc.end());
        add(std::move(cyc));
    }
    // saturate under pairwise join
    for (std::size_t qi = 0; qi < list.size(); ++qi) {
        for (std::size_t j = 0; j < qi; ++j) {
            const auto& a = list[qi];
            const auto& b = list[j];
            if (std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
                std::includes(b.begin(), b.end(), a.begin(), a.end()))
                continue;
            std::vector<int> uni;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
            add(closure_of(G, uni));
        }
    }
    std::vector<std::pair<std::vector<int>, SubgroupTag>> subs;
    subs.reserve(list.size());
    for (auto& members : list) subs.emplace_back(std::move(members), SubgroupTag{});
    return finalize_lattice(g, std::move(subs), eager_tables_limit);
}

SubgroupLattice dihedral_subgroups_closed_form(const GroupPtr& g) {
    if (g->family.kind != FamilyKind::Dihedral)
        throw std::invalid_argument("dihedral_subgroups_closed_form: group is not dihedral");
    const int n = g->family.a;
    std::vector<std::pair<std::vector<int>, SubgroupTag>> subs;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        std::vector<int> rot;
        for (int k = 0; k * d < n; ++k) rot.push_back(k * d);
        subs.emplace_back(rot, SubgroupTag{SubgroupType::Type1, d, 0});
        for (int i = 0; i < d; ++i) {
            std::vector<int> members = rot;
            for (int k = 0; k * d < n; ++k) members.push_back(n + k * d + i);
            subs.emplace_back(std::move(members), SubgroupTag{SubgroupType::Type2, d, i});
        }
    }
    return finalize_lattice(g, std::move(subs), 128);
}

SubgroupLattice dihedral_subgroups_closed_form(int n) {
    return dihedral_subgroups_closed_form(share(make_dihedral(n)));
}

SubgroupLattice dicyclic_subgroups_closed_form(const GroupPtr& g) {
    if (g->family.kind != FamilyKind::Dicyclic)
        throw std::invalid_argument("dicyclic_subgroups_closed_form: group is not dicyclic");
    const int m = g->family.a, nn = 2 * m;
    std::vector<std::pair<std::vector<int>, SubgroupTag>> subs;
    for (int d = 1; d <= nn; ++d) {
        if (nn % d != 0) continue;
        std::vector<int> rot;
        for (int k = 0; k * d < nn; ++k) rot.push_back(k * d);
        subs.emplace_back(std::move(rot), SubgroupTag{SubgroupType::Type1, d, 0});
    }
    for (int d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        for (int i = 0; i < d; ++i) {
            std::vector<int> members;
            for (int k = 0; k * d < nn; ++k) members.push_back(k * d);
            for (int k = 0; k * d < nn; ++k) members.push_back(nn + k * d + i);
            subs.emplace_back(std::move(members), SubgroupTag{SubgroupType::Type2, d, i});
        }
    }
    return finalize_lattice(g, std::move(subs), 128);
}

SubgroupLattice dicyclic_subgroups_closed_form(int m) {
    return dicyclic_subgroups_closed_form(share(make_dicyclic(m)));
}

}  // namespace autcl
