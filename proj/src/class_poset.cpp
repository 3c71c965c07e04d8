#include "autcl/class_poset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace autcl {

namespace {

bool same_group(const GroupPtr& a, const GroupPtr& b) {
    if (a == b) return true;
    return a && b && a->order == b->order && a->table == b->table;
}

}  // namespace

Poset ClassPoset::to_poset() const {
    Poset p;
    p.n = count();
    p.leq = leq;
    p.labels = labels;
    return p;
}

int ClassPoset::class_of(const std::vector<int>& members) const {
    int idx = lattice.index_of(members);
    if (idx < 0) return -1;
    for (int c = 0; c < count(); ++c)
        if (std::binary_search(classes[c].subgroup_indices.begin(),
                               classes[c].subgroup_indices.end(), idx))
            return c;
    return -1;
}

std::vector<AutClass> class_orbits(const SubgroupLattice& lat, const AutomorphismGroup& auts) {
    if (!same_group(lat.parent, auts.parent))
        throw std::invalid_argument("class_orbits: parent mismatch");
    const int c = lat.count();
    std::vector<char> assigned(c, 0);
    std::vector<AutClass> classes;
    std::vector<int> image;
    for (int idx = 0; idx < c; ++idx) {
        if (assigned[idx]) continue;
        // the orbit of one representative under the whole automorphism group
        std::set<int> orbit;
        for (const auto& f : auts.elements) {
            image.clear();
            for (int x : lat.subgroups[idx].members) image.push_back(f.perm[x]);
            std::sort(image.begin(), image.end());
            int k = lat.index_of(image);
            if (k < 0) throw std::logic_error("class_orbits: automorphic image is not in the lattice");
            orbit.insert(k);
        }
        AutClass cls;
        cls.subgroup_indices.assign(orbit.begin(), orbit.end());
        cls.canonical = lat.subgroups[cls.subgroup_indices.front()].members;
        cls.subgroup_order = static_cast<int>(cls.canonical.size());
        for (int k : cls.subgroup_indices) {
            assigned[k] = 1;
            if (lat.subgroups[k].order() != cls.subgroup_order)
                throw std::logic_error("class_orbits: orbit mixes subgroup orders");
        }
        classes.push_back(std::move(cls));
    }
    // scanning in canonical subgroup order already yields canonical class order
    return classes;
}

bool class_leq(const AutClass& c1, const AutClass& c2, const AutomorphismGroup& auts) {
    if (c1.canonical == c2.canonical) return true;
    if (c2.subgroup_order % c1.subgroup_order != 0) return false;
    std::vector<char> in_k(auts.parent->order, 0);
    for (int x : c2.canonical) in_k[x] = 1;
    for (const auto& f : auts.elements) {
        bool inside = true;
        for (int x : c1.canonical)
            if (!in_k[f.perm[x]]) {
                inside = false;
                break;
            }
        if (inside) return true;
    }
    return false;
}

ClassPoset build_autcl(const GroupPtr& g, BuildStrategy strategy, int max_order) {
    if (g->order > max_order) throw std::invalid_argument("build_autcl: order cap exceeded");
    const bool closed_available =
        (g->family.kind == FamilyKind::Dihedral && g->family.a >= 3) ||
        (g->family.kind == FamilyKind::Dicyclic && g->family.a >= 3);
    bool use_closed;
    switch (strategy) {
        case BuildStrategy::ClosedForm:
            if (!closed_available)
                throw std::invalid_argument(
                    "build_autcl: closed form unavailable for this family/bounds");
            use_closed = true;
            break;
        case BuildStrategy::BruteForce: use_closed = false; break;
        default: use_closed = closed_available; break;
    }

    ClassPoset p;
    p.parent = g;
    if (use_closed && g->family.kind == FamilyKind::Dihedral) {
        p.lattice = dihedral_subgroups_closed_form(g);
        p.auts = aut_dihedral_closed_form(g);
    } else if (use_closed) {
        p.lattice = dicyclic_subgroups_closed_form(g);
        p.auts = aut_dicyclic_closed_form(g);
    } else {
        p.lattice = all_subgroups(g, max_order);
        p.auts = automorphisms_bruteforce(g, max_order);
    }
    p.classes = class_orbits(p.lattice, p.auts);

    const int c = p.count();
    p.leq.assign(c * c, 0);
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j)
            if (i == j || class_leq(p.classes[i], p.classes[j], p.auts)) p.leq[i * c + j] = 1;

    if (auto bad = poset_axiom_violation(p.to_poset()))
        throw std::logic_error("build_autcl: class order is not a partial order: " + *bad);
    if (p.classes.front().canonical != std::vector<int>{g->identity} ||
        p.classes.back().subgroup_order != g->order)
        throw std::logic_error("build_autcl: bottom/top classes are not [{e}]/[G]");

    p.hasse = hasse_edges(p.to_poset());

    // labels: divisor-style for the families with singleton rotation classes,
    // generic otherwise
    p.labels.resize(c);
    auto generic_labels = [&] {
        std::vector<int> per_order_count;
        int prev_order = -1, k = 0;
        for (int i = 0; i < c; ++i) {
            int o = p.classes[i].subgroup_order;
            k = (o == prev_order) ? k + 1 : 0;
            prev_order = o;
            if (o == 1) p.labels[i] = "[{e}]";
            else if (o == g->order) p.labels[i] = "[G]";
            else p.labels[i] = "[o" + std::to_string(o) + "#" + std::to_string(k) + "]";
        }
    };
    auto power_label = [](const std::string& sym, int d) {
        return d == 1 ? sym : sym + "^" + std::to_string(d);
    };
    if (g->family.kind == FamilyKind::Cyclic) {
        for (int i = 0; i < c; ++i) {
            int o = p.classes[i].subgroup_order;
            p.labels[i] = o == 1 ? "[{e}]" : "[<" + power_label("g", g->order / o) + ">]";
        }
    } else if (g->family.kind == FamilyKind::Dihedral && g->family.a >= 3) {
        const int n = g->family.a;
        for (int i = 0; i < c; ++i) {
            const auto& cls = p.classes[i];
            bool reflections = cls.canonical.back() >= n;
            if (reflections) {
                int d = 2 * n / cls.subgroup_order;
                p.labels[i] = d == n ? "[<s>]" : "[<" + power_label("r", d) + ", s>]";
            } else {
                int d = n / cls.subgroup_order;
                p.labels[i] = d == n ? "[{e}]" : "[<" + power_label("r", d) + ">]";
            }
        }
    } else if (g->family.kind == FamilyKind::Dicyclic && g->family.a >= 3) {
        const int m = g->family.a, nn = 2 * m;
        for (int i = 0; i < c; ++i) {
            const auto& cls = p.classes[i];
            bool ypart = cls.canonical.back() >= nn;
            if (ypart) {
                int d = 4 * m / cls.subgroup_order;
                p.labels[i] = d == m ? "[<y>]" : "[<" + power_label("x", d) + ", y>]";
            } else {
                int d = nn / cls.subgroup_order;
                p.labels[i] = d == nn ? "[{e}]" : "[<" + power_label("x", d) + ">]";
            }
        }
    } else {
        generic_labels();
    }
    return p;
}

std::optional<int> poset_meet(const ClassPoset& p, int i, int j) {
    return bound_meet(p.to_poset(), i, j);
}

std::optional<int> poset_join(const ClassPoset& p, int i, int j) {
    return bound_join(p.to_poset(), i, j);
}

LatticeVerdict is_lattice(ClassPoset& p) {
    auto chk = check_lattice(p.to_poset());
    LatticeVerdict v;
    v.is_lattice = chk.is_lattice;
    if (chk.is_lattice) {
        p.lattice_tables = std::move(*chk.tables);
    } else {
        v.bad_i = chk.bad_i;
        v.bad_j = chk.bad_j;
        v.missing_meet = chk.missing_meet;
        v.candidates = chk.candidates;
    }
    return v;
}

}  // namespace autcl
