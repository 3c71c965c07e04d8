#include "autcl/export.hpp"

namespace autcl {

using nlohmann::json;

json group_to_json(const FiniteGroup& g) {
    json j;
    j["family"] = family_tag(g.family);
    j["order"] = g.order;
    json gens = json::array();
    for (const auto& [name, idx] : g.generators) gens.push_back({{"name", name}, {"index", idx}});
    j["generators"] = gens;
    json table = json::array();
    for (int i = 0; i < g.order; ++i) {
        json row = json::array();
        for (int k = 0; k < g.order; ++k) row.push_back(g.mul(i, k));
        table.push_back(row);
    }
    j["table"] = table;
    return j;
}

json lattice_to_json(const SubgroupLattice& lat) {
    json j;
    j["order"] = lat.parent->order;
    j["count"] = lat.count();
    json subs = json::array();
    for (const auto& s : lat.subgroups) subs.push_back(s.members);
    j["subgroups"] = subs;
    json leq = json::array();
    for (int i = 0; i < lat.count(); ++i) {
        json row = json::array();
        for (int k = 0; k < lat.count(); ++k) row.push_back(lat.le(i, k) ? 1 : 0);
        leq.push_back(row);
    }
    j["leq"] = leq;
    return j;
}

json aut_to_json(const AutomorphismGroup& a) {
    json j;
    j["count"] = a.count();
    json perms = json::array();
    for (const auto& f : a.elements) perms.push_back(f.perm);
    j["perms"] = perms;
    return j;
}

json class_poset_to_json(const ClassPoset& p) {
    json j;
    json classes = json::array();
    for (int i = 0; i < p.count(); ++i) {
        const auto& cls = p.classes[i];
        json members = json::array();
        for (int idx : cls.subgroup_indices) members.push_back(p.lattice.subgroups[idx].members);
        classes.push_back({{"label", p.labels[i]},
                           {"subgroup_order", cls.subgroup_order},
                           {"canonical", cls.canonical},
                           {"members", members}});
    }
    j["classes"] = classes;
    json leq = json::array();
    for (int i = 0; i < p.count(); ++i) {
        json row = json::array();
        for (int k = 0; k < p.count(); ++k) row.push_back(p.le(i, k) ? 1 : 0);
        leq.push_back(row);
    }
    j["leq"] = leq;
    json hasse = json::array();
    for (auto [lo, hi] : p.hasse) hasse.push_back({lo, hi});
    j["hasse"] = hasse;
    if (p.lattice_tables) {
        json meet = json::array(), join = json::array();
        for (int i = 0; i < p.count(); ++i) {
            json mrow = json::array(), jrow = json::array();
            for (int k = 0; k < p.count(); ++k) {
                mrow.push_back(p.lattice_tables->meet_at(i, k));
                jrow.push_back(p.lattice_tables->join_at(i, k));
            }
            meet.push_back(mrow);
            join.push_back(jrow);
        }
        j["meet"] = meet;
        j["join"] = join;
    }
    return j;
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string dot_of(const std::vector<std::string>& labels,
                   const std::vector<std::pair<int, int>>& edges) {
    std::string out = "digraph {\n  rankdir=BT;\n";
    for (const auto& lab : labels) out += "  " + quote(lab) + ";\n";
    for (auto [lo, hi] : edges) out += "  " + quote(labels[lo]) + " -> " + quote(labels[hi]) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace

std::string poset_to_dot(const Poset& p) {
    std::vector<std::string> labels = p.labels;
    if (static_cast<int>(labels.size()) != p.n) {
        labels.resize(p.n);
        for (int i = 0; i < p.n; ++i) labels[i] = std::to_string(i);
    }
    return dot_of(labels, hasse_edges(p));
}

std::string lattice_to_dot(const SubgroupLattice& lat) {
    Poset p;
    p.n = lat.count();
    p.leq = lat.leq;
    p.labels.resize(p.n);
    for (int i = 0; i < p.n; ++i) {
        std::string lab = "{";
        const auto& mem = lat.subgroups[i].members;
        for (std::size_t k = 0; k < mem.size(); ++k) {
            if (k) lab += ",";
            lab += std::to_string(mem[k]);
        }
        p.labels[i] = lab + "}";
    }
    return poset_to_dot(p);
}

}  // namespace autcl
