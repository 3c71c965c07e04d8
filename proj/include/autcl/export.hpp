#pragma once

#include <string>

#include <json.hpp>

#include "autcl/automorphism.hpp"
#include "autcl/class_poset.hpp"
#include "autcl/group.hpp"
#include "autcl/poset.hpp"
#include "autcl/subgroup.hpp"

namespace autcl {

nlohmann::json group_to_json(const FiniteGroup& g);
nlohmann::json lattice_to_json(const SubgroupLattice& lat);
nlohmann::json aut_to_json(const AutomorphismGroup& a);
nlohmann::json class_poset_to_json(const ClassPoset& p);

// digraph { rankdir=BT; ... } with quoted node labels and one edge per Hasse
// cover, lower -> upper; byte-stable across runs.
std::string poset_to_dot(const Poset& p);

// Hasse diagram of L(G) with member-set labels.
std::string lattice_to_dot(const SubgroupLattice& lat);

}  // namespace autcl
