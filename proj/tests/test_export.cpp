#include <doctest.h>

#include "autcl/descriptor.hpp"
#include "autcl/export.hpp"
#include "autcl/models.hpp"

using namespace autcl;

TEST_CASE("group descriptors") {
    CHECK(parse_group_descriptor("Z:1").order == 1);
    CHECK(parse_group_descriptor("D:6").order == 12);
    CHECK(parse_group_descriptor("Q:3").order == 12);
    CHECK(parse_group_descriptor("EA:3,2").order == 9);
    CHECK(parse_group_descriptor("heis:3").order == 27);
    CHECK(parse_group_descriptor("prod(Z:4,Z:2)").order == 8);
    CHECK(parse_group_descriptor("prod(prod(Z:2,Z:2),Z:2)").order == 8);
    CHECK(parse_group_descriptor("  D : 5 ").order == 10);

    CHECK_THROWS_AS(parse_group_descriptor("Z:"), ParseError);
    CHECK_THROWS_AS(parse_group_descriptor("W:3"), ParseError);
    CHECK_THROWS_AS(parse_group_descriptor("Z:5 extra"), ParseError);
    CHECK_THROWS_AS(parse_group_descriptor("prod(Z:2"), ParseError);
    CHECK_THROWS_AS(parse_group_descriptor("Z:0"), ParseError);
    try {
        parse_group_descriptor("D:x");
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
    }
}

TEST_CASE("group json schema") {
    auto j = group_to_json(make_dihedral(3));
    CHECK(j["family"] == "D:3");
    CHECK(j["order"] == 6);
    CHECK(j["generators"].size() == 2);
    CHECK(j["table"].size() == 6);
    CHECK(j["table"][0][4] == 4);  // identity row
}

TEST_CASE("lattice and class poset json") {
    auto g = share(make_dicyclic(2));
    auto lat = all_subgroups(g);
    auto jl = lattice_to_json(lat);
    CHECK(jl["count"] == 6);
    CHECK(jl["subgroups"].size() == 6);
    CHECK(jl["leq"].size() == 6);

    auto p = build_autcl(g);
    auto jp = class_poset_to_json(p);
    CHECK(jp["classes"].size() == 4);
    CHECK_FALSE(jp.contains("meet"));
    is_lattice(p);
    jp = class_poset_to_json(p);
    CHECK(jp.contains("meet"));
    CHECK(jp.contains("join"));
    CHECK(jp["hasse"].size() == 3);
}

TEST_CASE("dot output") {
    auto p = build_autcl(share(make_cyclic(4)));
    std::string expected =
        "digraph {\n"
        "  rankdir=BT;\n"
        "  \"[{e}]\";\n"
        "  \"[<g^2>]\";\n"
        "  \"[<g>]\";\n"
        "  \"[{e}]\" -> \"[<g^2>]\";\n"
        "  \"[<g^2>]\" -> \"[<g>]\";\n"
        "}\n";
    CHECK(poset_to_dot(p.to_poset()) == expected);

    // identical bytes across repeated construction
    auto again = build_autcl(share(make_cyclic(4)));
    CHECK(poset_to_dot(again.to_poset()) == expected);

    auto d3 = build_autcl(share(make_dihedral(3)));
    auto dot = poset_to_dot(d3.to_poset());
    CHECK(d3.hasse.size() == 4);  // M2 shape
    CHECK(dot.find("\"[<r>]\" -> \"[<r, s>]\";") != std::string::npos);

    auto h3 = build_autcl(share(make_heisenberg(3)));
    CHECK(h3.hasse.size() == 5);  // double-atom shape

    auto latdot = lattice_to_dot(all_subgroups(share(make_elementary_abelian(2, 2))));
    CHECK(latdot.find("\"{0}\" -> ") != std::string::npos);
}

TEST_CASE("json bytes are stable") {
    auto a = class_poset_to_json(build_autcl(share(make_dihedral(6)))).dump(2);
    auto b = class_poset_to_json(build_autcl(share(make_dihedral(6)))).dump(2);
    CHECK(a == b);
}
