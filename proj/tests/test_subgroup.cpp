#include <doctest.h>

#include "autcl/numeric.hpp"
#include "autcl/subgroup.hpp"

using namespace autcl;

TEST_CASE("generated subgroups") {
    auto d6 = share(make_dihedral(6));
    CHECK(generated_subgroup(d6, {}).members == std::vector<int>{0});
    CHECK(generated_subgroup(d6, {1}).members == std::vector<int>{0, 1, 2, 3, 4, 5});
    // <r^2, s> has index 2
    CHECK(generated_subgroup(d6, {2, 6}).members == std::vector<int>{0, 2, 4, 6, 8, 10});
    CHECK_THROWS_AS(generated_subgroup(d6, {99}), std::invalid_argument);
}

TEST_CASE("brute-force enumeration counts") {
    CHECK(all_subgroups(share(make_cyclic(12))).count() == 6);
    CHECK(all_subgroups(share(make_dihedral(6))).count() == 16);

    auto q8 = all_subgroups(share(make_dicyclic(2)));
    CHECK(q8.count() == 6);
    CHECK(q8.subgroups[0].members == std::vector<int>{0});
    CHECK(q8.subgroups[1].members == std::vector<int>{0, 2});  // the unique involution
    CHECK(q8.subgroups[2].members == std::vector<int>{0, 1, 2, 3});
    CHECK(q8.subgroups[3].members == std::vector<int>{0, 2, 4, 6});
    CHECK(q8.subgroups[4].members == std::vector<int>{0, 2, 5, 7});
    CHECK(q8.subgroups[5].order() == 8);

    // for cyclic groups the lattice size is the divisor count
    for (int n = 1; n <= 20; ++n)
        CHECK(all_subgroups(share(make_cyclic(n))).count() == tau(n));

    // Klein four-group: three subgroups of order 2; (Z_3)^2: four of order 3
    auto k4 = all_subgroups(share(make_elementary_abelian(2, 2)));
    CHECK(k4.count() == 5);
    auto e9 = all_subgroups(share(make_elementary_abelian(3, 2)));
    CHECK(e9.count() == 6);
    int k4_two = 0, e9_three = 0;
    for (const auto& h : k4.subgroups) k4_two += h.order() == 2;
    for (const auto& h : e9.subgroups) e9_three += h.order() == 3;
    CHECK(k4_two == 3);
    CHECK(e9_three == 4);

    CHECK_THROWS_AS(all_subgroups(share(make_cyclic(600)), 512), std::invalid_argument);
}

TEST_CASE("dihedral closed-form listing") {
    CHECK(dihedral_subgroups_closed_form(4).count() == 10);  // tau(4) + sigma(4)
    CHECK(dihedral_subgroups_closed_form(1).count() == 2);

    auto g = share(make_dihedral(6));
    auto closed = dihedral_subgroups_closed_form(g);
    auto brute = all_subgroups(g);
    REQUIRE(closed.count() == brute.count());
    for (int i = 0; i < closed.count(); ++i)
        CHECK(closed.subgroups[i].members == brute.subgroups[i].members);

    int type1 = 0, type2 = 0;
    for (const auto& tag : closed.tags) {
        if (tag.type == SubgroupType::Type1) ++type1;
        if (tag.type == SubgroupType::Type2) {
            ++type2;
            CHECK(6 % tag.d == 0);
            CHECK(tag.i >= 0);
            CHECK(tag.i < tag.d);
        }
    }
    CHECK(type1 == tau(6));
    CHECK(type2 == sigma(6));
}

TEST_CASE("dicyclic closed-form listing") {
    CHECK(dicyclic_subgroups_closed_form(1).count() == 3);
    CHECK(dicyclic_subgroups_closed_form(3).count() == 8);  // tau(6) + sigma(3)

    for (int m : {1, 2, 3, 4, 5, 6}) {
        auto g = share(make_dicyclic(m));
        auto closed = dicyclic_subgroups_closed_form(g);
        auto brute = all_subgroups(g);
        REQUIRE(closed.count() == brute.count());
        CHECK(closed.count() == tau(2 * m) + sigma(m));
        for (int i = 0; i < closed.count(); ++i)
            CHECK(closed.subgroups[i].members == brute.subgroups[i].members);
    }
}

TEST_CASE("dihedral oracle equivalence sample") {
    for (int n : {1, 2, 3, 5, 8, 9, 10, 12, 15}) {
        auto g = share(make_dihedral(n));
        auto closed = dihedral_subgroups_closed_form(g);
        auto brute = all_subgroups(g);
        REQUIRE(closed.count() == brute.count());
        CHECK(closed.count() == tau(n) + sigma(n));
        for (int i = 0; i < closed.count(); ++i)
            CHECK(closed.subgroups[i].members == brute.subgroups[i].members);
    }
}

TEST_CASE("lattice structure") {
    for (auto g : {share(make_dihedral(6)), share(make_cyclic(12)), share(make_dicyclic(2)),
                   share(make_elementary_abelian(2, 2)), share(make_dihedral(4))}) {
        auto lat = all_subgroups(g);
        const int c = lat.count();
        REQUIRE(lat.has_tables());

        // bottom and top
        CHECK(lat.subgroups[lat.bottom()].members == std::vector<int>{0});
        CHECK(lat.subgroups[lat.top()].order() == g->order);
        for (int i = 0; i < c; ++i) {
            CHECK(lat.le(lat.bottom(), i));
            CHECK(lat.le(i, lat.top()));
            CHECK(lat.subgroups[i].contains(0));
            CHECK(g->order % lat.subgroups[i].order() == 0);  // Lagrange
        }

        // lattice laws, exhaustively
        for (int i = 0; i < c; ++i) {
            CHECK(lat.meet(i, i) == i);
            CHECK(lat.join(i, i) == i);
            for (int j = 0; j < c; ++j) {
                CHECK(lat.meet(i, j) == lat.meet(j, i));
                CHECK(lat.join(i, j) == lat.join(j, i));
                CHECK(lat.meet(i, lat.join(i, j)) == i);  // absorption
                CHECK(lat.join(i, lat.meet(i, j)) == i);
                for (int k = 0; k < c; ++k) {
                    CHECK(lat.meet(lat.meet(i, j), k) == lat.meet(i, lat.meet(j, k)));
                    CHECK(lat.join(lat.join(i, j), k) == lat.join(i, lat.join(j, k)));
                }
            }
        }

        // meet is below its arguments, join above
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < c; ++j) {
                CHECK(lat.le(lat.meet(i, j), i));
                CHECK(lat.le(i, lat.join(i, j)));
            }
    }
}

TEST_CASE("every enumerated subgroup is closed") {
    for (auto g : {share(make_dihedral(8)), share(make_dicyclic(3)), share(make_heisenberg(3))}) {
        auto lat = all_subgroups(g);
        for (const auto& h : lat.subgroups) {
            CHECK(h.contains(g->identity));
            for (int a : h.members) {
                CHECK(h.contains(g->inv(a)));
                for (int b : h.members) CHECK(h.contains(g->mul(a, b)));
            }
        }
    }
    auto wrong_family = share(make_cyclic(6));
    CHECK_THROWS_AS(dihedral_subgroups_closed_form(wrong_family), std::invalid_argument);
    CHECK_THROWS_AS(dicyclic_subgroups_closed_form(wrong_family), std::invalid_argument);
}

TEST_CASE("index lookup") {
    auto lat = all_subgroups(share(make_dicyclic(2)));
    CHECK(lat.index_of({0, 2}) == 1);
    CHECK(lat.index_of({0, 1}) == -1);
    CHECK(lat.index_of({0, 2, 4, 6}) == 3);
}
