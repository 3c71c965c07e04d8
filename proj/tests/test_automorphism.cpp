#include <doctest.h>

#include <random>

#include "autcl/automorphism.hpp"
#include "autcl/numeric.hpp"

using namespace autcl;

TEST_CASE("brute-force automorphism counts") {
    CHECK(automorphisms_bruteforce(share(make_cyclic(12))).count() == 4);  // phi(12)
    for (int n : {1, 2, 3, 5, 8, 10})
        CHECK(automorphisms_bruteforce(share(make_cyclic(n))).count() == totient(n));
    CHECK(automorphisms_bruteforce(share(make_elementary_abelian(2, 2))).count() == 6);
    CHECK(automorphisms_bruteforce(share(make_dihedral(6))).count() == 12);  // n phi(n)
    CHECK(automorphisms_bruteforce(share(make_heisenberg(3))).count() == 432);
}

TEST_CASE("closed forms match brute force") {
    for (int n = 3; n <= 8; ++n) {
        auto g = share(make_dihedral(n));
        auto closed = aut_dihedral_closed_form(g);
        auto brute = automorphisms_bruteforce(g);
        REQUIRE(closed.count() == n * totient(n));
        REQUIRE(closed.count() == brute.count());
        for (int i = 0; i < closed.count(); ++i)
            CHECK(closed.elements[i].perm == brute.elements[i].perm);
    }
    for (int m = 3; m <= 5; ++m) {
        auto g = share(make_dicyclic(m));
        auto closed = aut_dicyclic_closed_form(g);
        auto brute = automorphisms_bruteforce(g);
        REQUIRE(closed.count() == 2 * m * totient(2 * m));
        REQUIRE(closed.count() == brute.count());
        for (int i = 0; i < closed.count(); ++i)
            CHECK(closed.elements[i].perm == brute.elements[i].perm);
    }
    CHECK(aut_dicyclic_closed_form(4).count() == 32);  // 8 * phi(8)

    CHECK_THROWS_AS(aut_dihedral_closed_form(2), std::invalid_argument);
    CHECK_THROWS_AS(aut_dicyclic_closed_form(2), std::invalid_argument);
}

TEST_CASE("closed form contains the identity at (a,b) = (1,0)") {
    auto a = aut_dihedral_closed_form(5);
    Automorphism id;
    id.perm.resize(10);
    for (int i = 0; i < 10; ++i) id.perm[i] = i;
    CHECK(a.contains(id));
    CHECK(aut_dicyclic_closed_form(3).contains(
        Automorphism{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}));
}

TEST_CASE("every emitted map is an automorphism") {
    for (auto g : {share(make_dihedral(5)), share(make_dicyclic(3)),
                   share(make_elementary_abelian(2, 2)), share(make_cyclic(8)),
                   share(make_heisenberg(3))}) {
        auto a = automorphisms_bruteforce(g);
        for (const auto& f : a.elements) CHECK(is_automorphism(*g, f));
        for (int i = 1; i < a.count(); ++i)
            CHECK(a.elements[i - 1].perm != a.elements[i].perm);  // duplicate-free
    }
    for (const auto& f : aut_dihedral_closed_form(7).elements)
        CHECK(is_automorphism(make_dihedral(7), f));
    for (const auto& f : aut_dicyclic_closed_form(4).elements)
        CHECK(is_automorphism(make_dicyclic(4), f));
}

TEST_CASE("closure under composition and inversion, spot-checked") {
    auto a = automorphisms_bruteforce(share(make_dihedral(6)));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, a.count() - 1);
    for (int t = 0; t < 50; ++t) {
        const auto& f = a.elements[pick(rng)];
        const auto& g = a.elements[pick(rng)];
        CHECK(a.contains(compose(f, g)));
        CHECK(a.contains(inverse_automorphism(f)));
    }
    Automorphism id;
    id.perm.resize(12);
    for (int i = 0; i < 12; ++i) id.perm[i] = i;
    CHECK(a.contains(id));
}

TEST_CASE("applying automorphisms to subgroups") {
    auto d5 = share(make_dihedral(5));
    auto auts = aut_dihedral_closed_form(d5);

    Subgroup s_gen{d5, {0, 5}};  // <s>
    Automorphism id;
    id.perm.resize(10);
    for (int i = 0; i < 10; ++i) id.perm[i] = i;
    CHECK(apply_automorphism(id, s_gen).members == s_gen.members);

    // r -> r, s -> r^2 s maps <s> to <r^2 s>
    Automorphism f;
    f.perm.resize(10);
    for (int i = 0; i < 5; ++i) {
        f.perm[i] = i;
        f.perm[5 + i] = 5 + (i + 2) % 5;
    }
    REQUIRE(is_automorphism(*d5, f));
    CHECK(apply_automorphism(f, s_gen).members == std::vector<int>{0, 7});

    // the unique order-2 subgroup of Q_8 is fixed by everything
    auto q8 = share(make_dicyclic(2));
    Subgroup x2{q8, {0, 2}};
    for (const auto& h : automorphisms_bruteforce(q8).elements) {
        auto img = apply_automorphism(h, x2);
        CHECK(img.members == x2.members);
        CHECK(img.order() == x2.order());
    }

    Subgroup wrong{share(make_cyclic(6)), {0}};
    CHECK_THROWS_AS(apply_automorphism(f, wrong), std::invalid_argument);
}

TEST_CASE("automorphic images are subgroups without re-closure") {
    auto g = share(make_dicyclic(3));
    auto lat = all_subgroups(g);
    auto auts = automorphisms_bruteforce(g);
    for (const auto& h : lat.subgroups)
        for (const auto& fn : auts.elements) {
            auto img = apply_automorphism(fn, h);
            CHECK(img.order() == h.order());
            for (int a : img.members)
                for (int b : img.members) CHECK(img.contains(g->mul(a, b)));
        }
}
