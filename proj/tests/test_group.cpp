#include <doctest.h>

#include <numeric>

#include "autcl/group.hpp"
#include "autcl/numeric.hpp"

using namespace autcl;

TEST_CASE("divisor helpers") {
    CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<int>{1});
    CHECK(tau(12) == 6);
    CHECK(sigma(6) == 12);
    CHECK(totient(12) == 4);
    CHECK(totient(1) == 1);
    CHECK(is_prime(2));
    CHECK(is_prime(31));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    int p = 0, k = 0;
    CHECK(is_prime_power(27, &p, &k));
    CHECK(p == 3);
    CHECK(k == 3);
    CHECK_FALSE(is_prime_power(12));
    CHECK_FALSE(is_prime_power(1));
}

TEST_CASE("cyclic groups") {
    auto z1 = make_cyclic(1);
    CHECK(z1.order == 1);
    CHECK(z1.identity == 0);

    auto z6 = make_cyclic(6);
    CHECK(element_order(z6, 1) == 6);
    CHECK(element_order(z6, 2) == 3);
    CHECK(element_order(z6, 3) == 2);
    CHECK(exponent(z6) == 6);
    CHECK(is_abelian(z6));

    CHECK_THROWS_AS(make_cyclic(0), std::invalid_argument);
}

TEST_CASE("dihedral groups") {
    auto d1 = make_dihedral(1);
    CHECK(d1.order == 2);
    CHECK(d1.table == make_cyclic(2).table);  // D_1 is Z_2 on the nose

    auto d2 = make_dihedral(2);
    CHECK(d2.order == 4);
    for (int i = 1; i < 4; ++i) CHECK(element_order(d2, i) == 2);

    auto d5 = make_dihedral(5);
    int order2 = 0, order5 = 0;
    for (int i = 0; i < d5.order; ++i) {
        int o = element_order(d5, i);
        if (o == 2) ++order2;
        if (o == 5) ++order5;
    }
    CHECK(order2 == 5);
    CHECK(order5 == 4);

    for (int n : {2, 3, 4, 7, 12}) {
        auto d = make_dihedral(n);
        int r = d.generators[0].second, s = d.generators[1].second;
        CHECK(element_order(d, r) == n);
        CHECK(element_order(d, s) == 2);
        // s r s^-1 = r^-1
        CHECK(d.mul(d.mul(s, r), d.inv(s)) == d.inv(r));
        // exactly n reflections of order 2 outside <r>
        int reflections = 0;
        for (int i = n; i < 2 * n; ++i)
            if (element_order(d, i) == 2) ++reflections;
        CHECK(reflections == n);
    }
}

TEST_CASE("dicyclic groups") {
    auto q4 = make_dicyclic(1);
    CHECK(q4.order == 4);
    bool has_order4 = false;
    for (int i = 0; i < 4; ++i) has_order4 |= element_order(q4, i) == 4;
    CHECK(has_order4);  // Q_4 is cyclic of order 4

    auto q8 = make_dicyclic(2);
    int involutions = 0;
    for (int i = 0; i < q8.order; ++i)
        if (element_order(q8, i) == 2) ++involutions;
    CHECK(involutions == 1);

    auto q12 = make_dicyclic(3);
    int x = q12.generators[0].second, y = q12.generators[1].second;
    CHECK(element_order(q12, x) == 6);
    CHECK(q12.pow(x, 3) == q12.mul(y, y));  // x^m = y^2

    for (int m : {2, 3, 4, 5}) {
        auto q = make_dicyclic(m);
        int xx = q.generators[0].second, yy = q.generators[1].second;
        CHECK(element_order(q, yy) == 4);
        CHECK(q.pow(xx, 2 * m) == q.identity);
        CHECK(q.mul(q.mul(yy, xx), q.inv(yy)) == q.inv(xx));  // y x y^-1 = x^-1
        CHECK(q.pow(xx, m) == q.pow(yy, 2));
    }
}

TEST_CASE("elementary abelian groups") {
    auto z2 = make_elementary_abelian(2, 1);
    CHECK(z2.table == make_cyclic(2).table);

    auto k4 = make_elementary_abelian(2, 2);
    CHECK(k4.order == 4);
    CHECK(exponent(k4) == 2);
    CHECK(is_abelian(k4));

    auto e9 = make_elementary_abelian(3, 2);
    CHECK(e9.order == 9);
    CHECK(exponent(e9) == 3);

    CHECK_THROWS_AS(make_elementary_abelian(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_elementary_abelian(2, 12), std::invalid_argument);  // over the cap
}

TEST_CASE("heisenberg groups") {
    auto h3 = make_heisenberg(3);
    CHECK(h3.order == 27);
    CHECK_FALSE(is_abelian(h3));
    CHECK(exponent(h3) == 3);
    CHECK(center(h3) == std::vector<int>{0, 3, 6});  // <z> with z = (0,1,0)

    int x = h3.generators[0].second, y = h3.generators[1].second, z = h3.generators[2].second;
    // x y x^-1 y^-1 = z and z is central
    CHECK(h3.mul(h3.mul(h3.mul(x, y), h3.inv(x)), h3.inv(y)) == z);
    CHECK(h3.mul(x, z) == h3.mul(z, x));
    CHECK(h3.mul(y, z) == h3.mul(z, y));

    auto h5 = make_heisenberg(5);
    CHECK(h5.order == 125);
    CHECK(exponent(h5) == 5);

    CHECK_THROWS_AS(make_heisenberg(2), std::invalid_argument);
    CHECK_THROWS_AS(make_heisenberg(9), std::invalid_argument);
}

TEST_CASE("direct products") {
    auto k4 = direct_product(make_cyclic(2), make_cyclic(2));
    CHECK(k4.table == make_elementary_abelian(2, 2).table);

    auto z4z2 = direct_product(make_cyclic(4), make_cyclic(2));
    CHECK(z4z2.order == 8);
    CHECK(is_abelian(z4z2));
    CHECK(exponent(z4z2) == 4);

    auto g = make_dihedral(4);
    auto same = direct_product(make_cyclic(1), g);
    CHECK(same.table == g.table);

    CHECK_THROWS_AS(direct_product(make_cyclic(100), make_cyclic(100)), std::invalid_argument);
}

TEST_CASE("element order formula") {
    // |a^k| = |a| / gcd(|a|, k), exhaustively on a few groups
    for (auto g : {make_cyclic(12), make_dihedral(6), make_dicyclic(3)}) {
        for (int a = 0; a < g.order; ++a) {
            int oa = element_order(g, a);
            for (int k = 0; k <= g.order; ++k)
                CHECK(element_order(g, g.pow(a, k)) == oa / std::gcd(oa, k));
        }
    }
    auto q12 = make_dicyclic(3);
    CHECK(element_order(q12, q12.pow(1, 4)) == 3);  // x^4 with |x| = 6
    CHECK(exponent(q12) == 12);                     // lcm(6, 4)
}

TEST_CASE("axiom checker") {
    for (auto g : {make_cyclic(9), make_dihedral(8), make_dicyclic(4),
                   make_elementary_abelian(3, 2), make_heisenberg(3),
                   direct_product(make_cyclic(4), make_cyclic(2))}) {
        auto rep = verify_group_axioms(g);
        CHECK(rep.ok);
        CHECK(rep.failures.empty());
    }
    // D_8 has order 16: all 16^3 triples are checked
    CHECK(verify_group_axioms(make_dihedral(8)).ok);

    // above order 256 associativity is spot-checked on a fixed sample
    CHECK(verify_group_axioms(make_cyclic(300)).ok);

    auto bad = make_cyclic(6);
    bad.table[1 * 6 + 2] = 4;  // corrupt one cell
    auto rep = verify_group_axioms(bad);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.failures.empty());
    CHECK(rep.failures.front().find("(") != std::string::npos);  // names the violating cell
}

TEST_CASE("generating sets") {
    CHECK(small_generating_set(make_cyclic(12)).size() == 1);
    CHECK(small_generating_set(make_dihedral(6)).size() == 2);
    CHECK(small_generating_set(make_heisenberg(3)).size() == 2);  // z is redundant
    CHECK(small_generating_set(make_elementary_abelian(2, 3)).size() == 3);
    CHECK(small_generating_set(make_cyclic(1)).empty());
    for (auto g : {make_dihedral(5), make_dicyclic(4), make_heisenberg(3)})
        CHECK(closure_of(g, small_generating_set(g)).size() == static_cast<std::size_t>(g.order));
}
