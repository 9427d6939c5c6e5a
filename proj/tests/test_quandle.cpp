#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qlab/alexander.hpp"
#include "qlab/quandle.hpp"

using namespace qlab;

TEST_CASE("trivial quandles") {
    Quandle q1 = make_trivial(1);
    CHECK(q1.op(0, 0) == 0);
    Quandle q3 = make_trivial(3);
    for (Element a = 0; a < 3; ++a)
        for (Element b = 0; b < 3; ++b) CHECK(q3.op(a, b) == a);
    CHECK_NOTHROW(make_trivial(2));
    CHECK_THROWS_AS(make_trivial(0), std::invalid_argument);
}

TEST_CASE("dihedral quandles") {
    Quandle r5 = make_dihedral(5);
    CHECK(r5.op(1, 3) == 0);  // (2*3 - 1) mod 5
    Quandle r3 = make_dihedral(3);
    CHECK(r3.op(0, 0) == 0);

    // column b = 1 of R_4 is the permutation i -> (2 - i) mod 4
    Quandle r4 = make_dihedral(4);
    std::vector<Element> col;
    for (Element a = 0; a < 4; ++a) col.push_back(r4.op(a, 1));
    CHECK(col == std::vector<Element>{2, 1, 0, 3});

    for (int n = 1; n <= 12; ++n) CHECK_NOTHROW(make_dihedral(n));
}

TEST_CASE("alexander quandles") {
    // Z_2[T]/(T^2+T+1) is S4 under 0<->0, 1<->1, 2<->1+T, 3<->T
    Quandle a = make_alexander({2, {1, 1, 1}});
    Quandle s4 = make_s4();
    std::vector<Element> f = {0, 1, 3, 2};  // S4 label -> polynomial index
    for (Element x = 0; x < 4; ++x)
        for (Element y = 0; y < 4; ++y) CHECK(f[s4.op(x, y)] == a.op(f[x], f[y]));

    // Z_n[T]/(T+1) is the dihedral quandle
    for (int n = 3; n <= 6; ++n) {
        Quandle alex = make_alexander({n, {1, 1}});
        Quandle dih = make_dihedral(n);
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y) CHECK(alex.op(x, y) == dih.op(x, y));
    }

    CHECK_THROWS_AS(make_linear(4, 2), std::invalid_argument);  // gcd(2,4) > 1
    CHECK_THROWS_AS(make_alexander({4, {-2, 1}}), std::invalid_argument);

    // Laurent input: T + T^2 reduces to 1 + T
    Quandle laurent = make_alexander({5, {0, 1, 1}});
    Quandle plain = make_alexander({5, {1, 1}});
    CHECK(laurent == plain);
}

TEST_CASE("s4 relation table") {
    Quandle q = make_s4();
    CHECK(q.op(0, 1) == 2);
    CHECK(q.op(1, 1) == 1);
    CHECK(q.op(0, 3) == 1);
    CHECK(q.op(2, 0) == 1);
    CHECK(q.op(3, 1) == 0);
}

TEST_CASE("inverse operation") {
    Quandle r3 = make_dihedral(3);
    // independent scan of column 1 for the unique c with c*1 = 0
    Element found = -1;
    for (Element c = 0; c < 3; ++c)
        if (r3.op(c, 1) == 0) found = c;
    CHECK(found == 2);
    CHECK(r3.inv_op(0, 1) == 2);

    for (const Quandle& q : {make_dihedral(6), make_s4(), make_linear(9, 4)}) {
        for (Element a = 0; a < q.order(); ++a)
            for (Element b = 0; b < q.order(); ++b) {
                CHECK(q.inv_op(q.op(a, b), b) == a);
                CHECK(q.op(q.inv_op(a, b), b) == a);
            }
    }

    Quandle t4 = make_trivial(4);
    for (Element a = 0; a < 4; ++a)
        for (Element b = 0; b < 4; ++b) CHECK(t4.inv_op(a, b) == a);
}

TEST_CASE("dual quandles") {
    for (const Quandle& q : {make_dihedral(3), make_dihedral(5), make_s4(), make_linear(7, 3), make_trivial(4)}) {
        Quandle dd = dual(dual(q));
        CHECK(dd == q);
    }
    CHECK(dual(make_trivial(3)) == make_trivial(3));

    // dual(L_{p,a}) has the identical table to L_{p,b} when ab = 1 mod p
    for (int p : {3, 5, 7, 11}) {
        for (int a = 2; a < p; ++a) {
            int b = -1;
            for (int c = 2; c < p; ++c)
                if (a * c % p == 1) b = c;
            if (b < 0) continue;
            CHECK(dual(make_linear(p, a)) == make_linear(p, b));
        }
    }
}

TEST_CASE("isomorphism search") {
    Quandle l94 = make_linear(9, 4);
    Quandle l97 = make_linear(9, 7);
    auto iso = is_isomorphic(l94, l97);
    REQUIRE(iso.has_value());
    for (Element a = 0; a < 9; ++a)
        for (Element b = 0; b < 9; ++b) CHECK((*iso)[l94.op(a, b)] == l97.op((*iso)[a], (*iso)[b]));

    // the published witness is also an isomorphism
    std::vector<Element> witness = {0, 1, 2, 6, 7, 8, 3, 4, 5};
    for (Element a = 0; a < 9; ++a)
        for (Element b = 0; b < 9; ++b) CHECK(witness[l94.op(a, b)] == l97.op(witness[a], witness[b]));

    CHECK_FALSE(is_isomorphic(make_dihedral(3), make_trivial(3)).has_value());
    CHECK_FALSE(is_isomorphic(make_linear(5, 2), make_linear(5, 3)).has_value());
    CHECK_FALSE(is_isomorphic(make_dihedral(3), make_dihedral(4)).has_value());
}

TEST_CASE("word actions") {
    Quandle s4 = make_s4();
    CHECK(s4.act_word(0, {{1, 1}, {3, 1}}) == 0);  // (0*1)*3 = 2*3 = 0

    for (int m = 1; m <= 12; ++m) {
        Quandle r = make_dihedral(m);
        for (Element x = 0; x < m; ++x)
            for (Element y = 0; y < m; ++y) CHECK(r.act_word(x, {{y, 1}, {y, 1}}) == x);
    }

    std::mt19937 rng(20240811);
    for (const Quandle& q : {make_dihedral(7), make_s4(), make_linear(8, 5)}) {
        std::uniform_int_distribution<int> elem(0, q.order() - 1);
        std::uniform_int_distribution<int> len(0, 8);
        std::uniform_int_distribution<int> sign(0, 1);
        for (int trial = 0; trial < 200; ++trial) {
            GroupWord w;
            int L = len(rng);
            for (int i = 0; i < L; ++i) w.push_back({elem(rng), sign(rng) ? 1 : -1});
            GroupWord cancel = w;
            GroupWord inv = inverse_word(w);
            cancel.insert(cancel.end(), inv.begin(), inv.end());
            Element x = elem(rng);
            CHECK(q.act_word(x, cancel) == x);
        }
    }
}

TEST_CASE("quandle spec grammar") {
    CHECK(parse_quandle_spec("T:3") == make_trivial(3));
    CHECK(parse_quandle_spec("R:5") == make_dihedral(5));
    CHECK(parse_quandle_spec("S4") == make_s4());
    CHECK(parse_quandle_spec("A:2:1,1,1") == make_alexander({2, {1, 1, 1}}));
    CHECK(parse_quandle_spec("L:9:4") == make_linear(9, 4));
    CHECK_THROWS_AS(parse_quandle_spec("X:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quandle_spec("L:4:2"), std::invalid_argument);
}
