#include <catch2/catch_amalgamated.hpp>

#include "qlab/alexander.hpp"
#include "qlab/data.hpp"
#include "qlab/torus.hpp"

using namespace qlab;

TEST_CASE("torus braid words") {
    BraidWord trefoil = torus_braid(2, 3);
    CHECK(trefoil.strands == 2);
    CHECK(trefoil.letters == std::vector<int>{1, 1, 1});

    BraidWord t34 = torus_braid(3, 4);
    CHECK(t34.strands == 3);
    CHECK(t34.letters == std::vector<int>{2, 1, 2, 1, 2, 1, 2, 1});

    CHECK(torus_braid(4, 0).letters.empty());
    CHECK_THROWS_AS(torus_braid(1, 3), std::invalid_argument);
}

TEST_CASE("block map") {
    Quandle r5 = make_dihedral(5);
    ColorVector v = {3, 1};
    CHECK(color_block_map(r5, v) == ColorVector{1, ((2 * 1 - 3) % 5 + 5) % 5});

    // block map equals pushing colors through one full torus braid block
    Quandle s4 = make_s4();
    for (Element a = 0; a < 4; ++a)
        for (Element b = 0; b < 4; ++b)
            for (Element c = 0; c < 4; ++c) {
                ColorVector u = {a, b, c};
                CHECK(color_block_map(s4, u) == apply_word(s4, u, torus_braid(3, 1)));
            }

    // e_j A = T e_{j+1} on an Alexander quandle
    Quandle l85 = parse_quandle_spec("L:8:5");
    const auto& alex = *l85.alexander();
    int n = 4;
    for (int j = 0; j + 1 < n; ++j) {
        ColorVector e(n, 0);
        e[j] = 1;
        ColorVector img = color_block_map(l85, e);
        ColorVector expect(n, 0);
        expect[j + 1] = alex.mul_t[1];
        CHECK(img == expect);
    }
}

TEST_CASE("color periods match the closed forms") {
    CHECK(color_period(make_s4(), 2).period == 3);
    CHECK(color_period(make_s4(), 3).period == 6);
    CHECK(color_period(make_s4(), 4).period == 12);
    CHECK(color_period(make_dihedral(4), 3).period == 6);   // odd n: 2n
    CHECK(color_period(make_dihedral(4), 4).period == 8);   // even n: (j/2) n
    CHECK(color_period(make_dihedral(8), 4).period == 16);
    CHECK(color_period(parse_quandle_spec("L:8:5"), 2).period == 4);
    CHECK(color_period(parse_quandle_spec("A:3:1,0,1"), 6).period == 12);
    CHECK(color_period(parse_quandle_spec("A:2:1,0,0,1"), 3).period == 6);
    CHECK(color_period(parse_quandle_spec("L:9:4"), 2).period == 6);

    PeriodReport capped = color_period(make_dihedral(8), 4, 5);
    CHECK(capped.exceeded());
}

TEST_CASE("period table") {
    auto cases = period_table(2, 5);
    for (const auto& c : cases) {
        INFO(c.quandle_spec << " n=" << c.n << " expected " << c.expected << " computed " << c.computed);
        CHECK(c.ok);
    }
}

TEST_CASE("block-map fixed point lemma") {
    // if e_n returns after k*n blocks, every e_j does
    for (const char* spec : {"L:8:3", "A:3:1,0,1", "A:3:-1,0,1", "A:2:1,0,0,1", "A:2:1,1,1", "L:8:5", "L:9:4"}) {
        Quandle q = parse_quandle_spec(spec);
        for (int n = 2; n <= 4; ++n) {
            for (int reps = 1; reps <= 4; ++reps) {
                ColorVector en(n, 0);
                en[n - 1] = 1;
                ColorVector v = en;
                for (int i = 0; i < reps * n; ++i) v = color_block_map(q, v);
                if (v != en) continue;
                for (int j = 0; j < n; ++j) {
                    ColorVector e(n, 0);
                    e[j] = 1;
                    ColorVector u = e;
                    for (int i = 0; i < reps * n; ++i) u = color_block_map(q, u);
                    CHECK(u == e);
                }
                break;
            }
        }
    }
}

TEST_CASE("torus invariants match the published rows") {
    Quandle r4 = make_dihedral(4);
    Cochain t1 = load_cocycle("theta1", r4);
    CHECK(torus_invariant(r4, t1, 2, 4).to_string() == "8+8t");
    CHECK(torus_invariant(r4, t1, 4, 6).to_string() == "8+8t");
    CHECK(torus_invariant(r4, t1, 4, 8).to_string() == "128+128t");

    Quandle l85 = parse_quandle_spec("L:8:5");
    Cochain t9 = load_cocycle("theta9", l85);
    CHECK(torus_invariant(l85, t9, 2, 2).to_string() == "28+4t");
    CHECK(torus_invariant(l85, t9, 3, 3).to_string() == "104+24t");

    Quandle s4 = make_s4();
    CHECK(torus_invariant(s4, load_cocycle("s4-phi", s4), 5, 15).to_string() == "544+480t");
}

TEST_CASE("periodicity reduction equals the direct computation") {
    Quandle r4 = make_dihedral(4);
    Cochain t1 = load_cocycle("theta1", r4);
    for (int k : {4, 6, 8, 12, 20}) {
        CHECK(torus_invariant(r4, t1, 2, k, true) == torus_invariant(r4, t1, 2, k, false));
    }
    Quandle l85 = parse_quandle_spec("L:8:5");
    Cochain t9 = load_cocycle("theta9", l85);
    for (int k : {2, 6, 10, 18}) {
        CHECK(torus_invariant(l85, t9, 2, k, true) == torus_invariant(l85, t9, 2, k, false));
    }
    // invariant periodicity two periods deep: period * coefficient order
    long long p = color_period(l85, 2).period;  // 4
    for (int k : {0, 1, 2, 3}) {
        GroupRing base = torus_invariant(l85, t9, 2, k);
        CHECK(torus_invariant(l85, t9, 2, k + static_cast<int>(p) * 2) == base);
        CHECK(torus_invariant(l85, t9, 2, k + static_cast<int>(p) * 4) == base);
    }
}

TEST_CASE("T(n,k) equals T(k,n)") {
    Quandle r4 = make_dihedral(4);
    Cochain t1 = load_cocycle("theta1", r4);
    CHECK(torus_invariant(r4, t1, 2, 4) == torus_invariant(r4, t1, 4, 2));

    Quandle r6 = make_dihedral(6);
    Cochain t2 = load_cocycle("theta2", r6);
    CHECK(torus_invariant(r6, t2, 2, 6) == torus_invariant(r6, t2, 6, 2));

    Quandle l85 = parse_quandle_spec("L:8:5");
    Cochain t9 = load_cocycle("theta9", l85);
    CHECK(torus_invariant(l85, t9, 2, 4) == torus_invariant(l85, t9, 4, 2));
}

TEST_CASE("unlinks and unknots") {
    Quandle l85 = parse_quandle_spec("L:8:5");
    Cochain t9 = load_cocycle("theta9", l85);
    CHECK(torus_invariant(l85, t9, 2, 0).to_string() == "64");
    CHECK(torus_invariant(l85, t9, 2, 1).to_string() == "8");
}
