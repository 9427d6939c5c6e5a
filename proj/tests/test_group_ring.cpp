#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qlab/group_ring.hpp"

using namespace qlab;

namespace {

GroupRing random_element(std::mt19937& rng, long long modulus) {
    std::uniform_int_distribution<int> nterms(0, 4);
    std::uniform_int_distribution<long long> coeff(-9, 9);
    std::uniform_int_distribution<long long> exp(-6, 6);
    GroupRing r(modulus);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) r.add_term(exp(rng), coeff(rng));
    return r;
}

}  // namespace

TEST_CASE("addition") {
    GroupRing x = GroupRing::parse("4+12t", 2);
    CHECK(x + GroupRing::zero(2) == x);

    GroupRing a = GroupRing::parse("3+6t", 3);
    GroupRing b = GroupRing::parse("3+6t^2", 3);
    CHECK((a + b).to_string() == "6+6t+6t^2");

    GroupRing t(2);
    t.add_term(1, 1);
    CHECK((t + t).to_string() == "2t");

    CHECK_THROWS_AS(GroupRing::zero(2) + GroupRing::zero(3), std::invalid_argument);
}

TEST_CASE("multiplication") {
    GroupRing t = GroupRing::monomial(2, 1, 1);
    CHECK(t * t == GroupRing::one(2));

    GroupRing x = GroupRing::parse("5+10t+10t^4", 5);
    CHECK(x * GroupRing::one(5) == x);

    GroupRing one_plus_t = GroupRing::parse("1+t", 2);
    CHECK((one_plus_t * one_plus_t).to_string() == "2+2t");
}

TEST_CASE("conjugation") {
    CHECK(conjugate(GroupRing::parse("4+12t", 2)) == GroupRing::parse("4+12t", 2));
    CHECK(conjugate(GroupRing::parse("3+6t", 3)) == GroupRing::parse("3+6t^2", 3));
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        GroupRing x = random_element(rng, i % 2 ? 0 : 6);
        CHECK(conjugate(conjugate(x)) == x);
    }
}

TEST_CASE("text round trip") {
    for (long long mod : {0LL, 2LL, 5LL}) {
        for (const char* s : {"4+12t", "9", "5+10t+10t^4", "0", "2+2t"}) {
            GroupRing x = GroupRing::parse(s, mod);
            CHECK(GroupRing::parse(x.to_string(), mod) == x);
        }
    }
    CHECK(GroupRing::parse("4+12t", 2).to_string() == "4+12t");
    CHECK(GroupRing::parse(" 28 + 4t ", 2).to_string() == "28+4t");
    CHECK(GroupRing::parse("9", 3).to_string() == "9");
    CHECK(GroupRing::parse("t^-2", 0).to_string() == "t^-2");
    CHECK(GroupRing::parse("3+6t^2", 3) == GroupRing::parse("3 + 6*t^2", 3));
    CHECK_THROWS_AS(GroupRing::parse("", 2), std::invalid_argument);
    CHECK_THROWS_AS(GroupRing::parse("4++t", 2), std::invalid_argument);
    CHECK_THROWS_AS(GroupRing::parse("4 5", 2), std::invalid_argument);
}

TEST_CASE("ring laws on random triples") {
    std::mt19937 rng(20240811);
    for (long long mod : {0LL, 2LL, 3LL, 8LL}) {
        for (int i = 0; i < 60; ++i) {
            GroupRing x = random_element(rng, mod);
            GroupRing y = random_element(rng, mod);
            GroupRing z = random_element(rng, mod);
            CHECK(x + y == y + x);
            CHECK((x + y) + z == x + (y + z));
            CHECK(x * y == y * x);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(conjugate(x * y) == conjugate(x) * conjugate(y));
            CHECK(conjugate(x + y) == conjugate(x) + conjugate(y));
            CHECK(conjugate(x).augmentation() == x.augmentation());
            CHECK((x * y).augmentation() == x.augmentation() * y.augmentation());
        }
    }
}

TEST_CASE("augmentation of monomials") {
    GroupRing a = GroupRing::monomial(4, 1, 3);
    GroupRing b = GroupRing::monomial(4, 1, 2);
    CHECK((a * b).augmentation() == 1);
}
