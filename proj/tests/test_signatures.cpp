#include <doctest.h>

#include <algorithm>
#include <random>

#include "strata/signature.hpp"
#include "test_support.hpp"

using namespace strata;

TEST_CASE("parsing and derived genus") {
    StratumSignature a = StratumSignature::parse("2", 1);
    CHECK(a.genus() == 2);
    CHECK(a.count() == 1);

    StratumSignature b = StratumSignature::parse("1^58", 1);
    CHECK(b.genus() == 30);
    CHECK(b.count() == 58);

    StratumSignature c = StratumSignature::parse("3,1", 2);
    CHECK(c.genus() == 2);
    CHECK(c.count() == 2);
    CHECK(c.part_sum() == 2 * (2 * c.genus() - 2));

    StratumSignature d = StratumSignature::parse(" -1^3 , 1^7 ", 1);
    CHECK(d.genus() == 3);
    CHECK(d.count() == 10);
}

TEST_CASE("parse rejections") {
    CHECK_THROWS_AS(StratumSignature::parse("", 1), SignatureError);
    CHECK_THROWS_AS(StratumSignature::parse("2,,2", 1), SignatureError);
    CHECK_THROWS_AS(StratumSignature::parse("x", 1), SignatureError);
    CHECK_THROWS_AS(StratumSignature::parse("1^0", 1), SignatureError);
    CHECK_THROWS_AS(StratumSignature::parse("1", 1), SignatureError);    // odd sum
    CHECK_THROWS_AS(StratumSignature::parse("3", 2), SignatureError);    // not divisible by ell
    CHECK_THROWS_AS(StratumSignature::parse("-2", 1), SignatureError);   // unstable: g=0, n=1
    CHECK_THROWS_AS(StratumSignature::parse("-4", 1), SignatureError);   // negative genus
    CHECK_THROWS_AS(StratumSignature::parse("2", 0), SignatureError);
}

TEST_CASE("component dimension") {
    CHECK(stratum_dimension(StratumSignature::parse("2", 1), true) == 3);
    CHECK(stratum_dimension(StratumSignature::parse("1,1", 1), true) == 4);
    CHECK(stratum_dimension(StratumSignature::parse("4,4", 2), false) == 5);
}

TEST_CASE("specified-part split") {
    SpecifiedSplit s = StratumSignature::parse("3,1^5", 1).split();
    CHECK(s.k == 1);
    CHECK(s.m == 3);
    CHECK(s.r == 0);
    CHECK(s.simple_zeros == 5);

    SpecifiedSplit t = StratumSignature::parse("-1^3,1^9", 1).split();  // g = 4
    CHECK(t.r == 3);
    CHECK(t.m == -3);
    CHECK(t.k == 3);

    SpecifiedSplit u = StratumSignature::parse("1^6", 1).split();
    CHECK(u.k == 0);
    CHECK(u.m == 0);
    CHECK(u.r == 0);

    SpecifiedSplit v = StratumSignature::parse("3,1^5", 1).split(2);
    CHECK(v.k == 3);
    CHECK(v.m == 5);
    CHECK(v.r == 0);
    CHECK(v.simple_zeros == 3);
    CHECK_THROWS_AS(StratumSignature::parse("3,1^5", 1).split(6), SignatureError);
}

TEST_CASE("canonical text round trips") {
    CHECK(StratumSignature::parse("1,4,1", 1).canonical_text() == "4,1^2");
    CHECK(StratumSignature::parse("4,2", 1).canonical_text() == "2,4");
    CHECK(StratumSignature::parse("1^58", 1).canonical_text() == "1^58");
    CHECK(StratumSignature::parse("1,1,-1,2,-1,2", 1).canonical_text() == "-1^2,2^2,1^2");

    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        StratumSignature sig = testgen::random_signature(rng);
        std::string canon = sig.canonical_text();
        StratumSignature re = StratumSignature::parse(canon, sig.ell());
        CHECK(re.canonical_text() == canon);
        CHECK(re.genus() == sig.genus());
        CHECK(re.count() == sig.count());
    }
}

TEST_CASE("permutations leave derived data unchanged") {
    std::mt19937_64 rng(8);
    for (int iter = 0; iter < 50; ++iter) {
        StratumSignature sig = testgen::random_signature(rng);
        std::vector<long> shuffled = sig.parts();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        StratumSignature other(sig.ell(), shuffled);
        CHECK(other.genus() == sig.genus());
        CHECK(other.count() == sig.count());
        CHECK(other.canonical_text() == sig.canonical_text());
        SpecifiedSplit a = sig.split(), b = other.split();
        CHECK(a.k == b.k);
        CHECK(a.m == b.m);
        CHECK(a.r == b.r);
        CHECK(stratum_dimension(sig, true) == stratum_dimension(other, true));
    }
}

TEST_CASE("pole-of-order-ell flag and effective parts") {
    StratumSignature sig = StratumSignature::parse("-2,4,6", 2);
    CHECK(sig.has_pole_of_order_ell());
    CHECK_FALSE(sig.holomorphic_type());
    CHECK(sig.effective_part(0) == mpq_class(-1));
    CHECK(sig.effective_part(1) == mpq_class(2));

    StratumSignature pos = StratumSignature::parse("3,1", 2);
    CHECK_FALSE(pos.has_pole_of_order_ell());
    CHECK(pos.holomorphic_type());
    CHECK(pos.effective_part(0) == mpq_class(3, 2));
}

TEST_CASE("quadratic signatures in genus zero") {
    QuadraticSignature nu = QuadraticSignature::from_entries({-1, -1, -1, -1});
    CHECK(nu.even_count() == 0);
    CHECK(nu.odd_count() == 4);

    QuadraticSignature nu2 = QuadraticSignature::from_entries({2, -1, -1, -1, -1, -1, -1});
    CHECK(nu2.even_count() == 1);
    CHECK(nu2.k_list()[0] == 1);

    CHECK_THROWS_AS(QuadraticSignature::from_entries({-1, -1, -1}), SignatureError);   // sum -3
    CHECK_THROWS_AS(QuadraticSignature::from_entries({-2, -1, -1}), SignatureError);   // even <= 0
    CHECK_THROWS_AS(QuadraticSignature::from_entries({-3, -1, -1, 1}), SignatureError);

    QuadraticSignature kl = QuadraticSignature::from_half_orders({3, 3}, {0, 0, 0, 0, 0, 0, 0, 0,
                                                                          0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(kl.entries().size() == 18);
}
