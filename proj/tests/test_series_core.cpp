#include <doctest.h>

#include <random>

#include "strata/c_series.hpp"
#include "strata/series.hpp"
#include "test_support.hpp"

using namespace strata;

namespace {

const Ring Q = Ring::rationals();

TruncatedSeries from_fractions(std::initializer_list<std::pair<long, long>> coeffs) {
    TruncatedSeries s(Q, static_cast<int>(coeffs.size()) - 1);
    int k = 0;
    for (const auto& [num, den] : coeffs) s.set_coeff(k++, Coefficient::fraction(num, den));
    return s;
}

TruncatedSeries random_series(std::mt19937_64& rng, int order, bool unit_constant) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    TruncatedSeries s(Q, order);
    for (int k = 0; k <= order; ++k) s.set_coeff(k, Coefficient::fraction(num(rng), den(rng)));
    if (unit_constant) {
        while (s[0].is_zero()) s.set_coeff(0, Coefficient::fraction(num(rng), den(rng)));
    }
    return s;
}

TruncatedSeries to_mod_p(const TruncatedSeries& s, const Ring& r) {
    TruncatedSeries out(r, s.order());
    for (int k = 0; k <= s.order(); ++k) out.set_coeff(k, Coefficient::embed(s[k].rational(), r));
    return out;
}

}  // namespace

TEST_CASE("addition") {
    TruncatedSeries one_plus_t = from_fractions({{1, 1}, {1, 1}});
    TruncatedSeries one_minus_t = from_fractions({{1, 1}, {-1, 1}});
    CHECK(one_plus_t + one_minus_t == from_fractions({{2, 1}, {0, 1}}));
    CHECK(one_plus_t + TruncatedSeries(Q, 1) == one_plus_t);
    TruncatedSeries t56 = from_fractions({{0, 1}, {5, 6}});
    CHECK((t56 + t56)[1] == Coefficient::fraction(5, 3));
}

TEST_CASE("multiplication and truncation") {
    TruncatedSeries a = from_fractions({{1, 1}, {1, 1}, {0, 1}});   // 1+t, order 2
    TruncatedSeries b = from_fractions({{1, 1}, {-1, 1}, {0, 1}});  // 1-t, order 2
    CHECK(a * b == from_fractions({{1, 1}, {0, 1}, {-1, 1}}));
    CHECK(a * TruncatedSeries::one(Q, 2) == a);

    TruncatedSeries a1 = from_fractions({{1, 1}, {1, 1}});  // order 1
    CHECK((a1 * a1) == from_fractions({{1, 1}, {2, 1}}));   // t^2 discarded
    CHECK((a * a1).order() == 1);                           // min-order rule
}

TEST_CASE("inversion") {
    TruncatedSeries geom = invert(from_fractions({{1, 1}, {-1, 1}, {0, 1}, {0, 1}}));
    CHECK(geom == from_fractions({{1, 1}, {1, 1}, {1, 1}, {1, 1}}));
    CHECK(invert(TruncatedSeries::one(Q, 4)) == TruncatedSeries::one(Q, 4));
    CHECK_THROWS(invert(TruncatedSeries::monomial(Coefficient::fraction(1), 1, 3)));

    TruncatedSeries c = c_series(2, Q);
    TruncatedSeries ci = invert(c);
    CHECK(ci[1] == Coefficient::fraction(-5, 6));
    CHECK(ci[2] == Coefficient::fraction(-335, 72));
    CHECK(c * ci == TruncatedSeries::one(Q, 2));
}

TEST_CASE("integer powers") {
    TruncatedSeries a = from_fractions({{1, 1}, {1, 1}, {0, 1}});
    CHECK(pow_int(a, 0) == TruncatedSeries::one(Q, 2));
    CHECK(pow_int(a, 2) == from_fractions({{1, 1}, {2, 1}, {1, 1}}));
    TruncatedSeries c = c_series(3, Q);
    CHECK(pow_int(c, -3)[1] == Coefficient::fraction(-5, 2));
}

TEST_CASE("variable scaling") {
    TruncatedSeries a = from_fractions({{1, 1}, {1, 1}, {1, 1}});
    CHECK(substitute_scale(a, Coefficient::fraction(1)) == a);
    CHECK(substitute_scale(a, Coefficient::fraction(2)) ==
          from_fractions({{1, 1}, {2, 1}, {4, 1}}));
    CHECK(substitute_scale(c_series(1, Q), Coefficient::fraction(1, 3))[1] ==
          Coefficient::fraction(5, 18));
}

TEST_CASE("derivative") {
    CHECK(derivative(TruncatedSeries::one(Q, 3)).is_zero());
    TruncatedSeries t3 = TruncatedSeries::monomial(Coefficient::fraction(1), 3, 3);
    TruncatedSeries d = derivative(t3);
    CHECK(d.order() == 2);
    CHECK(d[2] == Coefficient::fraction(3));
    CHECK(derivative(c_series(4, Q))[0] == Coefficient::fraction(5, 6));
}

TEST_CASE("log and exp") {
    CHECK(log(TruncatedSeries::one(Q, 5)).is_zero());
    CHECK(exp(TruncatedSeries(Q, 5)) == TruncatedSeries::one(Q, 5));
    TruncatedSeries c = c_series(15, Q);
    CHECK(exp(log(c)) == c);
    CHECK(log(c)[1] == Coefficient::fraction(5, 6));
    CHECK_THROWS(log(from_fractions({{2, 1}, {1, 1}})));
    CHECK_THROWS(exp(from_fractions({{1, 1}, {1, 1}})));
}

TEST_CASE("ring axioms on random series") {
    std::mt19937_64 rng(1);
    for (int iter = 0; iter < 60; ++iter) {
        TruncatedSeries a = random_series(rng, 8, false);
        TruncatedSeries b = random_series(rng, 8, false);
        TruncatedSeries c = random_series(rng, 8, false);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("inverse, powers and scaling properties") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> exps(-4, 4);
    for (int iter = 0; iter < 40; ++iter) {
        TruncatedSeries a = random_series(rng, 7, true);
        CHECK(a * invert(a) == TruncatedSeries::one(Q, 7));
        long e1 = exps(rng), e2 = exps(rng);
        CHECK(pow_int(a, e1 + e2) == pow_int(a, e1) * pow_int(a, e2));

        std::uniform_int_distribution<long> num(-5, 5);
        std::uniform_int_distribution<long> den(1, 5);
        Coefficient c = Coefficient::fraction(num(rng), den(rng));
        Coefficient d = Coefficient::fraction(num(rng), den(rng));
        CHECK(substitute_scale(substitute_scale(a, c), d) == substitute_scale(a, c * d));
    }
}

TEST_CASE("mod-p homomorphism commutes with every operation") {
    std::mt19937_64 rng(3);
    for (std::uint32_t p : {10007u, 13u}) {
        Ring r = Ring::mod(p);
        for (int iter = 0; iter < 30; ++iter) {
            TruncatedSeries a = random_series(rng, 6, true);
            TruncatedSeries b = random_series(rng, 6, false);
            TruncatedSeries ar = to_mod_p(a, r), br = to_mod_p(b, r);
            CHECK(to_mod_p(a + b, r) == ar + br);
            CHECK(to_mod_p(a * b, r) == ar * br);
            CHECK(to_mod_p(invert(a), r) == invert(ar));
            CHECK(to_mod_p(pow_int(a, -3), r) == pow_int(ar, -3));
            CHECK(to_mod_p(substitute_scale(a, Coefficient::fraction(2, 3)), r) ==
                  substitute_scale(ar, Coefficient::embed(mpq_class(2, 3), r)));
            CHECK(to_mod_p(derivative(a), r) == derivative(ar));
        }
    }
}

TEST_CASE("log/exp are mutually inverse on their domains") {
    std::mt19937_64 rng(4);
    for (int iter = 0; iter < 25; ++iter) {
        TruncatedSeries a = random_series(rng, 7, false);
        a.set_coeff(0, Coefficient::fraction(1));
        CHECK(exp(log(a)) == a);
        TruncatedSeries b = random_series(rng, 7, false);
        b.set_coeff(0, Coefficient::fraction(0));
        CHECK(log(exp(b)) == b);
    }
}

TEST_CASE("operations reject mixed rings") {
    TruncatedSeries q = TruncatedSeries::one(Q, 3);
    TruncatedSeries f = TruncatedSeries::one(Ring::mod(7), 3);
    CHECK_THROWS_AS(q + f, RingMismatchError);
    CHECK_THROWS_AS(q * f, RingMismatchError);
    CHECK_THROWS_AS(substitute_scale(q, Coefficient(Fp(2, 7))), RingMismatchError);
    CHECK_THROWS_AS(q.set_coeff(0, Coefficient(Fp(1, 7))), RingMismatchError);
}
