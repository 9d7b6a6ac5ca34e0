#include <doctest.h>

#include <random>

#include "strata/coefficient.hpp"

using namespace strata;

TEST_CASE("rationals stay canonical") {
    Coefficient c(mpq_class(4, -6));
    CHECK(c.rational().get_num() == -2);
    CHECK(c.rational().get_den() == 3);
    CHECK(Coefficient::fraction(5, 6).str() == "5/6");
    CHECK((Coefficient::fraction(5, 6) + Coefficient::fraction(5, 6)).str() == "5/3");
    CHECK_THROWS_AS(Coefficient::fraction(1, 0), std::invalid_argument);
}

TEST_CASE("prime field arithmetic") {
    Fp a(3, 5), b(4, 5);
    CHECK((a + b).value() == 2);
    CHECK((a - b).value() == 4);
    CHECK((a * b).value() == 2);
    CHECK((-a).value() == 2);
    CHECK(Fp(3, 7).inverse().value() == 5);
    CHECK(Fp::from_int(-20, 7).value() == 1);
    CHECK(Fp(2, 11).pow(-1).value() == 6);
    CHECK(Fp(2, 11).pow(10).value() == 1);  // Fermat
    CHECK_THROWS_AS(Fp(0, 5).inverse(), NonInvertibleError);
}

TEST_CASE("ring construction and mismatch") {
    CHECK_THROWS_AS(Ring::mod(10), std::invalid_argument);
    CHECK_THROWS_AS(Ring::mod(1u << 31), std::invalid_argument);
    CHECK(Ring::mod(5).str() == "F_5");

    Coefficient q = Coefficient::fraction(1, 2);
    Coefficient f(Fp(1, 5));
    CHECK_THROWS_AS(q + f, RingMismatchError);
    CHECK_THROWS_AS(Coefficient(Fp(1, 5)) * Coefficient(Fp(1, 7)), RingMismatchError);
}

TEST_CASE("embedding rationals into F_p") {
    CHECK(Coefficient::embed(mpq_class(1, 3), Ring::mod(7)).fp().value() == 5);
    CHECK(reduce_mod(mpq_class(-20, 9), 7).value() == 4);
    CHECK_THROWS_AS(Coefficient::embed(mpq_class(1, 5), Ring::mod(5)), NonInvertibleError);
}

TEST_CASE("primality helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(10007));
    CHECK(is_prime(10009));
    CHECK(is_prime(10037));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(10011));
    CHECK(next_prime_after(10007) == 10009);
    CHECK(next_prime_after(10009) == 10037);
    CHECK(next_prime_after(4) == 5);
}

TEST_CASE("reduce-then-operate equals operate-then-reduce") {
    std::mt19937_64 rng(20260810);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    for (std::uint32_t p : {5u, 13u, 10007u}) {
        Ring r = Ring::mod(p);
        for (int iter = 0; iter < 200; ++iter) {
            mpq_class x(num(rng), den(rng)), y(num(rng), den(rng));
            x.canonicalize();
            y.canonicalize();
            if (mpz_fdiv_ui(x.get_den().get_mpz_t(), p) == 0 ||
                mpz_fdiv_ui(y.get_den().get_mpz_t(), p) == 0)
                continue;  // p-integrality fails; the reduction is undefined there
            Coefficient xr = Coefficient::embed(x, r), yr = Coefficient::embed(y, r);
            CHECK(Coefficient::embed(x + y, r) == xr + yr);
            CHECK(Coefficient::embed(x - y, r) == xr - yr);
            CHECK(Coefficient::embed(x * y, r) == xr * yr);
            if (sgn(y) != 0 && reduce_mod(y, p).value() != 0) {
                mpq_class q = x / y;
                q.canonicalize();
                CHECK(Coefficient::embed(q, r) == xr * yr.inverse());
            }
        }
    }
}
