#ifndef STRATA_COEFFICIENT_HPP
#define STRATA_COEFFICIENT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace strata {

// Thrown when two coefficients from different rings (or the same prime field
// with different moduli) meet in one arithmetic operation.
struct RingMismatchError : std::invalid_argument {
    RingMismatchError() : std::invalid_argument("coefficient ring mismatch") {}
};

// Division by a residue that is 0 mod p. The relation checker treats this as
// "prime turned out inadmissible at runtime" and falls back to the next one,
// so it is a recoverable signal rather than an assertion failure.
struct NonInvertibleError : std::domain_error {
    explicit NonInvertibleError(std::uint32_t p)
        : std::domain_error("non-invertible element mod " + std::to_string(p)), modulus(p) {}
    std::uint32_t modulus;
};

bool is_prime(std::uint64_t n);
std::uint32_t next_prime_after(std::uint32_t n);

// Element of the prime field F_p. Moduli are capped below 2^31 so products
// fit in uint64 without overflow.
class Fp {
public:
    Fp(std::uint64_t value, std::uint32_t p) : p_(p), v_(static_cast<std::uint32_t>(value % p)) {}

    static Fp from_int(long long v, std::uint32_t p) {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const {
        check(o);
        std::uint32_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return Fp(s, p_, tag{});
    }
    Fp operator-(const Fp& o) const {
        check(o);
        std::uint32_t s = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
        return Fp(s, p_, tag{});
    }
    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, tag{}); }
    Fp operator*(const Fp& o) const {
        check(o);
        return Fp(static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % p_), p_, tag{});
    }

    // Extended Euclid; throws NonInvertibleError when gcd(v, p) != 1 (which
    // also covers v == 0).
    Fp inverse() const;
    Fp pow(long long e) const;

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }

private:
    struct tag {};
    Fp(std::uint32_t v, std::uint32_t p, tag) : p_(p), v_(v) {}
    void check(const Fp& o) const {
        if (p_ != o.p_) throw RingMismatchError();
    }
    std::uint32_t p_;
    std::uint32_t v_;
};

// Descriptor of the coefficient ring a series lives over.
struct Ring {
    enum class Kind { rationals, mod_p };
    Kind kind = Kind::rationals;
    std::uint32_t p = 0;

    static Ring rationals() { return Ring{Kind::rationals, 0}; }
    static Ring mod(std::uint32_t p);  // validates primality, p < 2^31

    bool is_rational() const { return kind == Kind::rationals; }
    bool operator==(const Ring& o) const { return kind == o.kind && p == o.p; }
    std::string str() const { return is_rational() ? "Q" : "F_" + std::to_string(p); }
};

// One exact scalar: arbitrary-precision rational (always canonical: lowest
// terms, positive denominator) or a prime-field residue.
class Coefficient {
public:
    Coefficient() : v_(mpq_class(0)) {}
    explicit Coefficient(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }
    explicit Coefficient(Fp f) : v_(f) {}

    static Coefficient fraction(long num, long den = 1);
    static Coefficient zero(const Ring& r);
    static Coefficient one(const Ring& r);
    // Image of an exact rational in the given ring; for mod-p rings this
    // requires p not to divide the denominator (else NonInvertibleError).
    static Coefficient embed(const mpq_class& q, const Ring& r);

    Ring ring() const;
    bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
    const mpq_class& rational() const;
    Fp fp() const;

    bool is_zero() const;
    bool is_one() const;

    Coefficient operator+(const Coefficient& o) const;
    Coefficient operator-(const Coefficient& o) const;
    Coefficient operator-() const;
    Coefficient operator*(const Coefficient& o) const;
    Coefficient inverse() const;  // NonInvertibleError for 0 (and 0 mod p)
    Coefficient pow(long long e) const;

    bool operator==(const Coefficient& o) const;

    std::string str() const;

private:
    std::variant<mpq_class, Fp> v_;
};

// Reduction Z_(p) -> F_p; the homomorphism the modular checker relies on.
Fp reduce_mod(const mpq_class& q, std::uint32_t p);

}  // namespace strata

#endif
