#include "strata/coefficient.hpp"

namespace strata {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::uint32_t next_prime_after(std::uint32_t n) {
    std::uint64_t c = std::uint64_t(n) + 1;
    while (!is_prime(c)) ++c;
    if (c >= (1u << 31)) throw std::overflow_error("prime exceeds supported modulus range");
    return static_cast<std::uint32_t>(c);
}

Fp Fp::inverse() const {
    // extended gcd on (v, p)
    std::int64_t r0 = p_, r1 = v_;
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw NonInvertibleError(p_);
    if (s0 < 0) s0 += p_;
    return Fp(static_cast<std::uint64_t>(s0), p_);
}

Fp Fp::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Fp base = *this;
    Fp acc(1 % p_, p_);
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k != 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Ring Ring::mod(std::uint32_t p) {
    if (p >= (1u << 31)) throw std::invalid_argument("modulus must be < 2^31");
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    return Ring{Kind::mod_p, p};
}

Coefficient Coefficient::fraction(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Coefficient(std::move(q));
}

Coefficient Coefficient::zero(const Ring& r) {
    return r.is_rational() ? Coefficient(mpq_class(0)) : Coefficient(Fp(0, r.p));
}

Coefficient Coefficient::one(const Ring& r) {
    return r.is_rational() ? Coefficient(mpq_class(1)) : Coefficient(Fp(1, r.p));
}

Coefficient Coefficient::embed(const mpq_class& q, const Ring& r) {
    if (r.is_rational()) return Coefficient(q);
    return Coefficient(reduce_mod(q, r.p));
}

Ring Coefficient::ring() const {
    if (is_rational()) return Ring::rationals();
    return Ring{Ring::Kind::mod_p, std::get<Fp>(v_).modulus()};
}

const mpq_class& Coefficient::rational() const {
    if (!is_rational()) throw RingMismatchError();
    return std::get<mpq_class>(v_);
}

Fp Coefficient::fp() const {
    if (is_rational()) throw RingMismatchError();
    return std::get<Fp>(v_);
}

bool Coefficient::is_zero() const {
    if (is_rational()) return sgn(std::get<mpq_class>(v_)) == 0;
    return std::get<Fp>(v_).is_zero();
}

bool Coefficient::is_one() const {
    if (is_rational()) return std::get<mpq_class>(v_) == 1;
    const Fp& f = std::get<Fp>(v_);
    return f.value() == 1 % f.modulus();
}

namespace {

template <class OpQ, class OpF>
Coefficient binop(const Coefficient& a, const Coefficient& b, OpQ opq, OpF opf) {
    if (a.is_rational() != b.is_rational()) throw RingMismatchError();
    if (a.is_rational()) return Coefficient(mpq_class(opq(a.rational(), b.rational())));
    return Coefficient(opf(a.fp(), b.fp()));
}

}  // namespace

Coefficient Coefficient::operator+(const Coefficient& o) const {
    return binop(*this, o, [](const mpq_class& x, const mpq_class& y) { return x + y; },
                 [](const Fp& x, const Fp& y) { return x + y; });
}

Coefficient Coefficient::operator-(const Coefficient& o) const {
    return binop(*this, o, [](const mpq_class& x, const mpq_class& y) { return x - y; },
                 [](const Fp& x, const Fp& y) { return x - y; });
}

Coefficient Coefficient::operator-() const {
    if (is_rational()) return Coefficient(mpq_class(-rational()));
    return Coefficient(-fp());
}

Coefficient Coefficient::operator*(const Coefficient& o) const {
    return binop(*this, o, [](const mpq_class& x, const mpq_class& y) { return x * y; },
                 [](const Fp& x, const Fp& y) { return x * y; });
}

Coefficient Coefficient::inverse() const {
    if (is_rational()) {
        const mpq_class& q = rational();
        if (sgn(q) == 0) throw std::domain_error("division by zero rational");
        return Coefficient(mpq_class(1 / q));
    }
    return Coefficient(fp().inverse());
}

Coefficient Coefficient::pow(long long e) const {
    if (!is_rational()) return Coefficient(fp().pow(e));
    if (e < 0) return inverse().pow(-e);
    mpq_class base = rational(), acc = 1;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k != 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return Coefficient(std::move(acc));
}

bool Coefficient::operator==(const Coefficient& o) const {
    if (is_rational() != o.is_rational()) return false;
    if (is_rational()) return rational() == o.rational();
    return fp() == o.fp();
}

std::string Coefficient::str() const {
    if (is_rational()) return rational().get_str();
    return std::to_string(fp().value());
}

Fp reduce_mod(const mpq_class& q, std::uint32_t p) {
    unsigned long num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
    unsigned long den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    Fp d(den, p);
    if (d.is_zero()) throw NonInvertibleError(p);
    return Fp(num, p) * d.inverse();
}

}  // namespace strata
