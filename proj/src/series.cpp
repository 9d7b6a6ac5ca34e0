#include "strata/series.hpp"

#include <algorithm>
#include <sstream>

namespace strata {

TruncatedSeries::TruncatedSeries(Ring ring, int order) : ring_(ring) {
    if (order < 0) throw std::invalid_argument("truncation order must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Coefficient::zero(ring_));
}

TruncatedSeries TruncatedSeries::constant(const Coefficient& c, int order) {
    TruncatedSeries s(c.ring(), order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::one(const Ring& ring, int order) {
    return constant(Coefficient::one(ring), order);
}

TruncatedSeries TruncatedSeries::monomial(const Coefficient& c, int degree, int order) {
    TruncatedSeries s(c.ring(), order);
    if (degree < 0) throw std::invalid_argument("monomial degree must be non-negative");
    if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = c;
    return s;
}

void TruncatedSeries::set_coeff(int k, Coefficient c) {
    if (!(c.ring() == ring_)) throw RingMismatchError();
    coeffs_.at(static_cast<std::size_t>(k)) = std::move(c);
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Coefficient& c) { return c.is_zero(); });
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return ring_ == o.ring_ && coeffs_ == o.coeffs_;
}

std::string TruncatedSeries::str(const std::string& var) const {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
        if (coeffs_[static_cast<std::size_t>(k)].is_zero()) continue;
        if (!first) out << " + ";
        out << "(" << coeffs_[static_cast<std::size_t>(k)].str() << ")";
        if (k == 1) out << "*" << var;
        if (k > 1) out << "*" << var << "^" << k;
        first = false;
    }
    if (first) out << "0";
    out << " + O(" << var << "^" << order() + 1 << ")";
    return out.str();
}

namespace {

void check_rings(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!(a.ring() == b.ring())) throw RingMismatchError();
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_rings(a, b);
    int n = std::min(a.order(), b.order());
    TruncatedSeries r(a.ring(), n);
    for (int k = 0; k <= n; ++k) r.set_coeff(k, a[k] + b[k]);
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_rings(a, b);
    int n = std::min(a.order(), b.order());
    TruncatedSeries r(a.ring(), n);
    for (int k = 0; k <= n; ++k) r.set_coeff(k, a[k] - b[k]);
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries r(a.ring(), a.order());
    for (int k = 0; k <= a.order(); ++k) r.set_coeff(k, -a[k]);
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_rings(a, b);
    int n = std::min(a.order(), b.order());
    TruncatedSeries r(a.ring(), n);
    for (int k = 0; k <= n; ++k) {
        Coefficient acc = Coefficient::zero(a.ring());
        for (int j = 0; j <= k; ++j) acc = acc + a[j] * b[k - j];
        r.set_coeff(k, acc);
    }
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const Coefficient& c) {
    if (!(a.ring() == c.ring())) throw RingMismatchError();
    TruncatedSeries r(a.ring(), a.order());
    for (int k = 0; k <= a.order(); ++k) r.set_coeff(k, a[k] * c);
    return r;
}

TruncatedSeries invert(const TruncatedSeries& a) {
    Coefficient inv0 = a[0].inverse();
    TruncatedSeries b(a.ring(), a.order());
    b.set_coeff(0, inv0);
    for (int k = 1; k <= a.order(); ++k) {
        Coefficient acc = Coefficient::zero(a.ring());
        for (int j = 1; j <= k; ++j) acc = acc + a[j] * b[k - j];
        b.set_coeff(k, -(inv0 * acc));
    }
    return b;
}

TruncatedSeries pow_int(const TruncatedSeries& a, long long e) {
    if (e < 0) return pow_int(invert(a), -e);
    TruncatedSeries acc = TruncatedSeries::one(a.ring(), a.order());
    TruncatedSeries base = a;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k != 0) {
        if (k & 1) acc = acc * base;
        if (k >>= 1) base = base * base;
    }
    return acc;
}

TruncatedSeries substitute_scale(const TruncatedSeries& a, const Coefficient& c) {
    if (!(a.ring() == c.ring())) throw RingMismatchError();
    TruncatedSeries r(a.ring(), a.order());
    Coefficient ck = Coefficient::one(a.ring());
    for (int k = 0; k <= a.order(); ++k) {
        r.set_coeff(k, a[k] * ck);
        ck = ck * c;
    }
    return r;
}

TruncatedSeries derivative(const TruncatedSeries& a) {
    if (a.order() == 0) return TruncatedSeries(a.ring(), 0);
    TruncatedSeries r(a.ring(), a.order() - 1);
    for (int k = 1; k <= a.order(); ++k) {
        r.set_coeff(k - 1, a[k] * Coefficient::embed(mpq_class(k), a.ring()));
    }
    return r;
}

TruncatedSeries log(const TruncatedSeries& a) {
    if (!a[0].is_one()) throw std::domain_error("log requires constant term 1");
    // l' = a'/a, integrated term by term with l_0 = 0
    TruncatedSeries ratio = derivative(a) * invert(a);  // order N-1
    TruncatedSeries l(a.ring(), a.order());
    for (int k = 1; k <= a.order(); ++k) {
        Coefficient kk = Coefficient::embed(mpq_class(k), a.ring());
        l.set_coeff(k, ratio[k - 1] * kk.inverse());
    }
    return l;
}

TruncatedSeries exp(const TruncatedSeries& a) {
    if (!a[0].is_zero()) throw std::domain_error("exp requires constant term 0");
    // k e_k = sum_{j=1..k} j a_j e_{k-j}
    TruncatedSeries e(a.ring(), a.order());
    e.set_coeff(0, Coefficient::one(a.ring()));
    for (int k = 1; k <= a.order(); ++k) {
        Coefficient acc = Coefficient::zero(a.ring());
        for (int j = 1; j <= k; ++j) {
            acc = acc + a[j] * e[k - j] * Coefficient::embed(mpq_class(j), a.ring());
        }
        Coefficient kk = Coefficient::embed(mpq_class(k), a.ring());
        e.set_coeff(k, acc * kk.inverse());
    }
    return e;
}

}  // namespace strata
