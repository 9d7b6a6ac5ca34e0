#ifndef STRATA_SERIES_HPP
#define STRATA_SERIES_HPP

#include <string>
#include <vector>

#include "strata/coefficient.hpp"

namespace strata {

// Dense formal power series truncated at a fixed order N: coeffs_[k] is the
// t^k coefficient, k = 0..N. All coefficients live in the same ring.
//
// Binary operations between series of different orders truncate to the
// minimum of the two orders; callers that care about the degree must check
// orders up front. Orders stay tiny here (<= ~15), so everything is
// schoolbook arithmetic on dense vectors.
class TruncatedSeries {
public:
    TruncatedSeries(Ring ring, int order);
    static TruncatedSeries constant(const Coefficient& c, int order);
    static TruncatedSeries one(const Ring& ring, int order);
    // the series c*t^1 truncated at `order` (order >= 1)
    static TruncatedSeries monomial(const Coefficient& c, int degree, int order);

    const Ring& ring() const { return ring_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Coefficient& operator[](int k) const { return coeffs_.at(k); }
    void set_coeff(int k, Coefficient c);

    bool is_zero() const;
    bool operator==(const TruncatedSeries& o) const;

    std::string str(const std::string& var = "t") const;

private:
    Ring ring_;
    std::vector<Coefficient> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const Coefficient& c);

// Multiplicative inverse up to the truncation order; the constant term must
// be a unit. b_k = -a_0^{-1} * sum_{j=1..k} a_j b_{k-j}.
TruncatedSeries invert(const TruncatedSeries& a);

// Binary exponentiation; negative exponents route through invert.
TruncatedSeries pow_int(const TruncatedSeries& a, long long e);

// t -> c*t, i.e. coefficient k picks up a factor c^k.
TruncatedSeries substitute_scale(const TruncatedSeries& a, const Coefficient& c);

// Term-wise derivative; the result has order N-1.
TruncatedSeries derivative(const TruncatedSeries& a);

// Formal log/exp via the ODE recurrences (log a)' = a'/a and
// (exp a)' = a' exp a. log needs constant term 1, exp needs constant term 0.
TruncatedSeries log(const TruncatedSeries& a);
TruncatedSeries exp(const TruncatedSeries& a);

}  // namespace strata

#endif
