#ifndef STRATA_C_SERIES_HPP
#define STRATA_C_SERIES_HPP

#include <vector>

#include "strata/series.hpp"

namespace strata {

// The exact integer (6k)!/((3k)!(2k)!). Integral because it equals the
// multinomial (6k; 3k,2k,k) times k!; the exact division asserts this.
mpz_class factorial_ratio(long k);

// C(t) = sum_k (6k)!/((3k)!(2k)!) (t/72)^k over the requested ring.
// Over F_p the integer ratio is reduced mod p and multiplied by the inverse
// of 72^k; p in {2,3} is rejected since 72 = 2^3*3^2 would not be a unit.
TruncatedSeries c_series(int order, const Ring& ring);

// Memoized per (ring, order) copy, one cache per thread so the sweep workers
// never contend on a lock.
const TruncatedSeries& c_series_cached(int order, const Ring& ring);

// The coefficients c_k (k = 1..order) with exp(sum c_k t^k) = C(t),
// computed as log(C) over Q.
std::vector<mpq_class> c_log_coefficients(int order);

}  // namespace strata

#endif
