#include "strata/c_series.hpp"

#include <map>
#include <memory>
#include <tuple>

namespace strata {

mpz_class factorial_ratio(long k) {
    if (k < 0) throw std::invalid_argument("negative index");
    mpz_class num, d1, d2;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(6 * k));
    mpz_fac_ui(d1.get_mpz_t(), static_cast<unsigned long>(3 * k));
    mpz_fac_ui(d2.get_mpz_t(), static_cast<unsigned long>(2 * k));
    mpz_class den = d1 * d2;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("(6k)!/((3k)!(2k)!) failed to be integral");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

TruncatedSeries c_series(int order, const Ring& ring) {
    if (!ring.is_rational() && (ring.p == 2 || ring.p == 3))
        throw std::invalid_argument("72 is not invertible mod " + std::to_string(ring.p));
    TruncatedSeries s(ring, order);
    if (ring.is_rational()) {
        mpq_class pow72 = 1;
        for (int k = 0; k <= order; ++k) {
            mpq_class c(factorial_ratio(k));
            c /= pow72;
            c.canonicalize();
            s.set_coeff(k, Coefficient(c));
            pow72 *= 72;
        }
    } else {
        Fp inv72 = Fp(72, ring.p).inverse();
        Fp scale(1, ring.p);
        for (int k = 0; k <= order; ++k) {
            mpz_class ratio = factorial_ratio(k);
            Fp r(mpz_fdiv_ui(ratio.get_mpz_t(), ring.p), ring.p);
            s.set_coeff(k, Coefficient(r * scale));
            scale = scale * inv72;
        }
    }
    return s;
}

const TruncatedSeries& c_series_cached(int order, const Ring& ring) {
    thread_local std::map<std::tuple<int, std::uint32_t, int>, std::unique_ptr<TruncatedSeries>> cache;
    auto key = std::make_tuple(static_cast<int>(ring.kind), ring.p, order);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, std::make_unique<TruncatedSeries>(c_series(order, ring))).first;
    }
    return *it->second;
}

std::vector<mpq_class> c_log_coefficients(int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    TruncatedSeries l = log(c_series(order, Ring::rationals()));
    std::vector<mpq_class> out;
    out.reserve(static_cast<std::size_t>(order));
    for (int k = 1; k <= order; ++k) out.push_back(l[k].rational());
    return out;
}

}  // namespace strata
