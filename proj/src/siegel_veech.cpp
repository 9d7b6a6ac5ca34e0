#include "strata/siegel_veech.hpp"

#include <sstream>

namespace strata {

StratumSignature hyperelliptic_lift(const QuadraticSignature& nu) {
    std::vector<long> mu;
    for (long k : nu.k_list()) {
        mu.push_back(k);
        mu.push_back(k);
    }
    for (long l : nu.l_list()) mu.push_back(2 * l);
    return StratumSignature(1, std::move(mu));
}

mpq_class c_area_pi2(const QuadraticSignature& nu) {
    mpq_class acc = 1;
    mpq_class half(nu.even_count() + nu.odd_count(), 2);
    half.canonicalize();
    acc -= half;
    for (long k : nu.k_list()) {
        mpq_class term(1, 2 * k + 2);
        term.canonicalize();
        acc += term;
    }
    for (long l : nu.l_list()) {
        mpq_class term(1, 2 * l + 1);
        acc += term;
    }
    acc.canonicalize();
    return acc;
}

VaryingReport varying_check(const std::vector<long>& odd_k_list,
                            const std::vector<long>& l_list) {
    VaryingReport rep;
    long sum = 0;
    for (long k : odd_k_list) {
        if (k <= 0 || k % 2 == 0)
            throw SignatureError("k entries must be positive odd, got " + std::to_string(k));
        sum += k;
    }
    for (long l : l_list) {
        if (l <= 0) throw SignatureError("l entries must be positive, got " + std::to_string(l));
        sum += l;
    }
    rep.odd_pair_count = static_cast<long>(odd_k_list.size());
    rep.genus = 1 + sum;

    std::vector<long> mu;
    for (long k : odd_k_list) {
        mu.push_back(k);
        mu.push_back(k);
    }
    for (long l : l_list) mu.push_back(2 * l);
    rep.mu_text = StratumSignature(1, mu).canonical_text();

    rep.hyperelliptic_lower_bound = mpq_class(6 + rep.odd_pair_count, 2);
    rep.hyperelliptic_lower_bound.canonicalize();

    // (6+m)/2 > pi^2/2 iff 6+m > pi^2; certify via the upper enclosure
    bool above = mpq_class(6 + rep.odd_pair_count) > pi_squared_upper();
    rep.certified_varying = rep.odd_pair_count >= 4 && above;
    rep.verdict = rep.certified_varying
                      ? "varying for sufficiently large genus (eta != 0)"
                      : "not certified by this criterion";
    return rep;
}

}  // namespace strata
