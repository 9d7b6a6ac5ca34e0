#ifndef STRATA_SIEGEL_VEECH_HPP
#define STRATA_SIEGEL_VEECH_HPP

#include <string>

#include "strata/signature.hpp"

namespace strata {

// Certified rational enclosure of pi^2, the only transcendental constant the
// varying criterion ever compares against.
inline mpq_class pi_squared_lower() {
    mpq_class q(98696, 10000);
    q.canonicalize();
    return q;
}
inline mpq_class pi_squared_upper() {
    mpq_class q(98697, 10000);
    q.canonicalize();
    return q;
}

// Abelian signature of the canonical double cover branched at the odd-order
// entries: each even entry 2k lifts to the pair (k, k), each odd entry 2l-1
// lifts to a single zero of order 2l (order 0 = plain marked point). The
// genus comes out as 1 + sum k_i + sum l_j.
StratumSignature hyperelliptic_lift(const QuadraticSignature& nu);

// pi^2 times the area Siegel-Veech constant of a Teichmueller curve lifted
// from the genus-0 stratum of type nu:
//   1 - (m+n)/2 + sum 1/(2k_i+2) + sum 1/(2l_j+1)
mpq_class c_area_pi2(const QuadraticSignature& nu);

struct VaryingReport {
    long odd_pair_count = 0;  // m
    long genus = 0;
    std::string mu_text;                 // the lifted abelian signature
    mpq_class hyperelliptic_lower_bound; // (6+m)/2, a bound on pi^2 * c_area
    // generic large-genus limit of pi^2 * c_area is pi^2/2; the comparison
    // below uses the certified enclosure, never floating point
    bool certified_varying = false;
    std::string verdict;
};

// The varying criterion: for odd k_i > 0 appearing in pairs and l_j > 0,
// m >= 4 pairs force the hyperelliptic bound (6+m)/2 above pi^2/2, so the
// stratum is varying (for sufficiently large genus) and eta != 0.
VaryingReport varying_check(const std::vector<long>& odd_k_list,
                            const std::vector<long>& l_list);

}  // namespace strata

#endif
