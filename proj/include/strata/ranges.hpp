#ifndef STRATA_RANGES_HPP
#define STRATA_RANGES_HPP

#include <optional>
#include <string>
#include <vector>

#include "strata/relation_check.hpp"
#include "strata/signature.hpp"

namespace strata {

// delta_{0r} and delta_{1l} in the bound formulas
inline int delta_zero(long r) { return r == 0 ? 1 : 0; }
inline int delta_one(long ell) { return ell == 1 ? 1 : 0; }

// Cohomological-degree ranges in which the tautological classes map
// injectively / surjectively to the cohomology of the pluricanonical-divisor
// compactification:
//   i = min{2g/3, 2(ell(2g-2) - g - m + d0r*d1l)}
//   s = min{2g/3 - 2/3, 2(ell(2g-2) - g - m + d0r*d1l)}
std::pair<mpq_class, mpq_class> i_s_ranges(long ell, long r, long m, long g);

// Chow-degree bound up to which Q[eta] (resp. the psi polynomial ring) maps
// isomorphically onto the tautological ring:
//   min{g/3, ell(2g-2) - m - g + d0r*d1l - 1}
mpq_class free_generation_bound(long ell, long r, long m, long g);

// Cohomological-degree bounds for the pure-weight tautological map:
// injective for * <= min{i(m), s(m+2)+2}, surjective for * <= s(m).
std::pair<mpq_class, mpq_class> pure_weight_bounds(long ell, long r, long m, long g);

// Degrees in which Q[eta] -> H^* of the open stratum is an isomorphism:
//   min{2g/3 - 5/3, (ell(2g-2) - m - g + d1l)/2}.
// Only meaningful for holomorphic type (all parts > -ell).
mpq_class stable_cohomology_bound(long ell, long m, long g);

// Codimension lower bounds for the locus where the fiber dimension of the
// divisor space jumps. The hypotheses gate applicability; an empty optional
// means "hypothesis fails, no bound claimed".
struct CodimBounds {
    std::optional<mpq_class> abelian;                          // ell = 1: g - m + d0r - 1
    std::optional<std::pair<mpq_class, mpq_class>> higher;     // ell >= 2: two chained bounds
};
CodimBounds codim_bounds(long ell, long r, long m, long g);

// Rank of the pushed-forward twisted pluricanonical bundle:
//   ell(2g-2) - g + 1 - m + d0r*d1l
long bundle_rank(long ell, long r, long m, long g);

struct GeneratorInfo {
    bool eta_generates = true;
    std::vector<int> psi_indices;  // 1-based positions of parts equal to -ell
};
GeneratorInfo tautological_generators(const StratumSignature& sig);

struct RangeReport {
    explicit RangeReport(StratumSignature sig) : signature(std::move(sig)) {}

    StratumSignature signature;
    long extra_specified_ones = 0;
    SpecifiedSplit split;
    int d0r = 0, d1l = 0;

    long dim_abelian_type = 0;  // 2g-2+n, components of holomorphic abelian type
    long dim_other = 0;         // 2g-3+n, every other component

    mpq_class injectivity_range;        // i(m), cohomological degree
    mpq_class surjectivity_range;       // s(m), cohomological degree
    mpq_class free_generation;          // Chow degree
    mpq_class pure_weight_injectivity;  // cohomological degree
    mpq_class pure_weight_surjectivity;
    std::optional<mpq_class> stable_bound;  // absent unless holomorphic type
    CodimBounds codim;
    long rank = 0;
    std::vector<mpz_class> monomial_counts;  // d(2i) for i = 0..8, with this k

    GeneratorInfo generators;
    std::optional<std::string> full_presentation;  // "Q[eta]/(eta^a)" when established
};

// relation_status: outcome of check_relation for this signature when the
// caller ran it; the full presentation is only claimed for ell = 1, positive
// parts, at least 4g/3 simple zeros, g <= 30 and certified non-vanishing.
RangeReport build_range_report(const StratumSignature& sig, long extra_specified_ones = 0,
                               std::optional<CheckStatus> relation_status = std::nullopt);

// floor of an exact rational (bounds are real numbers, degrees are integers)
long floor_rational(const mpq_class& q);

}  // namespace strata

#endif
