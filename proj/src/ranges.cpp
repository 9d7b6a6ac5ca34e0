#include "strata/ranges.hpp"

#include <algorithm>

#include "strata/partitions.hpp"

namespace strata {

namespace {

mpq_class rational_min(const mpq_class& a, const mpq_class& b) { return a < b ? a : b; }

// ell(2g-2) - g - m + d0r*d1l, the quantity both stability ranges share
mpq_class excess(long ell, long r, long m, long g) {
    return mpq_class(ell * (2 * g - 2) - g - m + delta_zero(r) * delta_one(ell));
}

}  // namespace

long floor_rational(const mpq_class& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f.get_si();
}

std::pair<mpq_class, mpq_class> i_s_ranges(long ell, long r, long m, long g) {
    mpq_class two_thirds_g(2 * g, 3);
    two_thirds_g.canonicalize();
    mpq_class second = 2 * excess(ell, r, m, g);
    mpq_class s_first(2 * g - 2, 3);
    s_first.canonicalize();
    return {rational_min(two_thirds_g, second), rational_min(s_first, second)};
}

mpq_class free_generation_bound(long ell, long r, long m, long g) {
    mpq_class g_third(g, 3);
    g_third.canonicalize();
    mpq_class second(ell * (2 * g - 2) - m - g + delta_zero(r) * delta_one(ell) - 1);
    return rational_min(g_third, second);
}

std::pair<mpq_class, mpq_class> pure_weight_bounds(long ell, long r, long m, long g) {
    auto [i_m, s_m] = i_s_ranges(ell, r, m, g);
    auto s_m2 = i_s_ranges(ell, r, m + 2, g).second;
    return {rational_min(i_m, s_m2 + 2), s_m};
}

mpq_class stable_cohomology_bound(long ell, long m, long g) {
    mpq_class first(2 * g - 5, 3);
    first.canonicalize();
    mpq_class second(ell * (2 * g - 2) - m - g + delta_one(ell), 2);
    second.canonicalize();
    return rational_min(first, second);
}

CodimBounds codim_bounds(long ell, long r, long m, long g) {
    CodimBounds out;
    if (ell == 1) {
        if (m < g + delta_zero(r) - 1)
            out.abelian = mpq_class(g - m + delta_zero(r) - 1);
    } else {
        if (m < ell * (2 * g - 2) - g + 1)
            out.higher = std::make_pair(mpq_class((2 * ell - 1) * (2 * g - 2) - 2 * m - 1),
                                        mpq_class(ell * (2 * g - 2) - g - m + 1));
    }
    return out;
}

long bundle_rank(long ell, long r, long m, long g) {
    return ell * (2 * g - 2) - g + 1 - m + delta_zero(r) * delta_one(ell);
}

GeneratorInfo tautological_generators(const StratumSignature& sig) {
    GeneratorInfo info;
    const auto& parts = sig.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == -sig.ell()) {
            info.eta_generates = false;
            info.psi_indices.push_back(static_cast<int>(i) + 1);
        }
    }
    return info;
}

RangeReport build_range_report(const StratumSignature& sig, long extra_specified_ones,
                               std::optional<CheckStatus> relation_status) {
    RangeReport rep(sig);
    rep.extra_specified_ones = extra_specified_ones;
    rep.split = sig.split(extra_specified_ones);
    rep.generators = tautological_generators(sig);
    long ell = sig.ell(), g = sig.genus();
    long m = rep.split.m, r = rep.split.r;
    rep.d0r = delta_zero(r);
    rep.d1l = delta_one(ell);
    rep.dim_abelian_type = stratum_dimension(sig, true);
    rep.dim_other = stratum_dimension(sig, false);

    std::tie(rep.injectivity_range, rep.surjectivity_range) = i_s_ranges(ell, r, m, g);
    rep.free_generation = free_generation_bound(ell, r, m, g);
    std::tie(rep.pure_weight_injectivity, rep.pure_weight_surjectivity) =
        pure_weight_bounds(ell, r, m, g);
    if (sig.holomorphic_type()) rep.stable_bound = stable_cohomology_bound(ell, m, g);
    rep.codim = codim_bounds(ell, r, m, g);
    rep.rank = bundle_rank(ell, r, m, g);

    for (long i = 0; i <= 8; ++i)
        rep.monomial_counts.push_back(decorated_monomial_count(rep.split.k, 2 * i));

    // Q[eta]/(eta^(floor(g/3)+1)) is established exactly for abelian strata
    // with all parts positive, at least 4g/3 simple zeros, g <= 30, once the
    // target coefficient is certified non-vanishing.
    if (rep.generators.eta_generates && ell == 1 && sig.all_parts_positive() && g >= 2 &&
        g <= 30 && relation_status == CheckStatus::non_vanishing) {
        long ones = 0;
        for (long p : sig.parts())
            if (p == 1) ++ones;
        if (mpq_class(3 * ones) >= mpq_class(4 * g)) {
            rep.full_presentation =
                "Q[eta]/(eta^" + std::to_string(target_degree(sig)) + ")";
        }
    }
    return rep;
}

}  // namespace strata
