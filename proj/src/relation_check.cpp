#include "strata/relation_check.hpp"

#include <map>

#include "strata/c_series.hpp"

namespace strata {

int target_degree(const StratumSignature& sig) {
    if (sig.genus() < 2) throw std::domain_error("target degree needs genus >= 2");
    return static_cast<int>(sig.genus() / 3 + 1);
}

bool admissible_prime(const StratumSignature& sig, std::uint32_t p) {
    if (p < 5) return false;
    long lp = static_cast<long>(p);
    if (sig.ell() % lp == 0) return false;
    for (long part : sig.parts()) {
        long d = part + sig.ell();
        if (d % lp == 0) return false;  // covers d == 0 (pole of order ell) too
    }
    return true;
}

namespace {

void require_no_order_ell_pole(const StratumSignature& sig) {
    if (sig.has_pole_of_order_ell())
        throw std::domain_error(
            "signature has a part equal to -ell: eta vanishes and the test series is undefined");
}

// 1/(m_i+1) = ell/(m'_i+ell) for a raw part value, as an element of `ring`
Coefficient scale_constant(const StratumSignature& sig, long part, const Ring& ring) {
    mpq_class q(sig.ell(), part + sig.ell());
    q.canonicalize();
    return Coefficient::embed(q, ring);
}

std::map<long, long> part_multiplicities(const StratumSignature& sig) {
    std::map<long, long> mult;
    for (long p : sig.parts()) ++mult[p];
    return mult;
}

}  // namespace

mpq_class kappa_pullback_coefficient(const StratumSignature& sig, int j) {
    require_no_order_ell_pole(sig);
    if (j < 1) throw std::invalid_argument("kappa index must be >= 1");
    mpq_class acc = 2 * sig.genus() - 2 + sig.count();
    for (long part : sig.parts()) {
        mpq_class inv(sig.ell(), part + sig.ell());
        inv.canonicalize();
        mpq_class powed = inv;
        for (int e = 1; e < j; ++e) powed *= inv;
        acc -= powed;
    }
    acc.canonicalize();
    return acc;
}

TruncatedSeries product_test_series(const StratumSignature& sig, int order, const Ring& ring,
                                    bool grouped) {
    require_no_order_ell_pole(sig);
    const TruncatedSeries& c = c_series_cached(order, ring);
    TruncatedSeries acc = TruncatedSeries::one(ring, order);
    if (grouped) {
        for (const auto& [part, mult] : part_multiplicities(sig)) {
            TruncatedSeries factor = substitute_scale(c, scale_constant(sig, part, ring));
            acc = acc * pow_int(factor, mult);
        }
    } else {
        for (long part : sig.parts()) {
            acc = acc * substitute_scale(c, scale_constant(sig, part, ring));
        }
    }
    long exponent = 2 * sig.genus() - 2 + sig.count();
    return acc * pow_int(c, -exponent);
}

TruncatedSeries corrected_test_series(const StratumSignature& sig, int order, const Ring& ring,
                                      bool grouped) {
    require_no_order_ell_pole(sig);
    TruncatedSeries base = product_test_series(sig, order, ring, grouped);
    const TruncatedSeries& c = c_series_cached(order, ring);
    TruncatedSeries cprime = derivative(c);  // order-1

    long weight = 2 * sig.genus() - 2 + sig.count();
    Coefficient weight_c = Coefficient::embed(mpq_class(weight), ring);

    // ratio = (2g-2+n) C'/C - sum_i C'(c_i t) c_i^2 / C(c_i t), order-1;
    // only degrees <= order-2 of it survive the t^2 shift below
    TruncatedSeries ratio = cprime * invert(c) * weight_c;
    auto correction_term = [&](long part, long mult) {
        Coefficient ci = scale_constant(sig, part, ring);
        TruncatedSeries num = substitute_scale(cprime, ci);
        TruncatedSeries den = invert(substitute_scale(c, ci));
        Coefficient factor = ci * ci * Coefficient::embed(mpq_class(mult), ring);
        ratio = ratio - num * den * factor;
    };
    if (grouped) {
        for (const auto& [part, mult] : part_multiplicities(sig)) correction_term(part, mult);
    } else {
        for (long part : sig.parts()) correction_term(part, 1);
    }

    TruncatedSeries bracket = TruncatedSeries::one(ring, order);
    if (order >= 1) {
        Coefficient lin = Coefficient::embed(kappa_pullback_coefficient(sig, 1), ring);
        bracket.set_coeff(1, -(lin + lin));
    }
    Coefficient twelve = Coefficient::embed(mpq_class(12), ring);
    for (int d = 2; d <= order; ++d) {
        bracket.set_coeff(d, -(twelve * ratio[d - 2]));
    }
    return base * bracket;
}

SeriesKind series_kind_for(const StratumSignature& sig) {
    return sig.genus() % 3 == 1 ? SeriesKind::corrected : SeriesKind::product;
}

Coefficient relation_test_coefficient(const StratumSignature& sig, const Ring& ring) {
    int a = target_degree(sig);
    TruncatedSeries s = series_kind_for(sig) == SeriesKind::corrected
                            ? corrected_test_series(sig, a, ring)
                            : product_test_series(sig, a, ring);
    return s[a];
}

VerificationRecord check_relation(const StratumSignature& sig, const CheckMode& mode) {
    auto start = std::chrono::steady_clock::now();
    require_no_order_ell_pole(sig);

    VerificationRecord rec{sig,
                           target_degree(sig),
                           static_cast<int>(sig.genus() % 3),
                           series_kind_for(sig),
                           CheckStatus::inconclusive,
                           {},
                           std::nullopt,
                           std::nullopt,
                           std::chrono::microseconds{0}};

    auto run_rational = [&] {
        Coefficient coeff = relation_test_coefficient(sig, Ring::rationals());
        rec.rational_coefficient = coeff.rational();
        rec.status = coeff.is_zero() ? CheckStatus::vanishes_over_q : CheckStatus::non_vanishing;
    };

    if (mode.kind == CheckMode::Kind::rational) {
        run_rational();
    } else {
        std::uint32_t p = mode.start_prime;
        if (!is_prime(p)) p = next_prime_after(p);
        int zero_residues = 0;
        while (zero_residues < mode.max_primes) {
            if (admissible_prime(sig, p)) {
                try {
                    Coefficient coeff = relation_test_coefficient(sig, Ring::mod(p));
                    rec.primes_tried.push_back(p);
                    if (!coeff.is_zero()) {
                        rec.status = CheckStatus::non_vanishing;
                        rec.witness_prime = p;
                        break;
                    }
                    ++zero_residues;
                } catch (const NonInvertibleError&) {
                    // inadmissible in a way the static predicate missed; skip
                }
            }
            p = next_prime_after(p);
        }
        if (rec.status != CheckStatus::non_vanishing) run_rational();
    }

    rec.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    return rec;
}

}  // namespace strata
