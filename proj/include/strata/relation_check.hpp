#ifndef STRATA_RELATION_CHECK_HPP
#define STRATA_RELATION_CHECK_HPP

#include <chrono>
#include <optional>
#include <vector>

#include "strata/series.hpp"
#include "strata/signature.hpp"

namespace strata {

// The relation test only applies in degrees >= 1, which needs g >= 2.
int target_degree(const StratumSignature& sig);  // floor(g/3) + 1

// A prime is admissible for a signature when every rational constant that
// enters the test series is p-integral: p >= 5 (keeps 72 a unit), p does not
// divide ell, and p does not divide any m'_i + ell.
bool admissible_prime(const StratumSignature& sig, std::uint32_t p);

// Scalar attached to the pullback of kappa_j: 2g-2+n - sum_i 1/(m_i+1)^j,
// with m_i = m'_i/ell. Requires every m_i != -1.
mpq_class kappa_pullback_coefficient(const StratumSignature& sig, int j);

// The product series prod_i C(t/(m_i+1)) / C(t)^(2g-2+n) truncated at N.
// Identical parts are grouped through pow_int; `grouped = false` keeps the
// naive one-factor-per-part path around as an oracle for that shortcut.
TruncatedSeries product_test_series(const StratumSignature& sig, int order, const Ring& ring,
                                    bool grouped = true);

// The product series times the first-order correction factor
//   1 - 2t(2g-2+n - sum 1/(m_i+1))
//     - 12t^2 ((2g-2+n) C'(t)/C(t) - sum C'(t/(m_i+1)) / ((m_i+1)^2 C(t/(m_i+1)))).
TruncatedSeries corrected_test_series(const StratumSignature& sig, int order, const Ring& ring,
                                      bool grouped = true);

// Which of the two series certifies relations for this signature.
enum class SeriesKind { product, corrected };
SeriesKind series_kind_for(const StratumSignature& sig);  // corrected iff g = 1 mod 3

// The t^a coefficient of the appropriate test series over `ring`, a the
// target degree. Truncation never goes above degree a.
Coefficient relation_test_coefficient(const StratumSignature& sig, const Ring& ring);

enum class CheckStatus { non_vanishing, vanishes_over_q, inconclusive };

struct CheckMode {
    enum class Kind { rational, modular_fallback };
    Kind kind = Kind::modular_fallback;
    std::uint32_t start_prime = 10007;
    int max_primes = 8;  // zero residues tolerated before escalating to Q

    static CheckMode rational() { return {Kind::rational, 0, 0}; }
    static CheckMode modular(std::uint32_t start = 10007, int max_primes = 8) {
        return {Kind::modular_fallback, start, max_primes};
    }
};

struct VerificationRecord {
    StratumSignature signature;
    int target_degree;
    int genus_mod_3;
    SeriesKind series;
    CheckStatus status;
    std::vector<std::uint32_t> primes_tried;
    std::optional<std::uint32_t> witness_prime;       // set when certified mod p
    std::optional<mpq_class> rational_coefficient;    // set when the Q stage ran
    std::chrono::microseconds elapsed{0};
};

// Decide non-vanishing of the target coefficient. Rational mode computes the
// exact coefficient. Modular mode walks admissible primes from start_prime;
// a non-zero residue certifies non-vanishing, and after max_primes zero
// residues the exact rational computation settles the question. A prime at
// which some division degenerates (NonInvertibleError) is skipped without
// counting toward max_primes.
VerificationRecord check_relation(const StratumSignature& sig, const CheckMode& mode);

}  // namespace strata

#endif
