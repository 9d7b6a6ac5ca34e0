#ifndef STRATA_SIGNATURE_HPP
#define STRATA_SIGNATURE_HPP

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace strata {

struct SignatureError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Split of a signature into the k "specified" parts (by default every part
// different from 1) and the remaining simple zeros; m is the sum of the
// specified parts, r the number of negative ones.
struct SpecifiedSplit {
    long k = 0;
    long m = 0;
    long r = 0;
    long simple_zeros = 0;            // parts equal to 1 left unspecified
    std::vector<long> specified;      // negatives first, then ascending
};

// Zero/pole type of a stratum of ell-differentials: integer orders
// m'_1..m'_n with sum ell*(2g-2) for a derived genus g >= 0, and the
// stability requirement 2g-2+n > 0. Order of parts is preserved as given.
class StratumSignature {
public:
    StratumSignature(int ell, std::vector<long> parts);

    // Comma-separated orders with optional repetition "v^e", e.g. "3,1" or
    // "1^58" or "-1^3,1^7".
    static StratumSignature parse(std::string_view text, int ell = 1);

    int ell() const { return ell_; }
    const std::vector<long>& parts() const { return parts_; }
    int count() const { return static_cast<int>(parts_.size()); }  // n
    long genus() const { return genus_; }
    long part_sum() const { return sum_; }

    // true iff some part equals -ell (the regime where the tautological
    // class eta vanishes and psi classes take over as generators)
    bool has_pole_of_order_ell() const;
    // true iff every part > -ell (finite flat area)
    bool holomorphic_type() const;
    bool all_parts_positive() const;

    // effective order m_i = m'_i / ell as an exact rational
    mpq_class effective_part(int i) const;

    // extra_specified_ones of the 1-parts may be promoted into the
    // specified set (they contribute to k and m but never to r)
    SpecifiedSplit split(long extra_specified_ones = 0) const;

    // canonical form: specified parts ascending (negatives first), runs
    // collapsed to v^e, simple zeros collapsed to a trailing 1^e
    std::string canonical_text() const;

    bool operator==(const StratumSignature& o) const {
        return ell_ == o.ell_ && parts_ == o.parts_;
    }

private:
    int ell_;
    std::vector<long> parts_;
    long genus_;
    long sum_;
};

// Dimension of a connected component of the projectivized stratum:
// 2g-2+n when the component parameterizes ell-th powers of holomorphic
// abelian differentials, 2g-3+n otherwise. Which case applies is a property
// of the component, so the caller supplies it.
long stratum_dimension(const StratumSignature& sig, bool holomorphic_abelian_type);

// Zero/pole type of a genus-0 quadratic differential: even entries 2k_i
// (k_i > 0) and odd entries 2l_j - 1 (l_j >= 0), summing to -4.
class QuadraticSignature {
public:
    static QuadraticSignature from_entries(const std::vector<long>& entries);
    static QuadraticSignature from_half_orders(std::vector<long> k_list, std::vector<long> l_list);

    const std::vector<long>& k_list() const { return k_; }  // even entries / 2
    const std::vector<long>& l_list() const { return l_; }  // (odd entries + 1) / 2
    long even_count() const { return static_cast<long>(k_.size()); }  // m
    long odd_count() const { return static_cast<long>(l_.size()); }   // n
    std::vector<long> entries() const;
    std::string text() const;

private:
    QuadraticSignature(std::vector<long> k, std::vector<long> l);
    std::vector<long> k_;
    std::vector<long> l_;
};

}  // namespace strata

#endif
