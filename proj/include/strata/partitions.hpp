#ifndef STRATA_PARTITIONS_HPP
#define STRATA_PARTITIONS_HPP

#include <vector>

#include <gmpxx.h>

namespace strata {

// Streams the partitions of a positive integer into weakly decreasing
// positive parts, in reverse-lexicographic order: (n), (n-1,1), ...,
// (1^n). The successor step is O(1) amortized, so seeking to an index by
// fast-forwarding is cheap. This order is part of the sweep's checkpoint
// contract (see order_version there); do not change it.
class PartitionIterator {
public:
    explicit PartitionIterator(long total);

    bool done() const { return done_; }
    const std::vector<long>& value() const { return parts_; }
    // advance to the successor; returns false once exhausted
    bool next();
    // step `count` times (stops early at exhaustion)
    void skip(long count);

private:
    std::vector<long> parts_;
    bool done_;
};

// p(n) by Euler's pentagonal-number recurrence (memoized, thread-safe).
mpz_class partition_count(long n);

// Number of monomials of degree i/2 in generators psi_1..psi_k, eta (degree
// 1 each) and kappa_1, kappa_2, ... (kappa_j of degree j); 0 for odd i.
// Computed as the t^{i/2} coefficient of (1-t)^{-(k+1)} * prod_j (1-t^j)^{-1}.
mpz_class decorated_monomial_count(long k, long i);

// One eta-decorated boundary stratum label: a_j raises the order at the j-th
// specified zero, b_j counts unlabeled zeros of order j+1, e is the eta power.
struct DecoratedTuple {
    std::vector<long> a;  // size k
    std::vector<long> b;  // b[j-1] = multiplicity of kappa_j / of order-(j+1) zeros
    long e = 0;
};

// All tuples with sum(a) + sum(j * b_j) + e = c. Their number equals
// decorated_monomial_count(k, 2c).
std::vector<DecoratedTuple> decorated_strata_enumerate(long k, long c);

}  // namespace strata

#endif
