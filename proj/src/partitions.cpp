#include "strata/partitions.hpp"

#include <mutex>
#include <stdexcept>

namespace strata {

PartitionIterator::PartitionIterator(long total) : done_(false) {
    if (total < 1) throw std::invalid_argument("total must be >= 1");
    parts_.push_back(total);
}

bool PartitionIterator::next() {
    if (done_) return false;
    // find the last part > 1; everything after it is a tail of ones
    std::size_t i = parts_.size();
    while (i > 0 && parts_[i - 1] == 1) --i;
    if (i == 0) {
        done_ = true;
        return false;
    }
    long rem = static_cast<long>(parts_.size() - i) + 1;  // ones removed + the 1 we shave off
    parts_.resize(i);
    long& pivot = parts_[i - 1];
    pivot -= 1;
    long v = pivot;
    while (rem > v) {
        parts_.push_back(v);
        rem -= v;
    }
    if (rem > 0) parts_.push_back(rem);
    return true;
}

void PartitionIterator::skip(long count) {
    for (long s = 0; s < count && !done_; ++s) next();
}

mpz_class partition_count(long n) {
    if (n < 0) throw std::invalid_argument("negative argument");
    static std::mutex mu;
    static std::vector<mpz_class> memo{1};  // p(0) = 1
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(memo.size()) <= n) {
        long m = static_cast<long>(memo.size());
        mpz_class acc = 0;
        for (long j = 1;; ++j) {
            long g1 = j * (3 * j - 1) / 2;
            long g2 = j * (3 * j + 1) / 2;
            if (g1 > m) break;
            mpz_class term = memo[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) term += memo[static_cast<std::size_t>(m - g2)];
            if (j % 2 == 1) acc += term; else acc -= term;
        }
        memo.push_back(acc);
    }
    return memo[static_cast<std::size_t>(n)];
}

mpz_class decorated_monomial_count(long k, long i) {
    if (k < 0 || i < 0) throw std::invalid_argument("negative argument");
    if (i % 2 != 0) return 0;
    long c = i / 2;
    // f[d] = coefficient of t^d, built factor by factor
    std::vector<mpz_class> f(static_cast<std::size_t>(c) + 1, 0);
    f[0] = 1;
    // (1-t)^{-(k+1)}: k+1 passes of the prefix-sum trick for 1/(1-t)
    for (long rep = 0; rep < k + 1; ++rep)
        for (long d = 1; d <= c; ++d) f[static_cast<std::size_t>(d)] += f[static_cast<std::size_t>(d - 1)];
    // 1/(1-t^j) for j = 1..c
    for (long j = 1; j <= c; ++j)
        for (long d = j; d <= c; ++d) f[static_cast<std::size_t>(d)] += f[static_cast<std::size_t>(d - j)];
    return f[static_cast<std::size_t>(c)];
}

namespace {

void enumerate_b(long c, long max_j, DecoratedTuple& cur, std::vector<DecoratedTuple>& out) {
    if (max_j == 0) {
        cur.e = c;  // whatever is left goes to the eta power
        DecoratedTuple t = cur;
        while (!t.b.empty() && t.b.back() == 0) t.b.pop_back();
        out.push_back(std::move(t));
        return;
    }
    for (long bj = 0; bj * max_j <= c; ++bj) {
        cur.b[static_cast<std::size_t>(max_j - 1)] = bj;
        enumerate_b(c - bj * max_j, max_j - 1, cur, out);
    }
    cur.b[static_cast<std::size_t>(max_j - 1)] = 0;
}

void enumerate_a(long k, long idx, long c, DecoratedTuple& cur, std::vector<DecoratedTuple>& out) {
    if (idx == k) {
        enumerate_b(c, static_cast<long>(cur.b.size()), cur, out);
        return;
    }
    for (long ai = 0; ai <= c; ++ai) {
        cur.a[static_cast<std::size_t>(idx)] = ai;
        enumerate_a(k, idx + 1, c - ai, cur, out);
    }
    cur.a[static_cast<std::size_t>(idx)] = 0;
}

}  // namespace

std::vector<DecoratedTuple> decorated_strata_enumerate(long k, long c) {
    if (k < 0 || c < 0) throw std::invalid_argument("negative argument");
    std::vector<DecoratedTuple> out;
    DecoratedTuple cur;
    cur.a.assign(static_cast<std::size_t>(k), 0);
    cur.b.assign(static_cast<std::size_t>(c), 0);  // b_j >= 1 forces j <= c
    enumerate_a(k, 0, c, cur, out);
    return out;
}

}  // namespace strata
