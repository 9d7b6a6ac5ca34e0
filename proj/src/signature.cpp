#include "strata/signature.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace strata {

namespace {

long parse_long(std::string_view tok, std::string_view what) {
    long v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw SignatureError("cannot parse " + std::string(what) + " '" + std::string(tok) + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

StratumSignature::StratumSignature(int ell, std::vector<long> parts)
    : ell_(ell), parts_(std::move(parts)) {
    if (ell_ < 1) throw SignatureError("ell must be a positive integer");
    if (parts_.empty()) throw SignatureError("signature needs at least one part");
    sum_ = 0;
    for (long p : parts_) sum_ += p;
    if (sum_ % ell_ != 0)
        throw SignatureError("part sum " + std::to_string(sum_) + " is not divisible by ell=" +
                             std::to_string(ell_));
    long q = sum_ / ell_;  // = 2g - 2
    if (q % 2 != 0)
        throw SignatureError("part sum / ell = " + std::to_string(q) +
                             " must be even to give an integer genus");
    genus_ = q / 2 + 1;
    if (genus_ < 0) throw SignatureError("derived genus is negative");
    long n = static_cast<long>(parts_.size());
    if (2 * genus_ - 2 + n <= 0)
        throw SignatureError("unstable signature: 2g-2+n = " + std::to_string(2 * genus_ - 2 + n));
}

StratumSignature StratumSignature::parse(std::string_view text, int ell) {
    std::vector<long> parts;
    std::string_view rest = trim(text);
    if (rest.empty()) throw SignatureError("empty signature");
    while (!rest.empty()) {
        std::size_t comma = rest.find(',');
        std::string_view tok = trim(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        if (tok.empty()) throw SignatureError("empty entry in signature");
        std::size_t caret = tok.find('^');
        long value, repeat = 1;
        if (caret == std::string_view::npos) {
            value = parse_long(tok, "part");
        } else {
            value = parse_long(trim(tok.substr(0, caret)), "part");
            repeat = parse_long(trim(tok.substr(caret + 1)), "exponent");
            if (repeat < 1) throw SignatureError("repetition count must be >= 1");
            if (repeat > 1000000) throw SignatureError("repetition count too large");
        }
        parts.insert(parts.end(), static_cast<std::size_t>(repeat), value);
    }
    return StratumSignature(ell, std::move(parts));
}

bool StratumSignature::has_pole_of_order_ell() const {
    return std::any_of(parts_.begin(), parts_.end(), [&](long p) { return p == -ell_; });
}

bool StratumSignature::holomorphic_type() const {
    return std::all_of(parts_.begin(), parts_.end(), [&](long p) { return p > -ell_; });
}

bool StratumSignature::all_parts_positive() const {
    return std::all_of(parts_.begin(), parts_.end(), [](long p) { return p > 0; });
}

mpq_class StratumSignature::effective_part(int i) const {
    mpq_class q(parts_.at(static_cast<std::size_t>(i)), ell_);
    q.canonicalize();
    return q;
}

SpecifiedSplit StratumSignature::split(long extra_specified_ones) const {
    SpecifiedSplit s;
    long ones = 0;
    for (long p : parts_) {
        if (p == 1) {
            ++ones;
        } else {
            s.specified.push_back(p);
            s.m += p;
            if (p < 0) ++s.r;
        }
    }
    if (extra_specified_ones < 0 || extra_specified_ones > ones)
        throw SignatureError("cannot specify " + std::to_string(extra_specified_ones) +
                             " ones: signature has " + std::to_string(ones));
    std::sort(s.specified.begin(), s.specified.end());
    s.specified.insert(s.specified.end(), static_cast<std::size_t>(extra_specified_ones), 1L);
    s.m += extra_specified_ones;
    s.k = static_cast<long>(s.specified.size());
    s.simple_zeros = ones - extra_specified_ones;
    return s;
}

std::string StratumSignature::canonical_text() const {
    std::vector<long> specified;
    long ones = 0;
    for (long p : parts_) {
        if (p == 1) ++ones; else specified.push_back(p);
    }
    std::sort(specified.begin(), specified.end());
    std::ostringstream out;
    bool first = true;
    auto emit = [&](long value, long run) {
        if (!first) out << ",";
        out << value;
        if (run > 1) out << "^" << run;
        first = false;
    };
    for (std::size_t i = 0; i < specified.size();) {
        std::size_t j = i;
        while (j < specified.size() && specified[j] == specified[i]) ++j;
        emit(specified[i], static_cast<long>(j - i));
        i = j;
    }
    if (ones > 0) emit(1, ones);
    return out.str();
}

long stratum_dimension(const StratumSignature& sig, bool holomorphic_abelian_type) {
    long base = 2 * sig.genus() - 2 + sig.count();
    return holomorphic_abelian_type ? base : base - 1;
}

QuadraticSignature::QuadraticSignature(std::vector<long> k, std::vector<long> l)
    : k_(std::move(k)), l_(std::move(l)) {
    long sum = 0;
    for (long ki : k_) {
        if (ki <= 0) throw SignatureError("even entries 2k must have k > 0");
        sum += 2 * ki;
    }
    for (long lj : l_) {
        if (lj < 0) throw SignatureError("odd entries 2l-1 must have l >= 0");
        sum += 2 * lj - 1;
    }
    if (sum != -4)
        throw SignatureError("genus-0 quadratic signature must sum to -4, got " +
                             std::to_string(sum));
}

QuadraticSignature QuadraticSignature::from_entries(const std::vector<long>& entries) {
    std::vector<long> k, l;
    for (long e : entries) {
        if (e % 2 == 0) {
            if (e <= 0) throw SignatureError("even entry " + std::to_string(e) + " must be positive");
            k.push_back(e / 2);
        } else {
            if (e < -1) throw SignatureError("odd entry " + std::to_string(e) + " must be >= -1");
            l.push_back((e + 1) / 2);
        }
    }
    return QuadraticSignature(std::move(k), std::move(l));
}

QuadraticSignature QuadraticSignature::from_half_orders(std::vector<long> k_list,
                                                        std::vector<long> l_list) {
    return QuadraticSignature(std::move(k_list), std::move(l_list));
}

std::vector<long> QuadraticSignature::entries() const {
    std::vector<long> out;
    out.reserve(k_.size() + l_.size());
    for (long ki : k_) out.push_back(2 * ki);
    for (long lj : l_) out.push_back(2 * lj - 1);
    return out;
}

std::string QuadraticSignature::text() const {
    std::ostringstream out;
    bool first = true;
    for (long e : entries()) {
        if (!first) out << ",";
        out << e;
        first = false;
    }
    return out.str();
}

}  // namespace strata
