#ifndef STRATA_SWEEP_HPP
#define STRATA_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "strata/relation_check.hpp"

namespace strata {

struct CheckpointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exhaustive certification run: for every g in [g_min, g_max] and every
// positive partition of ell*(2g-2), decide non-vanishing of the target
// coefficient in modular-with-fallback mode and append one JSON line per
// case to output_path. Work is cut into contiguous partition-index shards;
// shards commit strictly in index order, so the output file is identical
// whatever the worker count (and, with include_timing = false, identical
// byte for byte).
struct SweepConfig {
    long g_min = 2;
    long g_max = 12;
    int ell = 1;
    std::uint32_t start_prime = 10007;
    int max_primes = 8;
    int workers = 0;  // 0 = all hardware threads; 1 = serial reference engine
    std::string output_path = "verify.jsonl";
    std::string checkpoint_path;  // default: output_path + ".checkpoint.json"
    long shard_size = 4096;
    bool include_timing = true;
    bool quiet = false;
    // Testing/ops hook: stop (exit like a crash, but at a shard boundary)
    // after this many shards have been committed. -1 disables.
    long halt_after_shards = -1;
    bool force_serial = false;

    std::string effective_checkpoint_path() const {
        return checkpoint_path.empty() ? output_path + ".checkpoint.json" : checkpoint_path;
    }
};

struct SweepSummary {
    long cases = 0;
    long non_vanishing = 0;
    long vanishes_over_q = 0;
    long inconclusive = 0;
    int max_primes_tried = 0;
    bool complete = false;
    bool halted = false;

    bool all_certified() const { return complete && cases == non_vanishing; }
};

// The version string of the partition enumeration order. Checkpoints record
// it; resuming under a different order would silently misalign indices, so
// mismatches are rejected.
extern const char* const kOrderVersion;

// Fresh run, or continuation when a consistent checkpoint already exists.
SweepSummary run_sweep(const SweepConfig& config);

// Continuation only: refuses to start when the checkpoint is missing.
SweepSummary resume_sweep(const SweepConfig& config);

}  // namespace strata

#endif
