#include "strata/sweep.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "strata/partitions.hpp"
#include "strata/report.hpp"

namespace strata {

namespace fs = std::filesystem;

const char* const kOrderVersion = "rlex-1";

namespace {

struct GProgress {
    long g = 0;
    long total = 0;
    long done = 0;
    long non_vanishing = 0;
    long vanishes = 0;
    long inconclusive = 0;
    int max_primes_tried = 0;
};

struct Checkpoint {
    // enumeration + per-case config; all of it must match on continuation
    std::string order_version = kOrderVersion;
    int ell = 1;
    long g_min = 2;
    std::uint32_t start_prime = 10007;
    int max_primes = 8;
    long shard_size = 4096;
    bool include_timing = true;

    long g_current = 0;    // next g to work on
    long next_index = 0;   // next partition index within g_current
    std::uint64_t output_bytes = 0;  // committed prefix of the output file
    bool header_written = false;
    std::vector<GProgress> per_g;

    GProgress& progress_for(long g) {
        for (auto& p : per_g)
            if (p.g == g) return p;
        per_g.push_back(GProgress{g, 0, 0, 0, 0, 0, 0});
        return per_g.back();
    }
};

std::string now_iso8601() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

json checkpoint_to_json(const Checkpoint& c) {
    json j;
    j["schema"] = "strata.checkpoint/1";
    j["order_version"] = c.order_version;
    j["config"] = json{{"ell", c.ell},
                       {"g_min", c.g_min},
                       {"start_prime", c.start_prime},
                       {"max_primes", c.max_primes},
                       {"shard_size", c.shard_size},
                       {"include_timing", c.include_timing}};
    j["progress"] = json{{"g_current", c.g_current},
                         {"next_index", c.next_index},
                         {"output_bytes", c.output_bytes},
                         {"header_written", c.header_written}};
    json per_g = json::array();
    for (const auto& p : c.per_g) {
        per_g.push_back(json{{"g", p.g},
                             {"total", p.total},
                             {"done", p.done},
                             {"non_vanishing", p.non_vanishing},
                             {"vanishes_over_Q", p.vanishes},
                             {"inconclusive", p.inconclusive},
                             {"max_primes_tried", p.max_primes_tried}});
    }
    j["per_g"] = per_g;
    j["updated_at"] = now_iso8601();
    return j;
}

Checkpoint checkpoint_from_json(const json& j) {
    Checkpoint c;
    try {
        if (j.at("schema").get<std::string>() != "strata.checkpoint/1")
            throw CheckpointError("unknown checkpoint schema");
        c.order_version = j.at("order_version").get<std::string>();
        const json& cfg = j.at("config");
        c.ell = cfg.at("ell").get<int>();
        c.g_min = cfg.at("g_min").get<long>();
        c.start_prime = cfg.at("start_prime").get<std::uint32_t>();
        c.max_primes = cfg.at("max_primes").get<int>();
        c.shard_size = cfg.at("shard_size").get<long>();
        c.include_timing = cfg.at("include_timing").get<bool>();
        const json& pr = j.at("progress");
        c.g_current = pr.at("g_current").get<long>();
        c.next_index = pr.at("next_index").get<long>();
        c.output_bytes = pr.at("output_bytes").get<std::uint64_t>();
        c.header_written = pr.at("header_written").get<bool>();
        for (const json& p : j.at("per_g")) {
            GProgress gp;
            gp.g = p.at("g").get<long>();
            gp.total = p.at("total").get<long>();
            gp.done = p.at("done").get<long>();
            gp.non_vanishing = p.at("non_vanishing").get<long>();
            gp.vanishes = p.at("vanishes_over_Q").get<long>();
            gp.inconclusive = p.at("inconclusive").get<long>();
            gp.max_primes_tried = p.at("max_primes_tried").get<int>();
            c.per_g.push_back(gp);
        }
    } catch (const json::exception& e) {
        throw CheckpointError(std::string("malformed checkpoint: ") + e.what());
    }
    return c;
}

void save_checkpoint(const Checkpoint& c, const std::string& path) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
        out << checkpoint_to_json(c).dump(2) << "\n";
        if (!out.flush()) throw std::runtime_error("checkpoint write failed: " + tmp);
    }
    fs::rename(tmp, path);
}

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CheckpointError("cannot read checkpoint " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw CheckpointError(std::string("corrupted checkpoint ") + path + ": " + e.what());
    }
    return checkpoint_from_json(j);
}

void validate_config(const SweepConfig& cfg) {
    if (cfg.g_min < 2) throw std::invalid_argument("g_min must be >= 2");
    if (cfg.g_min > cfg.g_max) throw std::invalid_argument("g_min must be <= g_max");
    if (cfg.ell < 1) throw std::invalid_argument("ell must be positive");
    if (cfg.start_prime < 5) throw std::invalid_argument("start prime must be >= 5");
    if (cfg.max_primes < 0) throw std::invalid_argument("max_primes must be >= 0");
    if (cfg.shard_size < 1) throw std::invalid_argument("shard_size must be >= 1");
    if (cfg.output_path.empty()) throw std::invalid_argument("output path required");
}

void check_consistency(const Checkpoint& c, const SweepConfig& cfg) {
    if (c.order_version != kOrderVersion)
        throw CheckpointError("checkpoint was written under enumeration order '" +
                              c.order_version + "', this build uses '" + kOrderVersion + "'");
    auto mismatch = [](const std::string& what) {
        throw CheckpointError("checkpoint/config mismatch: " + what);
    };
    if (c.ell != cfg.ell) mismatch("ell");
    if (c.g_min != cfg.g_min) mismatch("g_min");
    if (c.start_prime != cfg.start_prime) mismatch("start_prime");
    if (c.max_primes != cfg.max_primes) mismatch("max_primes");
    if (c.shard_size != cfg.shard_size) mismatch("shard_size");
    if (c.include_timing != cfg.include_timing) mismatch("include_timing");
    // raising g_max just extends the run; covering less than what is already
    // in the output cannot be expressed
    long covered = c.next_index > 0 ? c.g_current : c.g_current - 1;
    if (covered > cfg.g_max)
        throw CheckpointError("checkpoint already covers g=" + std::to_string(covered) +
                              " which exceeds requested g_max=" + std::to_string(cfg.g_max));
}

std::string header_line(const SweepConfig& cfg) {
    json j;
    j["schema"] = "strata.verify/1";
    j["order_version"] = kOrderVersion;
    j["ell"] = cfg.ell;
    j["start_prime"] = cfg.start_prime;
    j["max_primes"] = cfg.max_primes;
    j["shard_size"] = cfg.shard_size;
    return j.dump() + "\n";
}

struct HaltRequested {};

class SweepRunner {
public:
    SweepRunner(const SweepConfig& cfg, Checkpoint ckpt)
        : cfg_(cfg), ckpt_(std::move(ckpt)), ckpt_path_(cfg.effective_checkpoint_path()) {}

    SweepSummary run() {
        open_output();
        try {
            for (long g = ckpt_.g_current; g <= cfg_.g_max; ++g) {
                run_genus(g);
                ckpt_.g_current = g + 1;
                ckpt_.next_index = 0;
                save_checkpoint(ckpt_, ckpt_path_);
            }
        } catch (const HaltRequested&) {
            out_.close();
            return summarize(true);
        }
        out_.close();
        return summarize(false);
    }

private:
    void open_output() {
        if (!ckpt_.header_written) {
            out_.open(cfg_.output_path, std::ios::binary | std::ios::trunc);
            if (!out_) throw std::runtime_error("cannot open output " + cfg_.output_path);
            std::string hdr = header_line(cfg_);
            out_ << hdr;
            out_.flush();
            ckpt_.output_bytes = hdr.size();
            ckpt_.header_written = true;
            save_checkpoint(ckpt_, ckpt_path_);
        } else {
            // drop anything past the last committed shard (e.g. a torn write
            // from a crash mid-append)
            if (!fs::exists(cfg_.output_path))
                throw CheckpointError("checkpoint exists but output file is missing");
            if (fs::file_size(cfg_.output_path) < ckpt_.output_bytes)
                throw CheckpointError("output file is shorter than the committed checkpoint mark");
            fs::resize_file(cfg_.output_path, ckpt_.output_bytes);
            out_.open(cfg_.output_path, std::ios::binary | std::ios::app);
            if (!out_) throw std::runtime_error("cannot open output " + cfg_.output_path);
        }
    }

    void run_genus(long g) {
        long degree_sum = static_cast<long>(cfg_.ell) * (2 * g - 2);
        long total = partition_count(degree_sum).get_si();
        GProgress& prog = ckpt_.progress_for(g);
        prog.total = total;

        PartitionIterator it(degree_sum);
        it.skip(ckpt_.next_index);

        long shards_per_window = std::max<long>(1, 2 * threads());
        while (ckpt_.next_index < total) {
            long window_end =
                std::min(total, ckpt_.next_index + shards_per_window * cfg_.shard_size);
            std::vector<StratumSignature> batch;
            batch.reserve(static_cast<std::size_t>(window_end - ckpt_.next_index));
            for (long i = ckpt_.next_index; i < window_end; ++i) {
                batch.emplace_back(cfg_.ell, it.value());
                it.next();
            }
            std::vector<std::string> lines(batch.size());
            std::vector<int> primes_used(batch.size(), 0);
            std::vector<int> statuses(batch.size(), 0);
            process_batch(batch, lines, primes_used, statuses);

            for (std::size_t i = 0; i < lines.size(); ++i) {
                out_ << lines[i];
                ckpt_.output_bytes += lines[i].size();
                prog.done += 1;
                switch (static_cast<CheckStatus>(statuses[i])) {
                    case CheckStatus::non_vanishing: prog.non_vanishing += 1; break;
                    case CheckStatus::vanishes_over_q: prog.vanishes += 1; break;
                    case CheckStatus::inconclusive: prog.inconclusive += 1; break;
                }
                prog.max_primes_tried = std::max(prog.max_primes_tried, primes_used[i]);
            }
            if (!out_.flush()) throw std::runtime_error("output write failed");

            committed_shards_ += (window_end - ckpt_.next_index + cfg_.shard_size - 1) /
                                 cfg_.shard_size;
            ckpt_.next_index = window_end;
            save_checkpoint(ckpt_, ckpt_path_);
            if (cfg_.halt_after_shards >= 0 && committed_shards_ >= cfg_.halt_after_shards)
                throw HaltRequested{};
        }
        if (!cfg_.quiet)
            std::cerr << "[verify] g=" << g << " done: " << prog.done << "/" << prog.total
                      << " cases, worst primes tried " << prog.max_primes_tried << "\n";
    }

    int threads() const {
#ifdef _OPENMP
        if (cfg_.force_serial) return 1;
        return cfg_.workers > 0 ? cfg_.workers : omp_get_max_threads();
#else
        return 1;
#endif
    }

    void process_batch(const std::vector<StratumSignature>& batch, std::vector<std::string>& lines,
                       std::vector<int>& primes_used, std::vector<int>& statuses) {
        CheckMode mode = CheckMode::modular(cfg_.start_prime, cfg_.max_primes);
        auto one_case = [&](std::size_t i) {
            VerificationRecord rec = check_relation(batch[i], mode);
            lines[i] = record_to_json(rec, cfg_.include_timing).dump() + "\n";
            primes_used[i] = static_cast<int>(rec.primes_tried.size());
            statuses[i] = static_cast<int>(rec.status);
        };
        int nthreads = threads();
        if (nthreads <= 1) {
            // serial reference engine: bitwise-identical output, no OpenMP
            for (std::size_t i = 0; i < batch.size(); ++i) one_case(i);
            return;
        }
#ifdef _OPENMP
        std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic, 8) num_threads(nthreads)
        for (long i = 0; i < static_cast<long>(batch.size()); ++i) {
            try {
                one_case(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
#else
        for (std::size_t i = 0; i < batch.size(); ++i) one_case(i);
#endif
    }

    SweepSummary summarize(bool halted) {
        SweepSummary s;
        s.halted = halted;
        for (const auto& p : ckpt_.per_g) {
            if (p.g < cfg_.g_min || p.g > cfg_.g_max) continue;
            s.cases += p.done;
            s.non_vanishing += p.non_vanishing;
            s.vanishes_over_q += p.vanishes;
            s.inconclusive += p.inconclusive;
            s.max_primes_tried = std::max(s.max_primes_tried, p.max_primes_tried);
        }
        s.complete = !halted && ckpt_.g_current > cfg_.g_max;
        return s;
    }

    const SweepConfig& cfg_;
    Checkpoint ckpt_;
    std::string ckpt_path_;
    std::ofstream out_;
    long committed_shards_ = 0;
};

Checkpoint fresh_checkpoint(const SweepConfig& cfg) {
    Checkpoint c;
    c.ell = cfg.ell;
    c.g_min = cfg.g_min;
    c.start_prime = cfg.start_prime;
    c.max_primes = cfg.max_primes;
    c.shard_size = cfg.shard_size;
    c.include_timing = cfg.include_timing;
    c.g_current = cfg.g_min;
    return c;
}

}  // namespace

SweepSummary run_sweep(const SweepConfig& cfg) {
    validate_config(cfg);
    std::string ckpt_path = cfg.effective_checkpoint_path();
    Checkpoint ckpt;
    if (fs::exists(ckpt_path)) {
        ckpt = load_checkpoint(ckpt_path);
        check_consistency(ckpt, cfg);
        if (!cfg.quiet && (ckpt.next_index > 0 || ckpt.g_current > cfg.g_min))
            std::cerr << "[verify] continuing from checkpoint: g=" << ckpt.g_current
                      << " index=" << ckpt.next_index << "\n";
    } else {
        ckpt = fresh_checkpoint(cfg);
    }
    return SweepRunner(cfg, std::move(ckpt)).run();
}

SweepSummary resume_sweep(const SweepConfig& cfg) {
    validate_config(cfg);
    if (!fs::exists(cfg.effective_checkpoint_path()))
        throw CheckpointError("no checkpoint at " + cfg.effective_checkpoint_path());
    return run_sweep(cfg);
}

}  // namespace strata
