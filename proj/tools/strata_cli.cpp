#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "strata/c_series.hpp"
#include "strata/partitions.hpp"
#include "strata/ranges.hpp"
#include "strata/relation_check.hpp"
#include "strata/report.hpp"
#include "strata/siegel_veech.hpp"
#include "strata/sweep.hpp"

namespace {

using strata::json;

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        out.push_back(std::stol(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int exit_code_for(const strata::SweepSummary& s) {
    if (s.halted) return 3;
    if (!s.complete) return 1;
    return s.all_certified() ? 0 : 2;
}

void print_summary(const strata::SweepSummary& s, bool as_json) {
    if (as_json) {
        json j;
        j["cases"] = s.cases;
        j["non_vanishing"] = s.non_vanishing;
        j["vanishes_over_Q"] = s.vanishes_over_q;
        j["inconclusive"] = s.inconclusive;
        j["max_primes_tried"] = s.max_primes_tried;
        j["complete"] = s.complete;
        j["halted"] = s.halted;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "cases            : " << s.cases << "\n"
                  << "non-vanishing    : " << s.non_vanishing << "\n"
                  << "vanishes over Q  : " << s.vanishes_over_q << "\n"
                  << "inconclusive     : " << s.inconclusive << "\n"
                  << "max primes tried : " << s.max_primes_tried << "\n"
                  << (s.halted ? "halted early (testing hook)\n"
                               : (s.complete ? "complete\n" : "incomplete\n"));
    }
}

void add_sweep_options(CLI::App* cmd, strata::SweepConfig& cfg) {
    cmd->add_option("--g-min", cfg.g_min, "smallest genus to sweep")->capture_default_str();
    cmd->add_option("--g-max", cfg.g_max, "largest genus to sweep")->capture_default_str();
    cmd->add_option("--ell", cfg.ell, "differential order ell")->capture_default_str();
    cmd->add_option("--start-prime", cfg.start_prime, "first prime for the modular check")
        ->capture_default_str();
    cmd->add_option("--max-primes", cfg.max_primes,
                    "zero residues tolerated before computing over Q")
        ->capture_default_str();
    cmd->add_option("--workers", cfg.workers, "worker threads (0 = all cores, 1 = serial)")
        ->capture_default_str();
    cmd->add_option("--output", cfg.output_path, "JSON-lines output file")->capture_default_str();
    cmd->add_option("--checkpoint", cfg.checkpoint_path,
                    "checkpoint file (default: <output>.checkpoint.json)");
    cmd->add_option("--shard-size", cfg.shard_size, "partitions per commit unit")
        ->capture_default_str();
    cmd->add_flag("--no-timing", [&cfg](std::int64_t) { cfg.include_timing = false; },
                  "omit elapsed_us from records (byte-reproducible output)");
    cmd->add_flag("--serial", cfg.force_serial, "force the serial reference engine");
    cmd->add_option("--halt-after-shards", cfg.halt_after_shards)->group("");  // testing hook
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strata: relation certificates and range calculators for strata of differentials"};
    app.set_config("--config", "", "read options from an INI file (command-line flags win)");
    app.require_subcommand(1);

    bool as_json = false;
    bool quiet = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");
    app.add_flag("--quiet", quiet, "suppress progress messages");

    // ---- verify / resume ----
    strata::SweepConfig sweep_cfg;
    CLI::App* verify = app.add_subcommand(
        "verify", "sweep all positive partitions of ell(2g-2) for a genus range");
    add_sweep_options(verify, sweep_cfg);
    CLI::App* resume = app.add_subcommand("resume", "continue an interrupted verify run");
    strata::SweepConfig resume_cfg;
    add_sweep_options(resume, resume_cfg);

    // ---- check ----
    CLI::App* check = app.add_subcommand("check", "check one signature");
    std::string check_mu;
    int check_ell = 1;
    bool check_rational = false;
    std::uint32_t check_start_prime = 10007;
    int check_max_primes = 8;
    check->add_option("--mu", check_mu, "signature, e.g. \"2\" or \"1^6\" or \"-1^3,1^7\"")
        ->required();
    check->add_option("--ell", check_ell, "differential order")->capture_default_str();
    check->add_flag("--rational", check_rational, "compute the exact coefficient over Q");
    check->add_option("--start-prime", check_start_prime)->capture_default_str();
    check->add_option("--max-primes", check_max_primes)->capture_default_str();

    // ---- ranges ----
    CLI::App* ranges = app.add_subcommand("ranges", "evaluate all bound formulas for a signature");
    std::string ranges_mu;
    int ranges_ell = 1;
    long ranges_extra_ones = 0;
    bool ranges_check = false;
    ranges->add_option("--mu", ranges_mu, "signature")->required();
    ranges->add_option("--ell", ranges_ell)->capture_default_str();
    ranges->add_option("--specify-ones", ranges_extra_ones,
                       "treat this many simple zeros as specified parts")
        ->capture_default_str();
    ranges->add_flag("--check", ranges_check,
                     "also run the relation check (enables the presentation line)");

    // ---- sv ----
    CLI::App* sv = app.add_subcommand("sv", "Siegel-Veech: hyperelliptic lift and varying test");
    std::string sv_nu, sv_k, sv_l;
    sv->add_option("--nu", sv_nu, "genus-0 quadratic signature, raw entries (sum -4)");
    sv->add_option("--odd-k", sv_k, "comma list of odd k_i > 0 (each contributes the pair k,k)");
    sv->add_option("--even-l", sv_l, "comma list of l_j > 0 (each contributes the entry 2l)");

    // ---- count-partitions ----
    CLI::App* countp = app.add_subcommand("count-partitions", "p(total), optionally listing them");
    long countp_total = 0;
    bool countp_list = false;
    countp->add_option("total", countp_total, "positive integer")->required();
    countp->add_flag("--list", countp_list, "stream the partitions, one per line");

    // ---- d-count ----
    CLI::App* dcount = app.add_subcommand(
        "d-count", "count kappa/psi/eta monomials (= eta-decorated boundary strata)");
    long dc_k = 0;
    long dc_i = -1;
    long dc_max_i = -1;
    long dc_tuples = -1;
    dcount->add_option("--k", dc_k, "number of psi generators")->required();
    dcount->add_option("--i", dc_i, "single degree-doubled index i (d(i) is 0 for odd i)");
    dcount->add_option("--max-i", dc_max_i, "print the table d(0)..d(max_i)");
    dcount->add_option("--tuples", dc_tuples, "enumerate decorated tuples at this codimension");

    for (CLI::App* sub : {verify, resume, check, ranges, sv, countp, dcount}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify || *resume) {
            strata::SweepConfig& cfg = *verify ? sweep_cfg : resume_cfg;
            cfg.quiet = quiet;
            strata::SweepSummary s =
                *verify ? strata::run_sweep(cfg) : strata::resume_sweep(cfg);
            print_summary(s, as_json);
            return exit_code_for(s);
        }

        if (*check) {
            strata::StratumSignature sig = strata::StratumSignature::parse(check_mu, check_ell);
            strata::CheckMode mode =
                check_rational ? strata::CheckMode::rational()
                               : strata::CheckMode::modular(check_start_prime, check_max_primes);
            strata::VerificationRecord rec = strata::check_relation(sig, mode);
            if (as_json)
                std::cout << strata::record_to_json(rec).dump() << "\n";
            else
                std::cout << strata::record_to_text(rec);
            return rec.status == strata::CheckStatus::non_vanishing ? 0 : 2;
        }

        if (*ranges) {
            strata::StratumSignature sig = strata::StratumSignature::parse(ranges_mu, ranges_ell);
            std::optional<strata::CheckStatus> status;
            if (ranges_check) status = strata::check_relation(sig, strata::CheckMode::modular()).status;
            strata::RangeReport rep = strata::build_range_report(sig, ranges_extra_ones, status);
            if (as_json)
                std::cout << strata::range_report_to_json(rep).dump() << "\n";
            else
                std::cout << strata::range_report_to_text(rep);
            return 0;
        }

        if (*sv) {
            if (!sv_nu.empty() == !(sv_k.empty() && sv_l.empty())) {
                std::cerr << "sv: give either --nu or --odd-k/--even-l\n";
                return 1;
            }
            if (!sv_nu.empty()) {
                strata::QuadraticSignature nu =
                    strata::QuadraticSignature::from_entries(parse_long_list(sv_nu));
                if (as_json)
                    std::cout << strata::lift_to_json(nu).dump() << "\n";
                else
                    std::cout << strata::lift_to_text(nu);
            } else {
                strata::VaryingReport rep =
                    strata::varying_check(parse_long_list(sv_k), parse_long_list(sv_l));
                if (as_json)
                    std::cout << strata::varying_report_to_json(rep).dump() << "\n";
                else
                    std::cout << strata::varying_report_to_text(rep);
            }
            return 0;
        }

        if (*countp) {
            if (countp_list) {
                strata::PartitionIterator it(countp_total);
                do {
                    const auto& parts = it.value();
                    for (std::size_t i = 0; i < parts.size(); ++i)
                        std::cout << (i ? "," : "") << parts[i];
                    std::cout << "\n";
                } while (it.next());
            }
            mpz_class count = strata::partition_count(countp_total);
            if (as_json) {
                json j;
                j["total"] = countp_total;
                j["count"] = count.get_str();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "p(" << countp_total << ") = " << count.get_str() << "\n";
            }
            return 0;
        }

        if (*dcount) {
            json j;
            j["k"] = dc_k;
            if (dc_i >= 0) {
                mpz_class d = strata::decorated_monomial_count(dc_k, dc_i);
                if (as_json) {
                    j["i"] = dc_i;
                    j["d"] = d.get_str();
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "d(" << dc_i << ") = " << d.get_str() << "  [k=" << dc_k << "]\n";
                }
            }
            if (dc_max_i >= 0) {
                json table = json::array();
                for (long i = 0; i <= dc_max_i; ++i) {
                    mpz_class d = strata::decorated_monomial_count(dc_k, i);
                    if (as_json)
                        table.push_back(d.get_str());
                    else
                        std::cout << "d(" << i << ") = " << d.get_str() << "\n";
                }
                if (as_json) {
                    j["table"] = table;
                    std::cout << j.dump() << "\n";
                }
            }
            if (dc_tuples >= 0) {
                auto tuples = strata::decorated_strata_enumerate(dc_k, dc_tuples);
                if (as_json) {
                    json arr = json::array();
                    for (const auto& t : tuples)
                        arr.push_back(json{{"a", t.a}, {"b", t.b}, {"e", t.e}});
                    j["codim"] = dc_tuples;
                    j["tuples"] = arr;
                    std::cout << j.dump() << "\n";
                } else {
                    for (const auto& t : tuples) {
                        std::cout << "a=(";
                        for (std::size_t i = 0; i < t.a.size(); ++i)
                            std::cout << (i ? "," : "") << t.a[i];
                        std::cout << ") b=(";
                        for (std::size_t i = 0; i < t.b.size(); ++i)
                            std::cout << (i ? "," : "") << t.b[i];
                        std::cout << ") e=" << t.e << "\n";
                    }
                    std::cout << tuples.size() << " tuples at codimension " << dc_tuples << "\n";
                }
            }
            if (dc_i < 0 && dc_max_i < 0 && dc_tuples < 0) {
                std::cerr << "d-count: give --i, --max-i or --tuples\n";
                return 1;
            }
            return 0;
        }
    } catch (const strata::CheckpointError& e) {
        std::cerr << "checkpoint error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
