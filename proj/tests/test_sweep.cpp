#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "strata/partitions.hpp"
#include "strata/report.hpp"
#include "strata/sweep.hpp"

using namespace strata;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("strata-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SweepConfig base_config(const TempDir& dir, const std::string& tag) {
    SweepConfig cfg;
    cfg.g_min = 2;
    cfg.g_max = 8;
    cfg.output_path = dir.file(tag + ".jsonl");
    cfg.checkpoint_path = dir.file(tag + ".ckpt.json");
    cfg.include_timing = false;
    cfg.quiet = true;
    cfg.shard_size = 16;
    return cfg;
}

}  // namespace

TEST_CASE("two-case sweep at g=2") {
    TempDir dir;
    SweepConfig cfg = base_config(dir, "g2");
    cfg.g_max = 2;
    SweepSummary s = run_sweep(cfg);
    CHECK(s.cases == 2);
    CHECK(s.non_vanishing == 2);
    CHECK(s.complete);
    CHECK(s.all_certified());

    std::string body = slurp(cfg.output_path);
    std::istringstream lines(body);
    std::string line;
    REQUIRE(std::getline(lines, line));
    json header = json::parse(line);
    CHECK(header.at("schema") == "strata.verify/1");
    CHECK(header.at("order_version") == kOrderVersion);
    std::vector<std::string> mus;
    while (std::getline(lines, line)) mus.push_back(json::parse(line).at("mu"));
    CHECK(mus == std::vector<std::string>{"2", "1^2"});
}

TEST_CASE("case counts follow the partition numbers") {
    TempDir dir;
    SweepConfig cfg = base_config(dir, "counts");
    cfg.g_max = 6;
    SweepSummary s = run_sweep(cfg);
    long expected = 0;
    for (long g = 2; g <= 6; ++g) expected += partition_count(2 * g - 2).get_si();
    CHECK(s.cases == expected);
    CHECK(s.non_vanishing == expected);
}

TEST_CASE("worker count does not change a single byte") {
    TempDir dir;
    SweepConfig serial = base_config(dir, "serial");
    serial.force_serial = true;
    run_sweep(serial);

    SweepConfig omp = base_config(dir, "omp");
    omp.workers = 3;
    run_sweep(omp);

    SweepConfig one = base_config(dir, "one");
    one.workers = 1;
    run_sweep(one);

    CHECK(slurp(serial.output_path) == slurp(omp.output_path));
    CHECK(slurp(serial.output_path) == slurp(one.output_path));
}

TEST_CASE("halt, torn tail, resume: byte-identical to an uninterrupted run") {
    TempDir dir;
    SweepConfig full = base_config(dir, "full");
    SweepSummary ref = run_sweep(full);

    SweepConfig broken = base_config(dir, "broken");
    broken.halt_after_shards = 5;
    SweepSummary halted = run_sweep(broken);
    CHECK(halted.halted);
    CHECK_FALSE(halted.complete);

    {
        // simulate a write torn mid-record by a crash
        std::ofstream out(broken.output_path, std::ios::binary | std::ios::app);
        out << "{\"mu\":\"gar";
    }

    SweepConfig resume_cfg = broken;
    resume_cfg.halt_after_shards = -1;
    SweepSummary resumed = resume_sweep(resume_cfg);
    CHECK(resumed.complete);
    CHECK(resumed.cases == ref.cases);
    CHECK(resumed.non_vanishing == ref.non_vanishing);
    CHECK(resumed.max_primes_tried == ref.max_primes_tried);
    CHECK(slurp(broken.output_path) == slurp(full.output_path));
}

TEST_CASE("repeated halts still converge to the same file") {
    TempDir dir;
    SweepConfig full = base_config(dir, "full2");
    full.g_max = 6;
    run_sweep(full);

    SweepConfig steps = base_config(dir, "steps");
    steps.g_max = 6;
    steps.halt_after_shards = 1;
    for (int round = 0; round < 50; ++round) {
        SweepSummary s = run_sweep(steps);
        if (!s.halted) break;
    }
    CHECK(slurp(steps.output_path) == slurp(full.output_path));
}

TEST_CASE("raising g_max extends a finished run") {
    TempDir dir;
    SweepConfig small = base_config(dir, "ext");
    small.g_max = 4;
    run_sweep(small);

    SweepConfig bigger = small;
    bigger.g_max = 6;
    SweepSummary s = run_sweep(bigger);
    CHECK(s.complete);

    SweepConfig direct = base_config(dir, "direct");
    direct.g_max = 6;
    run_sweep(direct);
    CHECK(slurp(bigger.output_path) == slurp(direct.output_path));
}

TEST_CASE("resume refuses missing or damaged checkpoints") {
    TempDir dir;
    SweepConfig cfg = base_config(dir, "missing");
    CHECK_THROWS_AS(resume_sweep(cfg), CheckpointError);

    // complete a run, then corrupt the checkpoint file
    run_sweep(cfg);
    {
        std::ofstream out(cfg.checkpoint_path, std::ios::binary | std::ios::trunc);
        out << "{not json";
    }
    CHECK_THROWS_AS(resume_sweep(cfg), CheckpointError);
}

TEST_CASE("checkpoints from another enumeration order are rejected") {
    TempDir dir;
    SweepConfig cfg = base_config(dir, "order");
    cfg.g_max = 3;
    run_sweep(cfg);

    json j = json::parse(slurp(cfg.checkpoint_path));
    j["order_version"] = "something-else";
    std::ofstream(cfg.checkpoint_path, std::ios::binary | std::ios::trunc) << j.dump();
    CHECK_THROWS_AS(run_sweep(cfg), CheckpointError);
}

TEST_CASE("config drift is rejected") {
    TempDir dir;
    SweepConfig cfg = base_config(dir, "drift");
    cfg.g_max = 3;
    run_sweep(cfg);

    SweepConfig changed = cfg;
    changed.shard_size = 8;
    CHECK_THROWS_AS(run_sweep(changed), CheckpointError);

    SweepConfig timing = cfg;
    timing.include_timing = true;
    CHECK_THROWS_AS(run_sweep(timing), CheckpointError);

    SweepConfig shrunk = cfg;
    shrunk.g_max = 2;  // the checkpoint already covers g = 3
    CHECK_THROWS_AS(run_sweep(shrunk), CheckpointError);
}

TEST_CASE("output shorter than the committed mark is refused") {
    TempDir dir;
    SweepConfig cfg = base_config(dir, "short");
    cfg.g_max = 4;
    cfg.halt_after_shards = 2;
    run_sweep(cfg);
    fs::resize_file(cfg.output_path, 3);
    SweepConfig resume_cfg = cfg;
    resume_cfg.halt_after_shards = -1;
    CHECK_THROWS_AS(resume_sweep(resume_cfg), CheckpointError);
}

TEST_CASE("emitted records replay to the same status") {
    TempDir dir;
    SweepConfig cfg = base_config(dir, "replay");
    cfg.g_max = 5;
    run_sweep(cfg);

    std::istringstream lines(slurp(cfg.output_path));
    std::string line;
    std::getline(lines, line);  // header
    int replayed = 0;
    while (std::getline(lines, line)) {
        json j = json::parse(line);
        StratumSignature sig =
            StratumSignature::parse(j.at("mu").get<std::string>(), j.at("ell").get<int>());
        VerificationRecord rec = check_relation(sig, CheckMode::modular());
        CHECK(status_name(rec.status) == j.at("status").get<std::string>());
        CHECK(rec.target_degree == j.at("a").get<int>());
        ++replayed;
    }
    CHECK(replayed == 2 + 5 + 11 + 22);
}
