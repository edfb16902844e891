#pragma once

// Command layer shared by the CLI, the golden cases and the acceptance run.
// Every command returns a JSON report (config echo, verdicts, timing) and a
// deterministic text rendering.

#include "pretor/stable.hpp"

#include "json.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace pretor::app {

using torsion::ClassSpec;

inline constexpr const char* kVersion = "1.0.0";

/// Bad flags or inputs; the CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string backend = "typea";  // typea | abgrp | chaincx
    int n = 0;  // 0: command default (2; repros pick their own)
    Scalar p = 2;
    std::vector<Scalar> primes{2, 3, 5};
    Scalar order = 360;
    int lo = 0;
    int hi = 5;
    std::size_t dim_cap = 3;
    int samples = 20;
    std::size_t max_summands = 0;  // 0: backend default
    std::uint64_t seed = 1;
    int jobs = 1;

    /// Throws UsageError outside the safe limits.
    void validate() const;
    nlohmann::json to_json() const;
    static RunConfig from_json(const nlohmann::json& j);
};

struct Backend {
    std::unique_ptr<Category> cat;
    std::vector<ObjectExpr> universe;
};
Backend make_backend(const RunConfig& cfg);

/// Stack notation for type A ("1+12"), backend names otherwise.
std::string label(const Category& c, const ObjectExpr& x);
std::string label(const Category& c, const ClassSpec& s);
/// Throws UsageError on unknown names.
ClassSpec parse_members(const Category& c, const std::string& text);

/// "0 -> 2 = 2", "12 = 12 -beta-> 1"; `name_map` may label a morphism.
std::string render_sequence(const Category& c, const pt::ZExactSeq& s,
                            const std::function<std::string(const Morphism&)>& name_map = {});

struct Result {
    nlohmann::json report;
    std::string text;
    int status = 0;  // 0 pass, 1 a check failed
};

Result cmd_enumerate(const RunConfig& cfg, bool sweep, std::string* dot = nullptr);
Result cmd_check(const RunConfig& cfg, const std::string& t, const std::string& f);
Result cmd_comparable(const RunConfig& cfg, const std::string& t1, const std::string& t2);
Result cmd_serre_extend(const RunConfig& cfg, const std::string& u, const std::string& s);
Result cmd_stable(const RunConfig& cfg, const std::string& t, const std::string& f);
/// Throws UsageError for an unknown name or bad indices.
Result cmd_repro(const std::string& name, const RunConfig& cfg, int i, int j);
std::vector<std::string> repro_names();

/// Seeded stability function with ell > 0 on `simples` simples.
torsion::StabilityFunction random_stability(std::mt19937_64& rng, std::size_t simples);

/// Runs `fn(k)` for k < count on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

std::string sha256_hex(const std::string& data);
/// SHA-256 of the report dumped with sorted keys, "timing" removed.
std::string digest(const nlohmann::json& report);

struct GoldenCase {
    std::string id;
    nlohmann::json cfg;
    std::string digest;
    std::string anchor;
};

struct CaseResult {
    std::string id;
    bool pass = false;
    std::string detail;
    Result result;
};

std::string default_data_dir();
/// Throws std::runtime_error if data/cases.json is missing or malformed.
std::vector<GoldenCase> list_cases(const std::string& data_dir = default_data_dir());
/// Runs a case: digest match, plus byte-for-byte text match against
/// data/golden/<golden> when the cfg names one.  Throws std::out_of_range for
/// an unknown id.
CaseResult run_case(const std::string& id, const std::string& data_dir = default_data_dir());
/// Runs a case cfg ({"command": ..., ...}).
Result run_cfg(const nlohmann::json& cfg);

}  // namespace pretor::app
