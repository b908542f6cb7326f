#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mclab::runner {

enum class OutputFormat { csv, json, table };

struct ExperimentConfig {
    std::vector<std::string> methods;  // registry names; see method_names()
    std::uint64_t trials = 175000;
    std::uint64_t seed = 1;
    int workers = 1;
    OutputFormat format = OutputFormat::table;
    std::string output_path;  // empty -> stdout
};

struct MetricSummary {
    double mean = 0, median = 0, min = 0, max = 0, variance = 0, skewness = 0;
    std::uint64_t count = 0;
};

/// The four metric columns of the triangle table: side ratios s/m and m/l
/// plus the recorded vertex polar coordinates.
struct SamplerStats {
    MetricSummary sdm, mdl, rho, theta;
};

struct ExperimentResult {
    std::string method;
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
    std::uint64_t denom = 0;  // = trials except for filtered sample spaces
    double p_hat = 0.0;
    double se = 0.0;  // sqrt(p(1-p)/denom)
    std::optional<double> analytic;
    std::optional<SamplerStats> stats;
};

/// Provenance (seed, trials, version) plus one result per experiment.
/// Deliberately excludes the worker count and any timestamps: the same
/// seed and trials must serialize to the same bytes on any machine.
struct ExperimentReport {
    std::string version;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::vector<ExperimentResult> experiments;
};

/// Trials per work chunk. Substreams are assigned by chunk index, never by
/// worker identity, so reports are independent of the worker count.
inline constexpr std::uint64_t kChunkTrials = 4096;

std::vector<std::string> method_names();
bool is_known_method(const std::string& name);

/// Run every configured experiment. Deterministic given the config;
/// throws ConfigError on unknown methods or zero trials and propagates
/// NonConvergenceError from the samplers.
ExperimentReport run(const ExperimentConfig& config);

/// Single-method entry points. The serial form is the reference
/// implementation; the parallel form partitions chunks across OpenMP
/// threads and must reproduce the serial result exactly.
ExperimentResult run_method_serial(const std::string& name,
                                   std::uint64_t trials, std::uint64_t seed);
ExperimentResult run_method_parallel(const std::string& name,
                                     std::uint64_t trials, std::uint64_t seed,
                                     int workers);

void emit(const ExperimentReport& report, OutputFormat format,
          std::ostream& os);
std::string emit_string(const ExperimentReport& report, OutputFormat format);

}  // namespace mclab::runner
