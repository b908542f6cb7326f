#include "mclab/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mclab/analytic.hpp"
#include "mclab/bertrand.hpp"
#include "mclab/discrete.hpp"
#include "mclab/errors.hpp"
#include "mclab/geometry.hpp"
#include "mclab/rng.hpp"
#include "mclab/samplers.hpp"
#include "mclab/stats.hpp"
#include "mclab/stick.hpp"
#include "mclab/version.hpp"

namespace mclab::runner {

namespace {

constexpr double kPi = std::numbers::pi;

enum class Kind {
    sampler,
    chord,
    stick_cut,
    angle_line,
    big_angle,
    two_boys,
    prisoners,
};

struct MethodEntry {
    std::string name;
    int ordinal = 0;  // stable substream id, independent of selection order
    Kind kind = Kind::sampler;
    samplers::SamplerSpec spec{};
    bertrand::ChordMethod chord_method = bertrand::ChordMethod::endpoints;
    stick::Mode stick_mode = stick::Mode::parallel;
    discrete::TwoBoysProtocol protocol = discrete::TwoBoysProtocol::filter_families;
    discrete::PrisonerStrategy strategy = discrete::PrisonerStrategy::stay;
    std::optional<double> analytic = std::nullopt;
};

samplers::SamplerSpec sampler_spec(samplers::Method m, double b = 1.0,
                                   samplers::MVariant v = samplers::MVariant::area_uniform) {
    samplers::SamplerSpec spec;
    spec.method = m;
    spec.aspect_b = b;
    spec.m_variant = v;
    return spec;
}

const std::vector<MethodEntry>& registry() {
    using samplers::Method;
    using samplers::MVariant;
    static const std::vector<MethodEntry> table = [] {
        std::vector<MethodEntry> r;
        int id = 0;
        auto add = [&](MethodEntry e) {
            e.ordinal = id++;
            r.push_back(std::move(e));
        };

        add({.name = "generated", .kind = Kind::sampler,
             .spec = sampler_spec(Method::generated), .analytic = 0.75});
        add({.name = "polar-uniform", .kind = Kind::sampler,
             .spec = sampler_spec(Method::polar_uniform)});
        add({.name = "half-normal", .kind = Kind::sampler,
             .spec = sampler_spec(Method::half_normal)});
        add({.name = "ellipse-1:1", .kind = Kind::sampler,
             .spec = sampler_spec(Method::ellipse, 1.0)});
        add({.name = "ellipse-1:2", .kind = Kind::sampler,
             .spec = sampler_spec(Method::ellipse, 2.0)});
        add({.name = "ellipse-1:3", .kind = Kind::sampler,
             .spec = sampler_spec(Method::ellipse, 3.0)});
        add({.name = "rectangle-1:1", .kind = Kind::sampler,
             .spec = sampler_spec(Method::rectangle, 1.0)});
        add({.name = "rectangle-1:2", .kind = Kind::sampler,
             .spec = sampler_spec(Method::rectangle, 2.0)});
        add({.name = "rectangle-1:3", .kind = Kind::sampler,
             .spec = sampler_spec(Method::rectangle, 3.0)});
        add({.name = "fractal", .kind = Kind::sampler,
             .spec = sampler_spec(Method::fractal)});
        add({.name = "quotient", .kind = Kind::sampler,
             .spec = sampler_spec(Method::quotient)});
        add({.name = "l-method", .kind = Kind::sampler,
             .spec = sampler_spec(Method::l_method),
             .analytic = analytic::analytic_obtuse(analytic::ObtuseModel::l_method)});
        add({.name = "m-method", .kind = Kind::sampler,
             .spec = sampler_spec(Method::m_method),
             .analytic = analytic::analytic_obtuse(analytic::ObtuseModel::m_method)});
        add({.name = "m-method-paper", .kind = Kind::sampler,
             .spec = sampler_spec(Method::m_method, 1.0, MVariant::paper)});

        add({.name = "bertrand-endpoints", .kind = Kind::chord,
             .chord_method = bertrand::ChordMethod::endpoints,
             .analytic = 1.0 / 3.0});
        add({.name = "bertrand-radius-point", .kind = Kind::chord,
             .chord_method = bertrand::ChordMethod::radius_point,
             .analytic = 0.5});
        add({.name = "bertrand-disk-point", .kind = Kind::chord,
             .chord_method = bertrand::ChordMethod::disk_point,
             .analytic = 0.25});

        add({.name = "stick-parallel", .kind = Kind::stick_cut,
             .stick_mode = stick::Mode::parallel,
             .analytic = stick::analytic_probability(stick::Mode::parallel)});
        add({.name = "stick-sequential-random", .kind = Kind::stick_cut,
             .stick_mode = stick::Mode::sequential_random,
             .analytic = stick::analytic_probability(stick::Mode::sequential_random)});
        add({.name = "stick-sequential-larger", .kind = Kind::stick_cut,
             .stick_mode = stick::Mode::sequential_larger,
             .analytic = stick::analytic_probability(stick::Mode::sequential_larger)});
        add({.name = "stick-sequential-smaller", .kind = Kind::stick_cut,
             .stick_mode = stick::Mode::sequential_smaller,
             .analytic = stick::analytic_probability(stick::Mode::sequential_smaller)});

        add({.name = "angle-line", .kind = Kind::angle_line, .analytic = 0.75});
        add({.name = "big-angle", .kind = Kind::big_angle, .analytic = 0.75});

        add({.name = "two-boys-filter", .kind = Kind::two_boys,
             .protocol = discrete::TwoBoysProtocol::filter_families,
             .analytic = discrete::exact_value(discrete::TwoBoysProtocol::filter_families).value()});
        add({.name = "two-boys-informant", .kind = Kind::two_boys,
             .protocol = discrete::TwoBoysProtocol::informant,
             .analytic = discrete::exact_value(discrete::TwoBoysProtocol::informant).value()});
        add({.name = "prisoners-stay", .kind = Kind::prisoners,
             .strategy = discrete::PrisonerStrategy::stay,
             .analytic = discrete::exact_value(discrete::PrisonerStrategy::stay).value()});
        add({.name = "prisoners-switch", .kind = Kind::prisoners,
             .strategy = discrete::PrisonerStrategy::switch_,
             .analytic = discrete::exact_value(discrete::PrisonerStrategy::switch_).value()});
        return r;
    }();
    return table;
}

const MethodEntry& lookup(const std::string& name) {
    for (const MethodEntry& e : registry()) {
        if (e.name == name) return e;
    }
    throw ConfigError("unknown method: " + name);
}

struct ChunkOut {
    std::uint64_t hits = 0;
    std::uint64_t denom = 0;
    bool has_stats = false;
    SummaryStats sdm, mdl, rho, theta;
};

ChunkOut run_chunk(const MethodEntry& entry, const RngStream& method_root,
                   std::uint64_t chunk_index, std::uint64_t begin,
                   std::uint64_t len, std::uint64_t total_trials) {
    RngStream rng = method_root.substream(chunk_index);
    ChunkOut out;
    switch (entry.kind) {
        case Kind::sampler: {
            out.has_stats = true;
            for (std::uint64_t j = 0; j < len; ++j) {
                const samplers::SampleOutcome o =
                    samplers::sample(entry.spec, rng, begin + j, total_trials);
                const SideLengths sl = side_lengths(o.triangle);
                if (classify(sl) == TriangleClass::obtuse) ++out.hits;
                const SideRatios r = ratios(sl);
                out.sdm.accumulate(r.sdm);
                out.mdl.accumulate(r.mdl);
                for (const PolarPoint& p : o.polars()) {
                    out.rho.accumulate(p.rho);
                    out.theta.accumulate(p.theta);
                }
            }
            out.denom = len;
            break;
        }
        case Kind::chord: {
            for (std::uint64_t j = 0; j < len; ++j) {
                if (bertrand::is_long(bertrand::draw_chord(entry.chord_method, rng))) {
                    ++out.hits;
                }
            }
            out.denom = len;
            break;
        }
        case Kind::stick_cut: {
            for (std::uint64_t j = 0; j < len; ++j) {
                stick::StickPieces p;
                switch (entry.stick_mode) {
                    case stick::Mode::parallel:
                        p = stick::cut_parallel(rng);
                        break;
                    case stick::Mode::sequential_random:
                        p = stick::cut_sequential(stick::CutPolicy::random_piece, rng);
                        break;
                    case stick::Mode::sequential_larger:
                        p = stick::cut_sequential(stick::CutPolicy::larger_piece, rng);
                        break;
                    case stick::Mode::sequential_smaller:
                        p = stick::cut_sequential(stick::CutPolicy::smaller_piece, rng);
                        break;
                }
                if (stick::forms_triangle(p)) ++out.hits;
            }
            out.denom = len;
            break;
        }
        case Kind::angle_line: {
            for (std::uint64_t j = 0; j < len; ++j) {
                const double a1 = rng.next_double() * kPi;
                const double a2 = rng.next_double() * kPi;
                if (analytic::angle_line_is_obtuse(a1, a2)) ++out.hits;
            }
            out.denom = len;
            break;
        }
        case Kind::big_angle: {
            for (std::uint64_t j = 0; j < len; ++j) {
                if (analytic::big_angle_is_obtuse(rng.uniform(kPi / 3.0, kPi))) {
                    ++out.hits;
                }
            }
            out.denom = len;
            break;
        }
        case Kind::two_boys: {
            const discrete::TwoBoysBatch b =
                discrete::run_two_boys_batch(entry.protocol, len, rng);
            out.hits = b.hits;
            out.denom = b.kept;
            break;
        }
        case Kind::prisoners: {
            const discrete::PrisonerBatch b = discrete::run_prisoner_batch(len, rng);
            out.hits = entry.strategy == discrete::PrisonerStrategy::stay
                           ? b.stay_wins
                           : b.switch_wins;
            out.denom = len;
            break;
        }
    }
    return out;
}

MetricSummary to_summary(const SummaryStats& s) {
    const SummaryStats::Summary f = s.finalize();
    return {f.mean, f.median, f.min, f.max, f.variance, f.skewness, f.count};
}

ExperimentResult reduce_chunks(const MethodEntry& entry, std::uint64_t trials,
                               std::vector<ChunkOut>&& chunks) {
    ExperimentResult res;
    res.method = entry.name;
    res.trials = trials;
    res.analytic = entry.analytic;

    SummaryStats sdm, mdl, rho, theta;
    bool has_stats = false;
    // Fixed reduction order (by chunk index) keeps reports bit-identical
    // for any worker count.
    for (ChunkOut& c : chunks) {
        res.hits += c.hits;
        res.denom += c.denom;
        if (c.has_stats) {
            has_stats = true;
            sdm.merge_from(c.sdm);
            mdl.merge_from(c.mdl);
            rho.merge_from(c.rho);
            theta.merge_from(c.theta);
        }
    }
    if (res.denom > 0) {
        res.p_hat = static_cast<double>(res.hits) / static_cast<double>(res.denom);
        res.se = std::sqrt(res.p_hat * (1.0 - res.p_hat) /
                           static_cast<double>(res.denom));
    }
    if (has_stats && sdm.count() >= 3) {
        res.stats = SamplerStats{to_summary(sdm), to_summary(mdl),
                                 to_summary(rho), to_summary(theta)};
    }
    return res;
}

ExperimentResult run_method(const MethodEntry& entry, std::uint64_t trials,
                            std::uint64_t seed, int workers) {
    const RngStream method_root =
        RngStream(seed).substream(static_cast<std::uint64_t>(entry.ordinal));
    const std::uint64_t nchunks = (trials + kChunkTrials - 1) / kChunkTrials;
    std::vector<ChunkOut> chunks(nchunks);

    auto chunk_len = [&](std::uint64_t i) {
        const std::uint64_t begin = i * kChunkTrials;
        return std::min(kChunkTrials, trials - begin);
    };

#ifdef MCLAB_HAVE_OPENMP
    if (workers > 1) {
        std::atomic<bool> failed{false};
        std::exception_ptr eptr;
#pragma omp parallel for schedule(dynamic) num_threads(workers)
        for (long long i = 0; i < static_cast<long long>(nchunks); ++i) {
            if (failed.load(std::memory_order_relaxed)) continue;
            try {
                const auto idx = static_cast<std::uint64_t>(i);
                chunks[idx] = run_chunk(entry, method_root, idx,
                                        idx * kChunkTrials, chunk_len(idx),
                                        trials);
            } catch (...) {
#pragma omp critical
                {
                    if (!failed.exchange(true)) eptr = std::current_exception();
                }
            }
        }
        if (failed.load()) std::rethrow_exception(eptr);
        return reduce_chunks(entry, trials, std::move(chunks));
    }
#else
    (void)workers;
#endif
    for (std::uint64_t i = 0; i < nchunks; ++i) {
        chunks[i] = run_chunk(entry, method_root, i, i * kChunkTrials,
                              chunk_len(i), trials);
    }
    return reduce_chunks(entry, trials, std::move(chunks));
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit_csv(const ExperimentReport& report, std::ostream& os) {
    os << "method,metric,mean,median,min,max,variance,skewness\n";
    for (const ExperimentResult& e : report.experiments) {
        os << e.method << ",P," << g17(e.p_hat) << ",,,,,\n";
        if (!e.stats) continue;
        const auto row = [&](const char* metric, const MetricSummary& m) {
            os << e.method << ',' << metric << ',' << g17(m.mean) << ','
               << g17(m.median) << ',' << g17(m.min) << ',' << g17(m.max)
               << ',' << g17(m.variance) << ',' << g17(m.skewness) << '\n';
        };
        row("SdM", e.stats->sdm);
        row("MdL", e.stats->mdl);
        row("rho", e.stats->rho);
        row("theta", e.stats->theta);
    }
}

nlohmann::json summary_json(const MetricSummary& m) {
    return {{"mean", m.mean},         {"median", m.median},
            {"min", m.min},           {"max", m.max},
            {"variance", m.variance}, {"skewness", m.skewness},
            {"count", m.count}};
}

void emit_json(const ExperimentReport& report, std::ostream& os) {
    nlohmann::json j;
    j["version"] = report.version;
    j["seed"] = report.seed;
    j["trials"] = report.trials;
    j["experiments"] = nlohmann::json::array();
    for (const ExperimentResult& e : report.experiments) {
        nlohmann::json je;
        je["method"] = e.method;
        je["trials"] = e.trials;
        je["hits"] = e.hits;
        je["denom"] = e.denom;
        je["p_estimate"] = e.p_hat;
        je["se"] = e.se;
        if (e.analytic) {
            je["analytic"] = *e.analytic;
            je["abs_error"] = std::fabs(e.p_hat - *e.analytic);
        }
        if (e.stats) {
            je["stats"] = {{"SdM", summary_json(e.stats->sdm)},
                           {"MdL", summary_json(e.stats->mdl)},
                           {"rho", summary_json(e.stats->rho)},
                           {"theta", summary_json(e.stats->theta)}};
        }
        j["experiments"].push_back(std::move(je));
    }
    os << j.dump(2) << '\n';
}

void emit_table(const ExperimentReport& report, std::ostream& os) {
    char line[160];
    std::snprintf(line, sizeof line, "# seed=%llu trials=%llu version=%s\n",
                  static_cast<unsigned long long>(report.seed),
                  static_cast<unsigned long long>(report.trials),
                  report.version.c_str());
    os << line;
    std::snprintf(line, sizeof line, "%-24s %10s %10s %10s %10s %10s %10s\n",
                  "method / metric", "mean", "median", "min", "max",
                  "variance", "skewness");
    os << line;
    for (const ExperimentResult& e : report.experiments) {
        if (e.analytic) {
            std::snprintf(line, sizeof line, "%-24s P = %.4f   (analytic %.6f)\n",
                          e.method.c_str(), e.p_hat, *e.analytic);
        } else {
            std::snprintf(line, sizeof line, "%-24s P = %.4f\n",
                          e.method.c_str(), e.p_hat);
        }
        os << line;
        if (!e.stats) continue;
        const auto row = [&](const char* metric, const MetricSummary& m) {
            std::snprintf(line, sizeof line,
                          "  %-22s %10.4f %10.4f %10.4f %10.4f %10.4f %10.4f\n",
                          metric, m.mean, m.median, m.min, m.max, m.variance,
                          m.skewness);
            os << line;
        };
        row("SdM", e.stats->sdm);
        row("MdL", e.stats->mdl);
        row("rho", e.stats->rho);
        row("theta", e.stats->theta);
    }
}

}  // namespace

std::vector<std::string> method_names() {
    std::vector<std::string> names;
    names.reserve(registry().size());
    for (const MethodEntry& e : registry()) names.push_back(e.name);
    return names;
}

bool is_known_method(const std::string& name) {
    for (const MethodEntry& e : registry()) {
        if (e.name == name) return true;
    }
    return false;
}

ExperimentResult run_method_serial(const std::string& name,
                                   std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw ConfigError("trials must be >= 1");
    return run_method(lookup(name), trials, seed, 1);
}

ExperimentResult run_method_parallel(const std::string& name,
                                     std::uint64_t trials, std::uint64_t seed,
                                     int workers) {
    if (trials < 1) throw ConfigError("trials must be >= 1");
    if (workers < 1) throw ConfigError("workers must be >= 1");
    return run_method(lookup(name), trials, seed, workers);
}

ExperimentReport run(const ExperimentConfig& config) {
    if (config.trials < 1) throw ConfigError("trials must be >= 1");
    if (config.workers < 1) throw ConfigError("workers must be >= 1");

    ExperimentReport report;
    report.version = kVersion;
    report.seed = config.seed;
    report.trials = config.trials;
    for (const std::string& name : config.methods) {
        report.experiments.push_back(
            run_method(lookup(name), config.trials, config.seed, config.workers));
    }
    return report;
}

void emit(const ExperimentReport& report, OutputFormat format,
          std::ostream& os) {
    switch (format) {
        case OutputFormat::csv: emit_csv(report, os); break;
        case OutputFormat::json: emit_json(report, os); break;
        case OutputFormat::table: emit_table(report, os); break;
    }
}

std::string emit_string(const ExperimentReport& report, OutputFormat format) {
    std::ostringstream oss;
    emit(report, format, oss);
    return oss.str();
}

}  // namespace mclab::runner
