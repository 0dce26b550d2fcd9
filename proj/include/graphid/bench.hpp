#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphid/graph.hpp"

namespace graphid {

struct BenchSetting {
    std::size_t vertices;
    std::size_t edges;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
};

// Averages are wall-clock milliseconds over the trials; a warm-up pair
// runs first and is excluded. hash_avg_ms times hashing one graph,
// hash_eq_avg_ms times the full equality method (hash both graphs and
// compare digests), cmp_avg_ms times a single digest comparison.
struct BenchRow {
    BenchSetting setting;
    double ullmann_avg_ms = 0.0;
    double hash_avg_ms = 0.0;
    double hash_eq_avg_ms = 0.0;
    double cmp_avg_ms = 0.0;
    std::size_t hash_agreements = 0;     // pairs whose digests matched
    std::size_t ullmann_agreements = 0;  // pairs Ullmann recognized
    std::optional<std::string> error;
};

struct BenchReport {
    std::vector<BenchRow> rows;
};

// For each setting: draw a random directed unlabeled graph, scramble it,
// and time Ullmann comparison, single-graph hashing, the hash equality
// method, and digest comparison on the pair. Trial seeds derive from the
// setting seed, so reports are reproducible apart from the timings.
BenchReport run_benchmark(std::span<const BenchSetting> settings);

// Delimited text table:
// vertices,edges,trials,ullmann_avg_ms,hash_avg_ms,hash_eq_avg_ms,cmp_avg_ms
// with timings to three fractional digits. A row that failed is emitted
// as a '#'-prefixed line carrying its error instead of silently vanishing.
std::string format_report(const BenchReport& report);

// Per-comparison costs in milliseconds, as produced by run_benchmark.
struct TippingInput {
    double ullmann_ms;
    double hash_ms;
    double cmp_ms;
};

// Smallest library size N >= 1 at which identifying a graph against a
// library of N digests beats N/2 expected pairwise Ullmann comparisons:
//   ullmann_ms * N / 2  >  log2(N) * cmp_ms + hash_ms   (strict)
// Found by bisection over [1, 2^40]; nullopt when no N in range crosses.
std::optional<std::uint64_t> tipping_point(const TippingInput& t);

struct StressEntry {
    std::size_t n;
    double hash_ms = 0.0;
    bool codes_equal = false;  // all structural vertex codes agreed
    bool timed_out = false;
};

// Hashes the complete directed graph on each n, checking that every
// vertex receives the same structural code. Small inputs are repeated
// and averaged so the timings are stable enough to compare. When a
// budget is given, an entry that exceeds it is annotated and the
// remaining sizes are skipped.
std::vector<StressEntry> symmetric_stress(std::span<const std::size_t> n_values,
                                          std::optional<double> budget_ms = std::nullopt);

}  // namespace graphid
