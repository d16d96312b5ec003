#pragma once

// Monte Carlo driver: repeated sample -> measure -> shape -> measure ->
// compare -> invert, with aggregation in trial-index order.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "sst/shaping.hpp"
#include "sst/source.hpp"

namespace sst {

struct TrialRecord {
    std::uint64_t trial = 0;
    double infc = 0.0;   // N * H0(s)
    double tinfc = 0.0;  // (N+K) * H0(f(s))
    double dife = 0.0;   // infc - tinfc
    bool success = false;
    bool roundtrip_ok = false;

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct ExperimentSummary {
    double medinfc = 0.0;
    double medtinfc = 0.0;
    double mdife = 0.0;
    std::uint64_t cs2 = 0;
    double pcs = 0.0;
    std::uint64_t trials = 0;
    SourceSpec spec;
    Strategy strategy = Strategy::kAdaptiveRank;
    std::size_t order = 1;
    Seed seed;

    friend bool operator==(const ExperimentSummary&, const ExperimentSummary&) = default;
};

struct ExperimentResult {
    ExperimentSummary summary;
    std::vector<TrialRecord> records;
};

/// One trial. Throws RoundTripError if the inverse does not recover the input.
[[nodiscard]] TrialRecord run_trial(const SourceSpec& spec, const Shaper& shaper, Seed seed,
                                    std::uint64_t trial);

/// Aggregates records (already in trial order) into a summary.
[[nodiscard]] ExperimentSummary summarize(std::span<const TrialRecord> records,
                                          const SourceSpec& spec, const ShaperConfig& cfg,
                                          Seed seed);

/// Runs `trials` trials on `workers` threads (0 = hardware concurrency).
/// The result is identical for every worker count.
[[nodiscard]] ExperimentResult run_experiment(const SourceSpec& spec, const ShaperConfig& cfg,
                                              std::uint64_t trials, Seed seed,
                                              unsigned workers = 1);

/// Published reference row: success percentage and mean gain in bits.
struct Table1Row {
    std::size_t ns;
    std::size_t length;
    double pmax;
    double reference_pcs;
    double reference_gain_bits;
};

[[nodiscard]] std::span<const Table1Row> table1_reference() noexcept;

/// One summary per reference row, in row order.
[[nodiscard]] std::vector<ExperimentSummary> sweep_table1(const ShaperConfig& cfg,
                                                          std::uint64_t trials, Seed seed,
                                                          unsigned workers = 1);

/// Text table of measured pcs / mdife next to the reference columns.
[[nodiscard]] std::string render_table1_comparison(std::span<const ExperimentSummary> summaries);

enum class ExportFormat { kCsv, kJson };

[[nodiscard]] ExportFormat parse_export_format(std::string_view name);

/// JSON: one object {"summaries": [...], "records": [...]}.
/// CSV: records to `path`, summaries to `<stem>.summary.csv` next to it.
/// Floats are written with 9 significant digits. Throws std::runtime_error
/// naming the path on I/O failure.
void export_results(std::span<const ExperimentSummary> summaries,
                    std::span<const TrialRecord> records, const std::filesystem::path& path,
                    ExportFormat format);

[[nodiscard]] std::filesystem::path summary_csv_path(const std::filesystem::path& records_path);

struct ImportedResults {
    std::vector<ExperimentSummary> summaries;
    std::vector<TrialRecord> records;
};

[[nodiscard]] ImportedResults import_json(const std::filesystem::path& path);
[[nodiscard]] std::vector<TrialRecord> import_records_csv(const std::filesystem::path& path);
[[nodiscard]] std::vector<ExperimentSummary> import_summaries_csv(
    const std::filesystem::path& path);

/// Rounds to 9 significant digits, the precision used by every export.
[[nodiscard]] double round_sig9(double value);

}  // namespace sst
