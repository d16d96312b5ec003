#include "sst/experiment.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "sst/errors.hpp"

namespace sst {

TrialRecord run_trial(const SourceSpec& spec, const Shaper& shaper, Seed seed,
                      std::uint64_t trial) {
    const Sequence s = sample(spec, seed, trial);
    const ShapingOutcome outcome = shape_and_measure(s, shaper);

    const std::optional<Sequence> recovered = shaper.inverse(outcome.output);
    if (!recovered || *recovered != s) {
        throw RoundTripError(trial);
    }
    return TrialRecord{
        trial,
        outcome.input_info.bits,
        outcome.output_info.bits,
        outcome.input_info.bits - outcome.output_info.bits,
        outcome.success,
        true,
    };
}

ExperimentSummary summarize(std::span<const TrialRecord> records, const SourceSpec& spec,
                            const ShaperConfig& cfg, Seed seed) {
    ExperimentSummary summary;
    summary.trials = records.size();
    summary.spec = spec;
    summary.strategy = cfg.strategy;
    summary.order = cfg.order;
    summary.seed = seed;
    if (records.empty()) {
        return summary;
    }

    std::vector<double> infc(records.size());
    std::vector<double> tinfc(records.size());
    std::vector<double> dife(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        infc[i] = records[i].infc;
        tinfc[i] = records[i].tinfc;
        dife[i] = records[i].dife;
        summary.cs2 += records[i].success ? 1 : 0;
    }
    const double n = static_cast<double>(records.size());
    summary.medinfc = pairwise_sum(infc) / n;
    summary.medtinfc = pairwise_sum(tinfc) / n;
    summary.mdife = pairwise_sum(dife) / n;
    summary.pcs = 100.0 * static_cast<double>(summary.cs2) / n;
    return summary;
}

ExperimentResult run_experiment(const SourceSpec& spec, const ShaperConfig& cfg,
                                std::uint64_t trials, Seed seed, unsigned workers) {
    spec.validate();
    if (trials < 1) {
        throw DomainError("trials must be at least 1");
    }
    ShaperConfig local = cfg;
    local.ns = spec.ns;
    const auto shaper = make_shaper(local, spec.length);

    if (workers == 0) {
        workers = std::max(1U, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

    std::vector<TrialRecord> records(trials);
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::uint64_t first_error_trial = trials;

    auto work = [&] {
        for (;;) {
            const std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= trials || failed.load(std::memory_order_relaxed)) {
                return;
            }
            try {
                records[i] = run_trial(spec, *shaper, seed, i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (i < first_error_trial) {
                    first_error_trial = i;
                    first_error = std::current_exception();
                }
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }

    ExperimentResult result;
    result.summary = summarize(records, spec, local, seed);
    result.records = std::move(records);
    return result;
}

namespace {

constexpr std::array<Table1Row, 4> kTable1{{
    {30, 400, 0.5, 88.0, 8.0},
    {40, 400, 0.5, 89.0, 10.4},
    {50, 400, 0.5, 92.0, 13.0},
    {60, 400, 0.5, 95.0, 15.2},
}};

}  // namespace

std::span<const Table1Row> table1_reference() noexcept { return kTable1; }

std::vector<ExperimentSummary> sweep_table1(const ShaperConfig& cfg, std::uint64_t trials,
                                            Seed seed, unsigned workers) {
    std::vector<ExperimentSummary> out;
    out.reserve(kTable1.size());
    for (const Table1Row& row : kTable1) {
        const SourceSpec spec{row.ns, row.length, row.pmax};
        out.push_back(run_experiment(spec, cfg, trials, seed, workers).summary);
    }
    return out;
}

std::string render_table1_comparison(std::span<const ExperimentSummary> summaries) {
    std::string out;
    char line[256];
    std::snprintf(line, sizeof line, "%4s %5s %5s | %9s %9s | %12s %12s\n", "ns", "N", "pmax",
                  "pcs", "ref P_s", "mdife bits", "ref gain");
    out += line;
    out += std::string(72, '-') + '\n';
    for (const ExperimentSummary& s : summaries) {
        const auto ref = std::find_if(kTable1.begin(), kTable1.end(), [&](const Table1Row& r) {
            return r.ns == s.spec.ns && r.length == s.spec.length && r.pmax == s.spec.pmax;
        });
        if (ref != kTable1.end()) {
            std::snprintf(line, sizeof line, "%4zu %5zu %5.2f | %8.1f%% %8.1f%% | %12.3f %12.1f\n",
                          s.spec.ns, s.spec.length, s.spec.pmax, s.pcs, ref->reference_pcs, s.mdife,
                          ref->reference_gain_bits);
        } else {
            std::snprintf(line, sizeof line, "%4zu %5zu %5.2f | %8.1f%% %9s | %12.3f %12s\n",
                          s.spec.ns, s.spec.length, s.spec.pmax, s.pcs, "-", s.mdife, "-");
        }
        out += line;
    }
    return out;
}

}  // namespace sst
