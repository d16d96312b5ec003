// sst: command-line front end for the shaping library.
//
// Exit codes: 0 success, 2 invalid input, 3 not in image, 4 round-trip failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sst/errors.hpp"
#include "sst/experiment.hpp"
#include "sst/oracle.hpp"
#include "sst/sequence_io.hpp"
#include "sst/shaping.hpp"
#include "sst/source.hpp"

namespace {

constexpr int kExitInvalidInput = 2;
constexpr int kExitNotInImage = 3;
constexpr int kExitRoundTrip = 4;

void print_summary(const sst::ExperimentSummary& s) {
    std::printf("ns=%zu N=%zu pmax=%g strategy=%s K=%zu seed=%llu trials=%llu\n", s.spec.ns,
                s.spec.length, s.spec.pmax, std::string(sst::to_string(s.strategy)).c_str(),
                s.order, static_cast<unsigned long long>(s.seed.master),
                static_cast<unsigned long long>(s.trials));
    std::printf("mean N*H0(s) of the generated sequences:        medinfc  = %.9g\n", s.medinfc);
    std::printf("mean (N+K)*H0(f(s)) of the transformed sequences: medtinfc = %.9g\n", s.medtinfc);
    std::printf("mean gain N*H0(s) - (N+K)*H0(f(s)):              mdife    = %.9g\n", s.mdife);
    std::printf("sequences with (N+K)*H0(f(s)) < N*H0(s):          cs2      = %llu\n",
                static_cast<unsigned long long>(s.cs2));
    std::printf("success percentage:                               pcs      = %.4g%%\n", s.pcs);
}

nlohmann::json report_json(const sst::OracleReport& r) {
    return nlohmann::json{
        {"ns", r.ns},
        {"N", r.length},
        {"K", r.order},
        {"avg_source_info", r.avg_source_info},
        {"avg_shaped_info", r.avg_shaped_info},
        {"optimal_gain", r.optimal_gain},
        {"success_fraction", r.success_fraction},
    };
}

void write_output(const sst::Sequence& s, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << sst::to_text(s);
    } else {
        sst::write_sequence_file(s, out_path);
    }
}

sst::Sequence read_input(const std::string& in_path) {
    if (in_path.empty() || in_path == "-") {
        const std::string text{std::istreambuf_iterator<char>(std::cin),
                               std::istreambuf_iterator<char>()};
        return sst::parse_sequence(text);
    }
    return sst::read_sequence_file(in_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Set shaping transforms, exhaustive oracle and Monte Carlo harness"};
    app.require_subcommand(1);

    // run
    sst::SourceSpec run_spec{40, 400, 0.5};
    std::uint64_t run_trials = 1000;
    std::uint64_t run_seed = 1;
    std::string run_strategy = "adaptive-rank";
    std::size_t run_k = 1;
    std::string run_out;
    std::string run_format = "json";
    unsigned run_workers = 1;
    auto* run = app.add_subcommand("run", "Repeated shaping trials on a non-uniform source");
    run->add_option("--ns", run_spec.ns, "Alphabet size")->capture_default_str();
    run->add_option("--len", run_spec.length, "Sequence length N")->capture_default_str();
    run->add_option("--pmax", run_spec.pmax, "Probability of the most frequent symbol")
        ->capture_default_str();
    run->add_option("--trials", run_trials, "Number of trials")->capture_default_str();
    run->add_option("--seed", run_seed, "Master seed")->capture_default_str();
    run->add_option("--strategy", run_strategy, "adaptive-rank | exact-sorted")
        ->capture_default_str();
    run->add_option("--k", run_k, "Shaping order K")->capture_default_str();
    run->add_option("--out", run_out, "Write summary and per-trial records here");
    run->add_option("--format", run_format, "csv | json")->capture_default_str();
    run->add_option("--workers", run_workers, "Worker threads (0 = all cores)")
        ->capture_default_str();

    // sweep
    bool sweep_table1 = false;
    std::uint64_t sweep_trials = 1000;
    std::uint64_t sweep_seed = 1;
    std::optional<std::uint64_t> sweep_second_seed;
    std::string sweep_strategy = "adaptive-rank";
    std::size_t sweep_k = 1;
    std::string sweep_out;
    std::string sweep_format = "json";
    unsigned sweep_workers = 0;
    auto* sweep = app.add_subcommand("sweep", "Run the reference grid and compare");
    sweep->add_flag("--table1", sweep_table1, "Grid ns in {30,40,50,60}, N=400, pmax=0.5");
    sweep->add_option("--trials", sweep_trials, "Trials per row")->capture_default_str();
    sweep->add_option("--seed", sweep_seed, "Master seed")->capture_default_str();
    sweep->add_option("--stability-seed", sweep_second_seed,
                      "Rerun with this seed and report per-row pcs drift");
    sweep->add_option("--strategy", sweep_strategy, "adaptive-rank | exact-sorted")
        ->capture_default_str();
    sweep->add_option("--k", sweep_k, "Shaping order K")->capture_default_str();
    sweep->add_option("--out", sweep_out, "Write summaries here");
    sweep->add_option("--format", sweep_format, "csv | json")->capture_default_str();
    sweep->add_option("--workers", sweep_workers, "Worker threads (0 = all cores)")
        ->capture_default_str();

    // oracle
    std::size_t oracle_ns = 3;
    std::size_t oracle_len = 2;
    std::size_t oracle_k = 1;
    std::string oracle_validate;
    auto* oracle = app.add_subcommand("oracle", "Exhaustive statistics over A^N and A^(N+K)");
    oracle->add_option("--ns", oracle_ns, "Alphabet size")->required();
    oracle->add_option("--len", oracle_len, "Sequence length N")->required();
    oracle->add_option("--k", oracle_k, "Shaping order K")->capture_default_str();
    oracle->add_option("--validate", oracle_validate,
                       "Also validate a strategy over all of A^N");

    // transform / invert
    std::string io_in;
    std::string io_out;
    std::size_t io_k = 1;
    std::string io_strategy = "adaptive-rank";
    auto* transform = app.add_subcommand("transform", "Apply f to a sequence file");
    auto* invert = app.add_subcommand("invert", "Apply f^-1 to a shaped sequence file");
    for (auto* cmd : {transform, invert}) {
        cmd->add_option("--in", io_in, "Input sequence file ('-' for stdin)");
        cmd->add_option("--out", io_out, "Output sequence file ('-' for stdout)");
        cmd->add_option("--k", io_k, "Shaping order K")->capture_default_str();
        cmd->add_option("--strategy", io_strategy, "adaptive-rank | exact-sorted")
            ->capture_default_str();
    }

    // sample
    sst::SourceSpec sample_spec{40, 400, 0.5};
    std::uint64_t sample_seed = 1;
    std::uint64_t sample_trial = 0;
    std::string sample_out;
    auto* sample = app.add_subcommand("sample", "Draw one sequence from the source model");
    sample->add_option("--ns", sample_spec.ns, "Alphabet size")->capture_default_str();
    sample->add_option("--len", sample_spec.length, "Sequence length N")->capture_default_str();
    sample->add_option("--pmax", sample_spec.pmax, "Probability of the most frequent symbol")
        ->capture_default_str();
    sample->add_option("--seed", sample_seed, "Master seed")->capture_default_str();
    sample->add_option("--trial", sample_trial, "Trial index")->capture_default_str();
    sample->add_option("--out", sample_out, "Output sequence file ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        if (run->parsed()) {
            sst::ShaperConfig cfg;
            cfg.strategy = sst::parse_strategy(run_strategy);
            cfg.order = run_k;
            cfg.ns = run_spec.ns;
            const auto format = sst::parse_export_format(run_format);
            const auto result =
                sst::run_experiment(run_spec, cfg, run_trials, sst::Seed{run_seed}, run_workers);
            print_summary(result.summary);
            if (!run_out.empty()) {
                sst::export_results({&result.summary, 1}, result.records, run_out, format);
            }
        } else if (sweep->parsed()) {
            if (!sweep_table1) {
                std::cerr << "sweep: only the --table1 grid is available\n";
                return kExitInvalidInput;
            }
            sst::ShaperConfig cfg;
            cfg.strategy = sst::parse_strategy(sweep_strategy);
            cfg.order = sweep_k;
            const auto format = sst::parse_export_format(sweep_format);
            const auto summaries =
                sst::sweep_table1(cfg, sweep_trials, sst::Seed{sweep_seed}, sweep_workers);
            std::cout << sst::render_table1_comparison(summaries);
            if (sweep_second_seed) {
                const auto again = sst::sweep_table1(cfg, sweep_trials,
                                                     sst::Seed{*sweep_second_seed}, sweep_workers);
                std::cout << "\npcs drift between seeds " << sweep_seed << " and "
                          << *sweep_second_seed << ":\n";
                for (std::size_t i = 0; i < summaries.size(); ++i) {
                    std::printf("  ns=%zu  %.1f%% vs %.1f%%  drift %.1f pp\n",
                                summaries[i].spec.ns, summaries[i].pcs, again[i].pcs,
                                std::abs(summaries[i].pcs - again[i].pcs));
                }
            }
            if (!sweep_out.empty()) {
                sst::export_results(summaries, {}, sweep_out, format);
            }
        } else if (oracle->parsed()) {
            const auto report = sst::oracle_report(oracle_ns, oracle_len, oracle_k);
            nlohmann::json doc = report_json(report);
            int status = 0;
            if (!oracle_validate.empty()) {
                sst::ShaperConfig cfg;
                cfg.strategy = sst::parse_strategy(oracle_validate);
                cfg.order = oracle_k;
                cfg.ns = oracle_ns;
                const auto v = sst::validate_strategy(cfg, oracle_ns, oracle_len);
                doc["validation"] = {
                    {"strategy", std::string(sst::to_string(v.strategy))},
                    {"checked", v.checked},
                    {"distinct_images", v.distinct_images},
                    {"ok", v.ok},
                    {"counterexample", v.counterexample},
                };
                status = v.ok ? 0 : kExitRoundTrip;
            }
            std::cout << doc.dump(2) << '\n';
            return status;
        } else if (transform->parsed() || invert->parsed()) {
            const sst::Sequence input = read_input(io_in);
            sst::ShaperConfig cfg;
            cfg.strategy = sst::parse_strategy(io_strategy);
            cfg.order = io_k;
            cfg.ns = input.ns();
            if (transform->parsed()) {
                if (input.empty()) {
                    throw sst::DomainError("cannot shape an empty sequence");
                }
                write_output(sst::make_shaper(cfg, input.size())->transform(input), io_out);
            } else {
                if (input.size() <= io_k) {
                    throw sst::DomainError("shaped sequence must be longer than K");
                }
                const auto shaper = sst::make_shaper(cfg, input.size() - io_k);
                const auto recovered = shaper->inverse(input);
                if (!recovered) {
                    std::cerr << "not in image\n";
                    return kExitNotInImage;
                }
                write_output(*recovered, io_out);
            }
        } else if (sample->parsed()) {
            write_output(sst::sample(sample_spec, sst::Seed{sample_seed}, sample_trial),
                         sample_out);
        }
    } catch (const sst::RoundTripError& e) {
        std::cerr << e.what() << '\n';
        return kExitRoundTrip;
    } catch (const sst::DomainError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const sst::SpaceTooLarge& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return 0;
}
