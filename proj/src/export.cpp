#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sst/errors.hpp"
#include "sst/experiment.hpp"

namespace sst {

namespace {

using nlohmann::json;

std::string sig9(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

json to_json(const ExperimentSummary& s) {
    return json{
        {"medinfc", round_sig9(s.medinfc)},
        {"medtinfc", round_sig9(s.medtinfc)},
        {"mdife", round_sig9(s.mdife)},
        {"cs2", s.cs2},
        {"pcs", round_sig9(s.pcs)},
        {"trials", s.trials},
        {"spec", {{"ns", s.spec.ns}, {"N", s.spec.length}, {"pmax", round_sig9(s.spec.pmax)}}},
        {"strategy", std::string(to_string(s.strategy))},
        {"K", s.order},
        {"seed", s.seed.master},
    };
}

json to_json(const TrialRecord& r) {
    return json{
        {"trial", r.trial},
        {"infc", round_sig9(r.infc)},
        {"tinfc", round_sig9(r.tinfc)},
        {"dife", round_sig9(r.dife)},
        {"success", r.success},
        {"roundtrip_ok", r.roundtrip_ok},
    };
}

ExperimentSummary summary_from_json(const json& j) {
    ExperimentSummary s;
    s.medinfc = j.at("medinfc").get<double>();
    s.medtinfc = j.at("medtinfc").get<double>();
    s.mdife = j.at("mdife").get<double>();
    s.cs2 = j.at("cs2").get<std::uint64_t>();
    s.pcs = j.at("pcs").get<double>();
    s.trials = j.at("trials").get<std::uint64_t>();
    s.spec.ns = j.at("spec").at("ns").get<std::size_t>();
    s.spec.length = j.at("spec").at("N").get<std::size_t>();
    s.spec.pmax = j.at("spec").at("pmax").get<double>();
    s.strategy = parse_strategy(j.at("strategy").get<std::string>());
    s.order = j.at("K").get<std::size_t>();
    s.seed.master = j.at("seed").get<std::uint64_t>();
    return s;
}

TrialRecord record_from_json(const json& j) {
    return TrialRecord{
        j.at("trial").get<std::uint64_t>(), j.at("infc").get<double>(),
        j.at("tinfc").get<double>(),        j.at("dife").get<double>(),
        j.at("success").get<bool>(),        j.at("roundtrip_ok").get<bool>(),
    };
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    }
    return in;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) {
        throw std::runtime_error("write to '" + path.string() + "' failed");
    }
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    return fields;
}

double to_double(const std::string& field, const std::filesystem::path& path) {
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0') {
        throw std::runtime_error("bad number '" + field + "' in '" + path.string() + "'");
    }
    return v;
}

std::uint64_t to_u64(const std::string& field, const std::filesystem::path& path) {
    char* end = nullptr;
    const std::uint64_t v = std::strtoull(field.c_str(), &end, 10);
    if (end == field.c_str() || *end != '\0') {
        throw std::runtime_error("bad integer '" + field + "' in '" + path.string() + "'");
    }
    return v;
}

constexpr const char* kRecordHeader = "trial,infc,tinfc,dife,success,roundtrip_ok";
constexpr const char* kSummaryHeader =
    "ns,N,pmax,strategy,K,seed,trials,medinfc,medtinfc,mdife,cs2,pcs";

}  // namespace

double round_sig9(double value) { return std::strtod(sig9(value).c_str(), nullptr); }

ExportFormat parse_export_format(std::string_view name) {
    if (name == "csv") {
        return ExportFormat::kCsv;
    }
    if (name == "json") {
        return ExportFormat::kJson;
    }
    throw DomainError("unknown export format '" + std::string(name) + "'");
}

std::filesystem::path summary_csv_path(const std::filesystem::path& records_path) {
    std::filesystem::path out = records_path;
    out.replace_filename(records_path.stem().string() + ".summary.csv");
    return out;
}

void export_results(std::span<const ExperimentSummary> summaries,
                    std::span<const TrialRecord> records, const std::filesystem::path& path,
                    ExportFormat format) {
    if (format == ExportFormat::kJson) {
        json doc{{"summaries", json::array()}, {"records", json::array()}};
        for (const auto& s : summaries) {
            doc["summaries"].push_back(to_json(s));
        }
        for (const auto& r : records) {
            doc["records"].push_back(to_json(r));
        }
        std::ofstream out = open_for_write(path);
        out << doc.dump(2) << '\n';
        finish(out, path);
        return;
    }

    std::ofstream out = open_for_write(path);
    out << kRecordHeader << '\n';
    for (const auto& r : records) {
        out << r.trial << ',' << sig9(r.infc) << ',' << sig9(r.tinfc) << ',' << sig9(r.dife)
            << ',' << (r.success ? 1 : 0) << ',' << (r.roundtrip_ok ? 1 : 0) << '\n';
    }
    finish(out, path);

    if (summaries.empty()) {
        return;
    }
    const std::filesystem::path summary_path = summary_csv_path(path);
    std::ofstream sout = open_for_write(summary_path);
    sout << kSummaryHeader << '\n';
    for (const auto& s : summaries) {
        sout << s.spec.ns << ',' << s.spec.length << ',' << sig9(s.spec.pmax) << ','
             << to_string(s.strategy) << ',' << s.order << ',' << s.seed.master << ','
             << s.trials << ',' << sig9(s.medinfc) << ',' << sig9(s.medtinfc) << ','
             << sig9(s.mdife) << ',' << s.cs2 << ',' << sig9(s.pcs) << '\n';
    }
    finish(sout, summary_path);
}

ImportedResults import_json(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw std::runtime_error("cannot parse '" + path.string() + "': " + e.what());
    }
    ImportedResults out;
    for (const auto& j : doc.at("summaries")) {
        out.summaries.push_back(summary_from_json(j));
    }
    for (const auto& j : doc.at("records")) {
        out.records.push_back(record_from_json(j));
    }
    return out;
}

std::vector<TrialRecord> import_records_csv(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    std::string line;
    if (!std::getline(in, line) || line != kRecordHeader) {
        throw std::runtime_error("missing record header in '" + path.string() + "'");
    }
    std::vector<TrialRecord> out;
    while (std::getline(in, line)) {
        const auto f = split_csv_line(line);
        if (f.size() != 6) {
            throw std::runtime_error("malformed record row in '" + path.string() + "'");
        }
        out.push_back(TrialRecord{to_u64(f[0], path), to_double(f[1], path),
                                  to_double(f[2], path), to_double(f[3], path), f[4] == "1",
                                  f[5] == "1"});
    }
    return out;
}

std::vector<ExperimentSummary> import_summaries_csv(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    std::string line;
    if (!std::getline(in, line) || line != kSummaryHeader) {
        throw std::runtime_error("missing summary header in '" + path.string() + "'");
    }
    std::vector<ExperimentSummary> out;
    while (std::getline(in, line)) {
        const auto f = split_csv_line(line);
        if (f.size() != 12) {
            throw std::runtime_error("malformed summary row in '" + path.string() + "'");
        }
        ExperimentSummary s;
        s.spec.ns = to_u64(f[0], path);
        s.spec.length = to_u64(f[1], path);
        s.spec.pmax = to_double(f[2], path);
        s.strategy = parse_strategy(f[3]);
        s.order = to_u64(f[4], path);
        s.seed.master = to_u64(f[5], path);
        s.trials = to_u64(f[6], path);
        s.medinfc = to_double(f[7], path);
        s.medtinfc = to_double(f[8], path);
        s.mdife = to_double(f[9], path);
        s.cs2 = to_u64(f[10], path);
        s.pcs = to_double(f[11], path);
        out.push_back(s);
    }
    return out;
}

}  // namespace sst
