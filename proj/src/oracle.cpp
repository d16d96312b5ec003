#include "sst/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "sst/errors.hpp"

namespace sst {

namespace {

std::uint64_t encode(const Sequence& s) {
    std::uint64_t code = 0;
    for (Symbol a : s.symbols()) {
        code = code * s.ns() + a;
    }
    return code;
}

Sequence decode(std::uint64_t code, std::size_t ns, std::size_t length) {
    std::vector<Symbol> symbols(length);
    for (std::size_t i = length; i-- > 0;) {
        symbols[i] = static_cast<Symbol>(code % ns);
        code /= ns;
    }
    return Sequence(std::move(symbols), ns);
}

}  // namespace

std::string format_sequence(const Sequence& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(s[i]);
    }
    out += ')';
    return out;
}

Sequence SortedSpace::at(std::uint64_t rank) const {
    if (rank >= size()) {
        throw DomainError("rank " + std::to_string(rank) + " outside sorted space");
    }
    return decode(codes_[rank], space_.ns, space_.length);
}

std::optional<std::uint64_t> SortedSpace::rank_of(const Sequence& s) const {
    if (s.ns() != space_.ns || s.size() != space_.length) {
        return std::nullopt;
    }
    const std::uint64_t code = encode(s);
    for (std::uint64_t r = 0; r < size(); ++r) {
        if (codes_[r] == code) {
            return r;
        }
    }
    return std::nullopt;
}

SortedSpace sorted_space(std::size_t ns, std::size_t length, std::uint64_t bound) {
    SortedSpace out;
    out.space_ = SpaceDescriptor::of(ns, length);
    out.space_.require_enumerable(bound);
    if (length == 0) {
        throw DomainError("sorted space needs length >= 1");
    }
    const std::uint64_t size = out.space_.size;

    // Information content per type class, keyed by the sorted count vector.
    std::map<std::vector<std::uint64_t>, double> class_info;
    std::vector<double> info(size);
    std::vector<Symbol> odometer(length, 0);
    std::vector<std::uint64_t> counts(ns, 0);
    counts[0] = length;
    std::vector<std::uint64_t> key(ns);
    for (std::uint64_t code = 0; code < size; ++code) {
        key = counts;
        std::sort(key.begin(), key.end(), std::greater<>());
        auto [it, inserted] = class_info.try_emplace(key, 0.0);
        if (inserted) {
            it->second = info_content(key).bits;
        }
        info[code] = it->second;

        // Advance the odometer, keeping counts in step.
        for (std::size_t i = length; i-- > 0;) {
            --counts[odometer[i]];
            if (odometer[i] + 1 < ns) {
                ++odometer[i];
                ++counts[odometer[i]];
                break;
            }
            odometer[i] = 0;
            ++counts[0];
        }
    }

    std::vector<std::uint32_t> order(size);
    std::iota(order.begin(), order.end(), std::uint32_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return info[a] < info[b]; });

    out.codes_ = std::move(order);
    out.info_.resize(size);
    for (std::uint64_t r = 0; r < size; ++r) {
        out.info_[r] = info[out.codes_[r]];
    }
    return out;
}

OracleReport oracle_report(std::size_t ns, std::size_t length, std::size_t order,
                           std::uint64_t bound) {
    if (order < 1) {
        throw DomainError("shaping order K must be at least 1");
    }
    SpaceDescriptor::of(ns, length + order).require_enumerable(bound);
    const SortedSpace source = sorted_space(ns, length, bound);
    const SortedSpace target = sorted_space(ns, length + order, bound);

    const std::uint64_t n = source.size();
    std::vector<double> source_info(n);
    std::vector<double> shaped_info(n);
    std::uint64_t successes = 0;
    for (std::uint64_t r = 0; r < n; ++r) {
        source_info[r] = source.info_at(r);
        shaped_info[r] = target.info_at(r);
        if (shaped_info[r] < source_info[r]) {
            ++successes;
        }
    }

    OracleReport report;
    report.ns = ns;
    report.length = length;
    report.order = order;
    report.avg_source_info = pairwise_sum(source_info) / static_cast<double>(n);
    report.avg_shaped_info = pairwise_sum(shaped_info) / static_cast<double>(n);
    report.optimal_gain = report.avg_source_info - report.avg_shaped_info;
    report.success_fraction = static_cast<double>(successes) / static_cast<double>(n);
    return report;
}

ValidationReport validate_strategy(const ShaperConfig& cfg, std::size_t ns, std::size_t length) {
    ShaperConfig local = cfg;
    local.ns = ns;
    return validate_shaper(*make_shaper(local, length), ns, length, cfg.enumeration_bound);
}

ValidationReport validate_shaper(const Shaper& shaper, std::size_t ns, std::size_t length,
                                 std::uint64_t bound) {
    const std::size_t order = shaper.order();
    const SortedSpace source = sorted_space(ns, length, bound);

    ValidationReport report;
    report.strategy = shaper.strategy();
    report.ns = ns;
    report.length = length;
    report.order = order;

    std::optional<SortedSpace> target;
    std::unordered_set<std::uint64_t> first_target_codes;
    if (shaper.strategy() == Strategy::kExactSorted) {
        target = sorted_space(ns, length + order, bound);
        for (std::uint64_t r = 0; r < source.size(); ++r) {
            first_target_codes.insert(target->code_at(r));
        }
    }

    std::unordered_map<std::uint64_t, std::uint64_t> image_owner;
    for (std::uint64_t code = 0; code < source.size(); ++code) {
        // A^N in lexicographic order, independent of the sorted ranks.
        const Sequence s = decode(code, ns, length);
        const Sequence y = shaper.transform(s);
        ++report.checked;

        if (y.size() != length + order) {
            report.counterexample = "length contract broken: " + format_sequence(s) + " -> " +
                                    format_sequence(y);
            return report;
        }
        const std::optional<Sequence> back = shaper.inverse(y);
        if (!back || *back != s) {
            report.counterexample = "round trip failed: " + format_sequence(s) + " -> " +
                                    format_sequence(y) + " -> " +
                                    (back ? format_sequence(*back) : std::string("not in image"));
            return report;
        }
        const std::uint64_t y_code = encode(y);
        if (auto [it, inserted] = image_owner.try_emplace(y_code, code); !inserted) {
            report.counterexample = "images collide: " + format_sequence(s) + " and " +
                                    format_sequence(decode(it->second, ns, length)) +
                                    " both map to " + format_sequence(y);
            return report;
        }
        if (target && !first_target_codes.contains(y_code)) {
            report.counterexample = "image outside the lowest ns^N target sequences: " +
                                    format_sequence(s) + " -> " + format_sequence(y);
            return report;
        }
    }
    report.distinct_images = image_owner.size();
    report.ok = true;
    return report;
}

}  // namespace sst
