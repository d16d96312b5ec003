#pragma once

// Text form shared by sequences and digit streams:
//
//   ns <integer>\n
//   <s_1> <s_2> ... <s_L>\n
//
// Symbols are 0-based decimals separated by single spaces. Parsing is strict:
// any other whitespace, a missing trailing newline, or an out-of-range value
// is a DomainError.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sst/entropy.hpp"
#include "sst/rank_codec.hpp"

namespace sst {

struct SymbolText {
    std::size_t ns = 0;
    std::vector<std::uint32_t> values;
};

[[nodiscard]] SymbolText parse_symbol_text(std::string_view text);

[[nodiscard]] std::string to_text(const Sequence& s);
[[nodiscard]] std::string to_text(const DigitStream& d);

[[nodiscard]] Sequence parse_sequence(std::string_view text);
[[nodiscard]] DigitStream parse_digits(std::string_view text);

[[nodiscard]] Sequence read_sequence_file(const std::filesystem::path& path);
void write_sequence_file(const Sequence& s, const std::filesystem::path& path);

}  // namespace sst
