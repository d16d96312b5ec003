#include "sst/sequence_io.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>
#include <stdexcept>

#include "sst/errors.hpp"

namespace sst {

namespace {

std::uint64_t parse_decimal(std::string_view token, std::string_view what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw DomainError("malformed " + std::string(what) + " '" + std::string(token) + "'");
    }
    return value;
}

template <typename Values>
std::string render(std::size_t ns, const Values& values) {
    std::string out = "ns " + std::to_string(ns) + "\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += std::to_string(values[i]);
    }
    out += '\n';
    return out;
}

}  // namespace

SymbolText parse_symbol_text(std::string_view text) {
    constexpr std::string_view kPrefix = "ns ";
    if (!text.starts_with(kPrefix)) {
        throw DomainError("sequence text must start with 'ns <integer>'");
    }
    const std::size_t header_end = text.find('\n');
    if (header_end == std::string_view::npos) {
        throw DomainError("sequence text is missing its symbol line");
    }
    SymbolText out;
    const std::uint64_t ns = parse_decimal(text.substr(3, header_end - 3), "alphabet size");
    out.ns = Alphabet(ns).size();

    std::string_view body = text.substr(header_end + 1);
    if (body.empty() || body.back() != '\n') {
        throw DomainError("sequence text must end with a newline after the symbol line");
    }
    body.remove_suffix(1);
    if (body.find('\n') != std::string_view::npos) {
        throw DomainError("sequence text has more than two lines");
    }
    if (body.empty()) {
        throw DomainError("sequence text has no symbols");
    }
    std::size_t start = 0;
    for (;;) {
        const std::size_t space = body.find(' ', start);
        const std::string_view token = body.substr(start, space - start);
        const std::uint64_t v = parse_decimal(token, "symbol");
        if (v >= out.ns) {
            throw DomainError("symbol " + std::string(token) + " outside [0, " +
                              std::to_string(out.ns) + ")");
        }
        out.values.push_back(static_cast<std::uint32_t>(v));
        if (space == std::string_view::npos) {
            break;
        }
        start = space + 1;
    }
    return out;
}

std::string to_text(const Sequence& s) { return render(s.ns(), s.symbols()); }

std::string to_text(const DigitStream& d) { return render(d.ns(), d.digits()); }

Sequence parse_sequence(std::string_view text) {
    SymbolText parsed = parse_symbol_text(text);
    return Sequence(std::move(parsed.values), parsed.ns);
}

DigitStream parse_digits(std::string_view text) {
    SymbolText parsed = parse_symbol_text(text);
    return DigitStream(std::move(parsed.values), parsed.ns);
}

Sequence read_sequence_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    }
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    try {
        return parse_sequence(text);
    } catch (const DomainError& e) {
        throw DomainError(path.string() + ": " + e.what());
    }
}

void write_sequence_file(const Sequence& s, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    out << to_text(s);
    out.flush();
    if (!out) {
        throw std::runtime_error("write to '" + path.string() + "' failed");
    }
}

}  // namespace sst
