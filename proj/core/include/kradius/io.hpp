#pragma once

#include "kradius/sequence.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace kradius {

/// Raised when sequence input cannot be parsed.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SequenceFormat { Text, Json };

/// Reads either format, deciding by the first non-whitespace byte: '{'
/// selects JSON, anything else the text format. Throws parse_error on
/// malformed input (including symbol ids >= n).
Sequence read_sequence(std::istream& in);

/// Opens and reads path; "-" reads standard input.
Sequence read_sequence_file(const std::string& path);

/// Text format: header line "# n=<n> k=<k>", then one symbol per line.
/// Blank lines and further '#' lines are ignored on input. A body line may
/// also be written _v (only when n is even), standing for symbol n/2 + v.
/// When underline_base is set to a value p on output, symbols >= p are
/// rendered in that _v form.
void write_text(const Sequence& seq, std::ostream& out,
                std::optional<std::uint32_t> underline_base = std::nullopt);

/// JSON object {"n":..., "k":..., "length":..., "symbols":[...]}. "length"
/// is redundant; when present on input it must match the symbol count.
void write_json(const Sequence& seq, std::ostream& out);

void write_sequence(const Sequence& seq, std::ostream& out, SequenceFormat format,
                    std::optional<std::uint32_t> underline_base = std::nullopt);

}  // namespace kradius
