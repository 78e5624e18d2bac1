#include "kradius/io.hpp"

#include "json.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace kradius {

namespace {

/// Strict decimal parse of an entire token; rejects signs, blanks, suffixes.
std::uint32_t parse_u32(const std::string& token, const std::string& what) {
    std::uint32_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || token.empty()) {
        throw parse_error("invalid " + what + ": '" + token + "'");
    }
    return value;
}

Sequence read_text(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw parse_error("empty input, expected header '# n=<n> k=<k>'");
    }
    std::istringstream header(line);
    std::string hash, ntok, ktok;
    header >> hash >> ntok >> ktok;
    if (hash != "#" || ntok.rfind("n=", 0) != 0 || ktok.rfind("k=", 0) != 0) {
        throw parse_error("malformed header, expected '# n=<n> k=<k>', got '" +
                          line + "'");
    }
    Sequence seq;
    seq.n = parse_u32(ntok.substr(2), "n");
    seq.k = parse_u32(ktok.substr(2), "k");

    while (std::getline(in, line)) {
        // Trim trailing carriage return and surrounding blanks.
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
            line.pop_back();
        }
        std::size_t start = 0;
        while (start < line.size() &&
               std::isspace(static_cast<unsigned char>(line[start]))) {
            ++start;
        }
        line.erase(0, start);
        if (line.empty() || line[0] == '#') continue;

        Symbol value;
        if (line[0] == '_') {
            if (seq.n % 2 != 0) {
                throw parse_error("underline form '" + line +
                                  "' requires an even alphabet size");
            }
            const Symbol v = parse_u32(line.substr(1), "underlined symbol");
            if (v >= seq.n / 2) {
                std::ostringstream msg;
                msg << "underlined symbol " << line << " out of range, expected _0.._"
                    << (seq.n / 2 - 1);
                throw parse_error(msg.str());
            }
            value = seq.n / 2 + v;
        } else {
            value = parse_u32(line, "symbol");
        }
        if (value >= seq.n) {
            std::ostringstream msg;
            msg << "symbol " << value << " out of range for n=" << seq.n;
            throw parse_error(msg.str());
        }
        seq.symbols.push_back(value);
    }
    return seq;
}

Sequence read_json(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object() || !doc.contains("n") || !doc.contains("k") ||
            !doc.contains("symbols")) {
            throw parse_error(
                "JSON input must be an object with \"n\", \"k\" and \"symbols\"");
        }
        Sequence seq;
        seq.n = doc.at("n").get<std::uint32_t>();
        seq.k = doc.at("k").get<std::uint32_t>();
        seq.symbols = doc.at("symbols").get<std::vector<Symbol>>();
        if (doc.contains("length") &&
            doc.at("length").get<std::uint64_t>() != seq.symbols.size()) {
            std::ostringstream msg;
            msg << "JSON \"length\" " << doc.at("length").get<std::uint64_t>()
                << " does not match symbol count " << seq.symbols.size();
            throw parse_error(msg.str());
        }
        for (Symbol s : seq.symbols) {
            if (s >= seq.n) {
                std::ostringstream msg;
                msg << "symbol " << s << " out of range for n=" << seq.n;
                throw parse_error(msg.str());
            }
        }
        return seq;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON sequence: ") + e.what());
    }
}

}  // namespace

Sequence read_sequence(std::istream& in) {
    int c;
    while ((c = in.peek()) != std::istream::traits_type::eof() &&
           std::isspace(static_cast<unsigned char>(c))) {
        in.get();
    }
    if (c == '{') return read_json(in);
    return read_text(in);
}

Sequence read_sequence_file(const std::string& path) {
    if (path == "-") return read_sequence(std::cin);
    std::ifstream file(path);
    if (!file) throw parse_error("cannot open '" + path + "'");
    return read_sequence(file);
}

void write_text(const Sequence& seq, std::ostream& out,
                std::optional<std::uint32_t> underline_base) {
    out << "# n=" << seq.n << " k=" << seq.k << '\n';
    for (Symbol s : seq.symbols) {
        if (underline_base && s >= *underline_base) {
            out << '_' << (s - *underline_base) << '\n';
        } else {
            out << s << '\n';
        }
    }
}

void write_json(const Sequence& seq, std::ostream& out) {
    nlohmann::json doc;
    doc["n"] = seq.n;
    doc["k"] = seq.k;
    doc["length"] = seq.symbols.size();
    doc["symbols"] = seq.symbols;
    out << doc.dump() << '\n';
}

void write_sequence(const Sequence& seq, std::ostream& out, SequenceFormat format,
                    std::optional<std::uint32_t> underline_base) {
    if (format == SequenceFormat::Json) {
        write_json(seq, out);
    } else {
        write_text(seq, out, underline_base);
    }
}

}  // namespace kradius
