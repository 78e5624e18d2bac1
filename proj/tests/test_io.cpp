#include "kradius/io.hpp"

#include "kradius/builder.hpp"

#include "doctest.h"

#include <sstream>

using kradius::Sequence;
using kradius::SequenceFormat;
using kradius::Symbol;

namespace {

Sequence parse(const std::string& text) {
    std::istringstream in(text);
    return kradius::read_sequence(in);
}

}  // namespace

TEST_CASE("text format round-trips") {
    Sequence seq;
    seq.n = 9;
    seq.k = 2;
    seq.symbols = {0, 1, 6, 4, 3, 7, 8, 0, 4, 2, 5};

    std::ostringstream out;
    kradius::write_text(seq, out);
    CHECK(parse(out.str()) == seq);
    CHECK(out.str().substr(0, 10) == "# n=9 k=2\n");
}

TEST_CASE("JSON format round-trips") {
    Sequence seq;
    seq.n = 4;
    seq.k = 2;
    seq.symbols = {0, 1, 2, 3, 0};

    std::ostringstream out;
    kradius::write_json(seq, out);
    CHECK(out.str().find("\"length\":5") != std::string::npos);
    CHECK(parse(out.str()) == seq);
}

TEST_CASE("write_sequence selects the format") {
    Sequence seq;
    seq.n = 3;
    seq.k = 1;
    seq.symbols = {0, 1, 2, 0};

    std::ostringstream text;
    kradius::write_sequence(seq, text, SequenceFormat::Text);
    CHECK(text.str() == "# n=3 k=1\n0\n1\n2\n0\n");

    std::ostringstream json;
    kradius::write_sequence(seq, json, SequenceFormat::Json);
    CHECK(json.str().front() == '{');
    CHECK(parse(json.str()) == seq);
}

TEST_CASE("underline rendering writes symbols >= base as _v and reads back") {
    Sequence seq;
    seq.n = 10;
    seq.k = 2;
    seq.symbols = {0, 6, 3, 5, 9};

    std::ostringstream out;
    kradius::write_text(seq, out, 5);
    CHECK(out.str() == "# n=10 k=2\n0\n_1\n3\n_0\n_4\n");
    CHECK(parse(out.str()) == seq);
}

TEST_CASE("text input skips blank and comment lines") {
    const Sequence seq = parse("# n=5 k=1\n\n0\n# a note\n 1 \n4\n");
    CHECK(seq.n == 5);
    CHECK(seq.k == 1);
    CHECK(seq.symbols == std::vector<Symbol>{0, 1, 4});
}

TEST_CASE("malformed text input is rejected") {
    CHECK_THROWS_AS(parse(""), kradius::parse_error);
    CHECK_THROWS_AS(parse("n=3 k=1\n0\n"), kradius::parse_error);
    CHECK_THROWS_AS(parse("# n=3\n0\n"), kradius::parse_error);
    CHECK_THROWS_AS(parse("# n=x k=1\n"), kradius::parse_error);
    CHECK_THROWS_AS(parse("# n=3 k=1\nzebra\n"), kradius::parse_error);
    CHECK_THROWS_AS(parse("# n=3 k=1\n-1\n"), kradius::parse_error);
    CHECK_THROWS_AS(parse("# n=3 k=1\n3\n"), kradius::parse_error);   // id >= n
    CHECK_THROWS_AS(parse("# n=5 k=1\n_0\n"), kradius::parse_error);  // odd n
    CHECK_THROWS_AS(parse("# n=6 k=1\n_3\n"), kradius::parse_error);  // v >= n/2
}

TEST_CASE("malformed JSON input is rejected") {
    CHECK_THROWS_AS(parse("{"), kradius::parse_error);
    CHECK_THROWS_AS(parse("{\"n\":3,\"k\":1}"), kradius::parse_error);
    CHECK_THROWS_AS(parse("{\"n\":3,\"k\":1,\"symbols\":[0,5]}"),
                    kradius::parse_error);  // id >= n
    CHECK_THROWS_AS(
        parse("{\"n\":3,\"k\":1,\"symbols\":[0,1],\"length\":7}"),
        kradius::parse_error);  // length mismatch
    CHECK_THROWS_AS(parse("{\"n\":3,\"k\":1,\"symbols\":[0,-1]}"),
                    kradius::parse_error);
}

TEST_CASE("JSON length field is accepted when consistent") {
    const Sequence seq = parse("{\"n\":3,\"k\":1,\"symbols\":[0,1,2],\"length\":3}");
    CHECK(seq.symbols == std::vector<Symbol>{0, 1, 2});
}

TEST_CASE("format detection keys on the first non-space byte") {
    const Sequence json = parse("  \n\t{\"n\":2,\"k\":1,\"symbols\":[0,1]}");
    CHECK(json.n == 2);
}

TEST_CASE("read_sequence_file reports unknown paths") {
    CHECK_THROWS_AS(kradius::read_sequence_file("/nonexistent/path/seq.txt"),
                    kradius::parse_error);
}

TEST_CASE("a constructed sequence survives a full text round-trip") {
    const Sequence built = kradius::construct(50, 2).sequence;
    std::ostringstream out;
    kradius::write_text(built, out);
    CHECK(parse(out.str()) == built);
}
