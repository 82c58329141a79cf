#include <random>

#include "clawcycle/errors.hpp"
#include "clawcycle/textio.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace clawcycle;

namespace {

std::vector<std::uint32_t> members(const VertexSet& s) {
    std::vector<std::uint32_t> out;
    for (auto v : s.members()) out.push_back(v.label);
    return out;
}

template <typename Fn>
ParseError parse_error(Fn&& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a ParseError");
    return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("vertex text lists alpha_1 first") {
    CHECK(format_vertex(Vertex{1}, CubeDim(4)) == "1000");
    CHECK(format_vertex(Vertex{8}, CubeDim(4)) == "0001");
    CHECK(parse_vertex("0110", CubeDim(4)).label == 6);
    CHECK_THROWS_AS(parse_vertex("011", CubeDim(4)), ParseError);
}

TEST_CASE("parse_set examples") {
    CHECK(members(parse_set("000\n111\n", CubeDim(3))) == std::vector<std::uint32_t>{0, 7});
    CHECK(members(parse_set("00F0", CubeDim(4), SetFormat::Hex)) == std::vector<std::uint32_t>{4, 5, 6, 7});
    const auto e = parse_error([] { parse_set("0102", CubeDim(3), SetFormat::Binary); });
    CHECK(std::string(e.what()).find("bad character '2'") != std::string::npos);
    CHECK(e.line() == 1);
    CHECK(e.column() == 4);
}

TEST_CASE("parse_set diagnostics") {
    const CubeDim q3(3);
    auto e = parse_error([&] { parse_set("000\n01\n", q3); });
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("wrong vertex length") != std::string::npos);

    e = parse_error([&] { parse_set("000\n\n  110\n110\n", q3); });
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("duplicate vertex 110 (first seen on line 3)") != std::string::npos);

    e = parse_error([&] { parse_set("\n  \n", q3); });
    CHECK(std::string(e.what()).find("empty input") != std::string::npos);

    e = parse_error([&] { parse_set("0F0", CubeDim(4), SetFormat::Hex); });
    CHECK(std::string(e.what()).find("wrong hex mask length") != std::string::npos);

    e = parse_error([&] { parse_set("0G", q3, SetFormat::Hex); });
    CHECK(e.column() == 2);

    // Q_1 has two vertices, so only the low two bits of the digit are usable.
    CHECK(members(parse_set("3", CubeDim(1), SetFormat::Hex)) == std::vector<std::uint32_t>{0, 1});
    e = parse_error([&] { parse_set("4", CubeDim(1), SetFormat::Hex); });
    CHECK(std::string(e.what()).find("beyond") != std::string::npos);
}

TEST_CASE("parse_set auto detection") {
    CHECK(members(parse_set("0x00F0", CubeDim(4))) == std::vector<std::uint32_t>{4, 5, 6, 7});
    CHECK(members(parse_set("0000FFFF\n", CubeDim(5))).size() == 16);
    // Four characters in Q_4 are read as one binary vertex.
    CHECK(members(parse_set("0101", CubeDim(4))) == std::vector<std::uint32_t>{10});
    CHECK(members(parse_set("C3", CubeDim(3))) == std::vector<std::uint32_t>{0, 1, 6, 7});
}

TEST_CASE("property: set text round trips") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 10;
        const CubeDim dim(n);
        const auto set = VertexSet::from_labels(dim, oracle::random_labels(rng, dim.order(), 0.4));
        CHECK(parse_set(format_set_hex(set), dim, SetFormat::Hex) == set);
        CHECK(parse_set("0x" + format_set_hex(set), dim) == set);
        if (!set.empty()) CHECK(parse_set(format_set_binary(set), dim, SetFormat::Binary) == set);
    }
}

TEST_CASE("witness text") {
    const CubeDim q4(4);
    const Witness claw = Claw{Vertex{0}, {Vertex{1}, Vertex{2}, Vertex{4}}};
    CHECK(format_witness(claw, q4) == "claw 0000 1000 0100 0010");
    CHECK(parse_witness("claw 0000 1000 0100 0010", q4) == claw);
    const Witness cyc = InducedCycle{{Vertex{1}, Vertex{3}, Vertex{2}, Vertex{6}}};
    CHECK(format_witness(cyc, q4) == "cycle 1000 1100 0100 0110");
    CHECK(parse_witness(format_witness(cyc, q4), q4) == cyc);
    CHECK_THROWS_AS(parse_witness("claw 0000 1000", q4), ParseError);
    CHECK_THROWS_AS(parse_witness("star 0000", q4), ParseError);
}
