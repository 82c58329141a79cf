#include "clawcycle/textio.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "clawcycle/errors.hpp"

namespace clawcycle {

namespace {

std::size_t hex_digits(CubeDim dim) { return (static_cast<std::size_t>(dim.order()) + 3) / 4; }

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

// Parses one vertex token located at (line, first column).
Vertex parse_vertex_at(std::string_view token, CubeDim dim, std::size_t line, std::size_t column) {
    const auto n = static_cast<std::size_t>(dim.value());
    for (std::size_t i = 0; i < token.size(); ++i) {
        if (token[i] != '0' && token[i] != '1') {
            throw ParseError(line, column + i,
                             std::string("bad character '") + token[i] + "' in vertex, expected 0 or 1");
        }
    }
    if (token.size() != n) {
        throw ParseError(line, column,
                         "wrong vertex length: expected " + std::to_string(n) + " characters, got " +
                             std::to_string(token.size()));
    }
    std::uint32_t label = 0;
    for (std::size_t i = 0; i < n; ++i) {
        label |= static_cast<std::uint32_t>(token[i] - '0') << i;
    }
    return Vertex{label};
}

VertexSet parse_hex(std::string_view text, CubeDim dim) {
    std::string_view body = trim(text);
    std::size_t column = 1 + static_cast<std::size_t>(body.data() - text.data());
    if (body.size() >= 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X')) {
        body.remove_prefix(2);
        column += 2;
    }
    if (body.empty()) {
        throw ParseError(1, column, "empty input");
    }
    const std::size_t digits = hex_digits(dim);
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (hex_value(body[i]) < 0) {
            throw ParseError(1, column + i, std::string("bad character '") + body[i] + "' in hex mask");
        }
    }
    if (body.size() != digits) {
        throw ParseError(1, column,
                         "wrong hex mask length: expected " + std::to_string(digits) + " digits, got " +
                             std::to_string(body.size()));
    }
    std::vector<std::uint64_t> words((static_cast<std::size_t>(dim.order()) + 63) / 64, 0);
    for (std::size_t i = 0; i < digits; ++i) {
        const auto value = static_cast<std::uint64_t>(hex_value(body[i]));
        const std::size_t bit = 4 * (digits - 1 - i);
        for (std::size_t b = 0; b < 4; ++b) {
            if (((value >> b) & 1u) == 0) continue;
            if (bit + b >= dim.order()) {
                throw ParseError(1, column + i, "hex mask has bits beyond 2^n vertices");
            }
            words[(bit + b) / 64] |= std::uint64_t{1} << ((bit + b) % 64);
        }
    }
    return VertexSet::from_words(dim, std::move(words));
}

VertexSet parse_binary(std::string_view text, CubeDim dim) {
    VertexSet out(dim);
    std::map<std::uint32_t, std::size_t> first_seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        const std::string_view token = trim(line);
        if (token.empty()) {
            if (end == text.size()) break;
            continue;
        }
        const std::size_t column = 1 + static_cast<std::size_t>(token.data() - line.data());
        const Vertex v = parse_vertex_at(token, dim, line_no, column);
        if (auto [it, inserted] = first_seen.emplace(v.label, line_no); !inserted) {
            throw ParseError(line_no, column,
                             "duplicate vertex " + std::string(token) + " (first seen on line " +
                                 std::to_string(it->second) + ")");
        }
        out.insert(v);
        if (end == text.size()) break;
    }
    if (first_seen.empty()) {
        throw ParseError(1, 1, "empty input");
    }
    return out;
}

}  // namespace

std::string format_vertex(Vertex v, CubeDim dim) {
    check_vertex(v, dim);
    std::string out(static_cast<std::size_t>(dim.value()), '0');
    for (int i = 0; i < dim.value(); ++i) {
        if ((v.label >> i) & 1u) out[static_cast<std::size_t>(i)] = '1';
    }
    return out;
}

Vertex parse_vertex(std::string_view text, CubeDim dim) { return parse_vertex_at(text, dim, 1, 1); }

std::string format_set_binary(const VertexSet& set) {
    std::string out;
    for (auto v : set.members()) {
        out += format_vertex(v, set.dim());
        out += '\n';
    }
    return out;
}

std::string format_set_hex(const VertexSet& set) {
    static constexpr char kDigits[] = "0123456789ABCDEF";
    const std::size_t digits = hex_digits(set.dim());
    const auto words = set.words();
    std::string out(digits, '0');
    for (std::size_t i = 0; i < digits; ++i) {
        const std::size_t bit = 4 * (digits - 1 - i);
        out[i] = kDigits[(words[bit / 64] >> (bit % 64)) & 0xF];
    }
    return out;
}

VertexSet parse_set(std::string_view text, CubeDim dim, SetFormat format) {
    if (format == SetFormat::Auto) {
        const std::string_view body = trim(text);
        const bool prefixed = body.size() >= 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X');
        const bool hex_shaped = body.size() == hex_digits(dim) &&
                                body.size() != static_cast<std::size_t>(dim.value()) &&
                                std::all_of(body.begin(), body.end(), [](char c) { return hex_value(c) >= 0; });
        format = prefixed || hex_shaped ? SetFormat::Hex : SetFormat::Binary;
    }
    return format == SetFormat::Hex ? parse_hex(text, dim) : parse_binary(text, dim);
}

std::string format_witness(const Witness& w, CubeDim dim) {
    std::string out = std::holds_alternative<Claw>(w) ? "claw" : "cycle";
    for (auto v : witness_vertices(w)) {
        out += ' ';
        out += format_vertex(v, dim);
    }
    return out;
}

Witness parse_witness(std::string_view text, CubeDim dim) {
    std::istringstream in{std::string(text)};
    std::string kind;
    in >> kind;
    std::vector<Vertex> verts;
    std::string token;
    while (in >> token) {
        verts.push_back(parse_vertex(token, dim));
    }
    if (kind == "claw") {
        if (verts.size() != 4) {
            throw ParseError(1, 1, "claw needs exactly 4 vertices");
        }
        return Claw{verts[0], {verts[1], verts[2], verts[3]}};
    }
    if (kind == "cycle") {
        return InducedCycle{std::move(verts)};
    }
    throw ParseError(1, 1, "unknown witness kind '" + kind + "'");
}

}  // namespace clawcycle
