#pragma once

// Text forms.
//
// A vertex prints as its coordinates alpha_1 alpha_2 ... alpha_n, so the
// least-significant label bit comes first: label 1 in Q_4 is "1000".
// A set prints either as one vertex per line or as a hex mask of
// ceil(2^n / 4) digits, most-significant digit first, bit v = vertex v.
// Example: the set {4, 5, 6, 7} in Q_4 is "00F0".

#include <string>
#include <string_view>

#include "clawcycle/detect.hpp"
#include "clawcycle/hypercube.hpp"

namespace clawcycle {

enum class SetFormat { Auto, Binary, Hex };

std::string format_vertex(Vertex v, CubeDim dim);
Vertex parse_vertex(std::string_view text, CubeDim dim);

std::string format_set_binary(const VertexSet& set);
std::string format_set_hex(const VertexSet& set);

/// Auto picks hex for a leading "0x", or for a single hex-length token that
/// cannot be a binary vertex; otherwise binary lines. Blank lines are
/// ignored. Errors carry a line/column position.
VertexSet parse_set(std::string_view text, CubeDim dim, SetFormat format = SetFormat::Auto);

/// "claw c l l l" or "cycle v1 ... vk".
std::string format_witness(const Witness& w, CubeDim dim);
Witness parse_witness(std::string_view text, CubeDim dim);

}  // namespace clawcycle
