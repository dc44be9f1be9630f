#pragma once

// Text formats: instance input and cdd-style H/V-representation files.

#include <string>
#include <string_view>
#include <vector>

#include "ftpoly/core.hpp"
#include "ftpoly/enumerate.hpp"

namespace ftpoly {

/// Whitespace- or comma-separated integers on one or more lines ('#' lines
/// are comments), or a JSON object {"elements": [...]}. Throws Parse.
/// Returns the raw list; count validation happens in Instance.
std::vector<Element> parse_instance_text(std::string_view text);

/// H-representation: one row "b -a_1 ... -a_2m" per halfspace a.x <= b.
std::string write_ine(const ConstraintSystem& cs);

/// V-representation: one row "1 v_1 ... v_2m" per vertex.
std::string write_ext(const ConstraintSystem& cs, const std::vector<Vertex>& vertices);

/// Reads an H-representation produced by write_ine. Rows may come in any
/// order; the instance is recovered from the knapsack rows and the rebuilt
/// system must reproduce every row exactly. Throws Parse.
ConstraintSystem parse_ine(std::string_view text);

/// True when the text looks like a cdd H-representation.
bool looks_like_ine(std::string_view text);

}  // namespace ftpoly
