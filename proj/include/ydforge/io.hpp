#pragma once

#include <string>

#include "ydforge/leibniz.hpp"

namespace ydforge {

/// Thrown on malformed algebra files; the message carries field context.
struct AlgebraParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reads { "n": int, "chirality": "left"|"right", "brackets": [ { "i":
/// int, "j": int, "coeffs": { "<k>": "<p/q>" } } ] }; 1-based indices,
/// rationals as strings, omitted brackets are zero.
LeibnizAlgebra load_algebra(const std::string& path);
LeibnizAlgebra parse_algebra_json(const std::string& text);

std::string algebra_to_json(const LeibnizAlgebra& alg);
void save_algebra(const LeibnizAlgebra& alg, const std::string& path);

}  // namespace ydforge
