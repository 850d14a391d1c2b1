#include "ydforge/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ydforge {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) { throw AlgebraParseError("algebra file: " + what); }

}  // namespace

LeibnizAlgebra parse_algebra_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("top level must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) fail("missing integer field 'n'");
  const int n = j["n"].get<int>();
  if (n < 1 || n > 16) fail("dimension n out of supported range [1,16]");
  if (!j.contains("chirality") || !j["chirality"].is_string()) fail("missing field 'chirality'");
  const std::string ch = j["chirality"].get<std::string>();
  if (ch != "left" && ch != "right") fail("chirality must be \"left\" or \"right\"");

  LeibnizAlgebra alg = LeibnizAlgebra::zero(n, ch == "left" ? Chirality::left : Chirality::right);
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) fail("'brackets' must be an array");
    std::vector<std::vector<bool>> seen(static_cast<size_t>(n),
                                        std::vector<bool>(static_cast<size_t>(n), false));
    for (const auto& b : j["brackets"]) {
      if (!b.is_object()) fail("bracket entries must be objects");
      if (!b.contains("i") || !b.contains("j") || !b["i"].is_number_integer() ||
          !b["j"].is_number_integer())
        fail("bracket entry needs integer fields 'i' and 'j'");
      const int i = b["i"].get<int>(), jj = b["j"].get<int>();
      if (i < 1 || i > n || jj < 1 || jj > n)
        fail("bracket index (" + std::to_string(i) + "," + std::to_string(jj) + ") out of range");
      if (seen[static_cast<size_t>(i - 1)][static_cast<size_t>(jj - 1)])
        fail("duplicate bracket entry for (" + std::to_string(i) + "," + std::to_string(jj) + ")");
      seen[static_cast<size_t>(i - 1)][static_cast<size_t>(jj - 1)] = true;
      if (!b.contains("coeffs") || !b["coeffs"].is_object())
        fail("bracket entry needs an object field 'coeffs'");
      for (const auto& [key, value] : b["coeffs"].items()) {
        int k = 0;
        try {
          k = std::stoi(key);
        } catch (...) {
          fail("coefficient key '" + key + "' is not an integer");
        }
        if (k < 1 || k > n) fail("coefficient index " + key + " out of range for n=" + std::to_string(n));
        if (!value.is_string()) fail("coefficient values must be rational strings");
        try {
          alg.c_at(k - 1, i - 1, jj - 1) = Rational::parse(value.get<std::string>());
        } catch (const std::exception& e) {
          fail("bad rational '" + value.get<std::string>() + "' at bracket (" + std::to_string(i) +
               "," + std::to_string(jj) + "): " + e.what());
        }
      }
    }
  }
  return alg;
}

LeibnizAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_json(buf.str());
}

std::string algebra_to_json(const LeibnizAlgebra& alg) {
  ordered_json j;
  j["n"] = alg.n;
  j["chirality"] = to_string(alg.chirality);
  ordered_json brackets = ordered_json::array();
  for (int i = 0; i < alg.n; ++i)
    for (int jj = 0; jj < alg.n; ++jj) {
      ordered_json coeffs = ordered_json::object();
      for (int k = 0; k < alg.n; ++k)
        if (!alg.c_at(k, i, jj).is_zero()) coeffs[std::to_string(k + 1)] = alg.c_at(k, i, jj).str();
      if (!coeffs.empty())
        brackets.push_back({{"i", i + 1}, {"j", jj + 1}, {"coeffs", coeffs}});
    }
  j["brackets"] = std::move(brackets);
  return j.dump(2) + "\n";
}

void save_algebra(const LeibnizAlgebra& alg, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail("cannot write '" + path + "'");
  out << algebra_to_json(alg);
}

}  // namespace ydforge
