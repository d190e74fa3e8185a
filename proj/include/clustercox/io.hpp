#pragma once

// JSON and text input for matrices and orientations. Vertex indices are
// 1-based in all external formats.

#include "json.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "clustercox/cartan.hpp"
#include "clustercox/catalog.hpp"
#include "clustercox/errors.hpp"
#include "clustercox/quiver.hpp"

namespace clustercox::io {

using json = nlohmann::ordered_json;

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw StructuralError(std::string("malformed JSON: ") + e.what());
  }
}

inline SquareMatrix matrix_from_json(const json& j, std::optional<std::size_t> n = std::nullopt) {
  detail::require(j.is_array() && !j.empty(), "matrix must be a non-empty array of rows");
  std::vector<std::vector<SquareMatrix::value_type>> rows;
  for (const auto& row : j) {
    detail::require(row.is_array(), "matrix rows must be arrays");
    std::vector<SquareMatrix::value_type> r;
    for (const auto& v : row) {
      detail::require(v.is_number_integer(), "matrix entries must be integers");
      r.push_back(v.get<SquareMatrix::value_type>());
    }
    rows.push_back(std::move(r));
  }
  if (n) detail::require(rows.size() == *n, "matrix size differs from \"n\"");
  return SquareMatrix::from_rows(rows);
}

/// Either a bare matrix, or {"n": int, "b": [[...]]} / {"n": int, "a": [[...]]}.
struct MatrixInput {
  enum class Kind { exchange, cartan } kind = Kind::exchange;
  SquareMatrix m;
  std::optional<json> orientation;  // "orientation" member of an object input
  std::optional<std::string> type;  // "type" member of an object input
};

inline MatrixInput matrix_input(const json& j, MatrixInput::Kind bare_kind) {
  MatrixInput in;
  in.kind = bare_kind;
  if (j.is_array()) {
    in.m = matrix_from_json(j);
    return in;
  }
  detail::require(j.is_object(), "matrix input must be an array or an object");
  std::optional<std::size_t> n;
  if (j.contains("n")) {
    detail::require(j["n"].is_number_unsigned(), "\"n\" must be a positive integer");
    n = j["n"].get<std::size_t>();
  }
  if (j.contains("orientation")) in.orientation = j["orientation"];
  if (j.contains("type")) {
    detail::require(j["type"].is_string(), "\"type\" must be a string");
    in.type = j["type"].get<std::string>();
  }
  const bool has_b = j.contains("b"), has_a = j.contains("a");
  detail::require(!(has_a && has_b), "give either \"a\" or \"b\", not both");
  if (has_b) {
    in.kind = MatrixInput::Kind::exchange;
    in.m = matrix_from_json(j["b"], n);
  } else if (has_a) {
    in.kind = MatrixInput::Kind::cartan;
    in.m = matrix_from_json(j["a"], n);
  } else {
    detail::require(in.type.has_value(), "object input needs \"b\", \"a\" or \"type\"");
  }
  return in;
}

inline std::size_t vertex(std::int64_t one_based, std::size_t n) {
  detail::require(one_based >= 1 && static_cast<std::size_t>(one_based) <= n,
                  "vertex " + std::to_string(one_based) + " out of range 1.." + std::to_string(n));
  return static_cast<std::size_t>(one_based - 1);
}

inline ValuedQuiver orientation_from_json(const CartanMatrix& a, const json& j) {
  detail::require(j.is_object() && j.contains("edges") && j["edges"].is_array(),
                  "orientation JSON must be {\"edges\": [[from, to], ...]}");
  std::vector<Arrow> arrows;
  for (const auto& e : j["edges"]) {
    detail::require(e.is_array() && e.size() == 2 && e[0].is_number_integer() && e[1].is_number_integer(),
                    "each edge must be [from, to]");
    arrows.emplace_back(vertex(e[0].get<std::int64_t>(), a.size()), vertex(e[1].get<std::int64_t>(), a.size()));
  }
  return ValuedQuiver(a, arrows);
}

/// "default" (edges point to the smaller index), "bipartite" (the class of
/// vertex 1 are sinks), "bipartite-dual", a JSON edge list, or chains such
/// as "3,2,1-path" (3 -> 2 -> 1); several chains are separated by ';'.
inline ValuedQuiver parse_orientation(const CartanMatrix& a, const std::string& text) {
  std::string t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  if (t.empty() || t == "default") return default_orientation(a);
  if (t == "bipartite" || t == "bipartite-dual") {
    auto q = bipartite_orientation(a, t == "bipartite-dual");
    detail::require(q.has_value(), "Coxeter graph is not bipartite");
    return *q;
  }
  if (t.front() == '{') return orientation_from_json(a, parse_json(t));
  std::vector<Arrow> arrows;
  std::stringstream chains(t);
  std::string chain;
  while (std::getline(chains, chain, ';')) {
    const std::string suffix = "-path";
    if (chain.size() >= suffix.size() && chain.compare(chain.size() - suffix.size(), suffix.size(), suffix) == 0)
      chain.erase(chain.size() - suffix.size());
    std::vector<std::size_t> verts;
    std::stringstream parts(chain);
    std::string part;
    while (std::getline(parts, part, ',')) {
      try {
        std::size_t used = 0;
        const long long v = std::stoll(part, &used);
        while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used]))) ++used;
        detail::require(used == part.size(), "bad vertex '" + part + "' in orientation");
        verts.push_back(vertex(v, a.size()));
      } catch (const std::logic_error&) {
        throw StructuralError("bad vertex '" + part + "' in orientation '" + text + "'");
      }
    }
    detail::require(verts.size() >= 2, "orientation chain needs at least two vertices");
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) arrows.emplace_back(verts[i], verts[i + 1]);
  }
  return ValuedQuiver(a, arrows);
}

inline json matrix_json(const SquareMatrix& m) { return m.rows(); }

}  // namespace clustercox::io
