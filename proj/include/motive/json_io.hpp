#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "motive/cellular.hpp"
#include "motive/configurations.hpp"
#include "motive/errors.hpp"
#include "motive/flags.hpp"
#include "motive/gbundle.hpp"
#include "motive/l_polynomial.hpp"
#include "motive/tate_sum.hpp"
#include "motive/wonderful.hpp"

// Deterministic JSON encoding for every value the CLI can emit, plus the
// decoders needed to read values back in. Objects serialize with sorted keys
// (nlohmann's default ordering) and every list is built in canonical order,
// so identical values produce identical bytes.

namespace motive {

inline nlohmann::json encode(const LPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [e, c] : p.coefficients()) coeffs.push_back(nlohmann::json::array({e, c}));
  return nlohmann::json{{"coeffs", std::move(coeffs)}};
}

inline LPolynomial decode_lpolynomial(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw UsageError("LPolynomial JSON must be {\"coeffs\":[[exponent,coefficient],...]}");
  }
  LPolynomial out;
  for (const auto& pair : j["coeffs"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw UsageError("LPolynomial coefficient entries must be [exponent, coefficient]");
    }
    out = out + LPolynomial::monomial(pair[0].get<int>(), pair[1].get<std::int64_t>());
  }
  return out;
}

inline nlohmann::json encode(const TateSum& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, mult] : s.terms()) {
    terms.push_back(nlohmann::json{{"twist", key.first}, {"shift", key.second}, {"mult", mult}});
  }
  return nlohmann::json{{"terms", std::move(terms)}};
}

inline TateSum decode_tate_sum(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw UsageError("TateSum JSON must be {\"terms\":[{\"twist\":p,\"shift\":q,\"mult\":m},...]}");
  }
  TateSum out;
  for (const auto& term : j["terms"]) {
    if (!term.is_object() || !term.contains("twist") || !term.contains("shift") ||
        !term.contains("mult")) {
      throw UsageError("TateSum terms must carry twist, shift and mult");
    }
    out = out + TateSum::of(term["twist"].get<int>(), term["shift"].get<int>(),
                            term["mult"].get<std::int64_t>());
  }
  return out;
}

inline nlohmann::json encode(const CellDecomposition& d) {
  nlohmann::json cells = nlohmann::json::array();
  for (const Cell& c : d.cells()) cells.push_back(nlohmann::json{{"dim", c.dim}, {"label", c.label}});
  return nlohmann::json{{"cells", std::move(cells)}};
}

inline CellDecomposition decode_cell_decomposition(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array()) {
    throw UsageError("cell decomposition JSON must be {\"cells\":[{\"dim\":d,\"label\":...},...]}");
  }
  std::vector<Cell> cells;
  for (const auto& c : j["cells"]) {
    if (!c.is_object() || !c.contains("dim")) throw UsageError("each cell needs a dim field");
    cells.push_back(Cell{c["dim"].get<int>(), c.value("label", std::string())});
  }
  if (cells.empty()) throw UsageError("cell decomposition JSON must list at least one cell");
  return CellDecomposition::make(std::move(cells));
}

inline nlohmann::json encode(const RelativeCellFiltration& f) {
  nlohmann::json strata = nlohmann::json::array();
  for (const Stratum& s : f.strata()) {
    strata.push_back(nlohmann::json{{"base", encode(s.base)}, {"twist", s.twist}, {"label", s.label}});
  }
  return nlohmann::json{{"strata", std::move(strata)}};
}

inline RelativeCellFiltration decode_relative_filtration(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("strata") || !j["strata"].is_array()) {
    throw UsageError("filtration JSON must be {\"strata\":[{\"base\":...,\"twist\":d},...]}");
  }
  std::vector<Stratum> strata;
  for (const auto& s : j["strata"]) {
    if (!s.is_object() || !s.contains("base") || !s.contains("twist")) {
      throw UsageError("each stratum needs base and twist fields");
    }
    strata.push_back(Stratum{decode_tate_sum(s["base"]), s["twist"].get<int>(),
                             s.value("label", std::string())});
  }
  if (strata.empty()) throw UsageError("filtration JSON must list at least one stratum");
  return RelativeCellFiltration::make(std::move(strata));
}

inline nlohmann::json encode(const Configuration& c) {
  nlohmann::json components = nlohmann::json::array();
  for (const ConfigComponent& comp : c.components()) {
    components.push_back(nlohmann::json{{"name", comp.name}, {"class", encode(comp.cls)}});
  }
  nlohmann::json intersections = nlohmann::json::array();
  for (const auto& [mask, cls] : c.intersections()) {
    nlohmann::json subset = nlohmann::json::array();
    for (int i = 0; i < 32; ++i) {
      if (mask & (1u << i)) subset.push_back(i + 1);
    }
    nlohmann::json entry{{"subset", std::move(subset)}};
    if (cls.has_value()) {
      entry["class"] = encode(*cls);
    } else {
      entry["class"] = "empty";
    }
    intersections.push_back(std::move(entry));
  }
  return nlohmann::json{{"components", std::move(components)},
                        {"intersections", std::move(intersections)}};
}

inline Configuration decode_configuration(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array()) {
    throw UsageError("configuration JSON must carry a components array");
  }
  std::vector<ConfigComponent> components;
  for (const auto& comp : j["components"]) {
    if (!comp.is_object() || !comp.contains("class")) {
      throw UsageError("each configuration component needs a class field");
    }
    components.push_back(
        ConfigComponent{comp.value("name", std::string()), decode_lpolynomial(comp["class"])});
  }
  const int m = static_cast<int>(components.size());
  Configuration::IntersectionMap intersections;
  if (j.contains("intersections")) {
    if (!j["intersections"].is_array()) throw UsageError("intersections must be an array");
    for (const auto& entry : j["intersections"]) {
      if (!entry.is_object() || !entry.contains("subset") || !entry["subset"].is_array() ||
          !entry.contains("class")) {
        throw UsageError("each intersection needs subset and class fields");
      }
      std::uint32_t mask = 0;
      for (const auto& idx : entry["subset"]) {
        if (!idx.is_number_integer()) throw UsageError("intersection subsets list 1-based indices");
        const int i = idx.get<int>();
        if (i < 1 || i > m) {
          throw UsageError("intersection subset index " + std::to_string(i) +
                           " out of range 1.." + std::to_string(m));
        }
        mask |= 1u << (i - 1);
      }
      if (entry["class"].is_string() && entry["class"].get<std::string>() == "empty") {
        intersections[mask] = std::nullopt;
      } else {
        intersections[mask] = decode_lpolynomial(entry["class"]);
      }
    }
  }
  return Configuration::make(std::move(components), std::move(intersections));
}

inline nlohmann::json encode(const Face& f) {
  nlohmann::json subset = nlohmann::json::array();
  for (int i : f.subset.indices()) subset.push_back(i);
  return nlohmann::json{{"subset", std::move(subset)}, {"dim", f.dim}, {"codim", f.codim}};
}

inline nlohmann::json encode(const FiltrationNode& node) {
  nlohmann::json children = nlohmann::json::array();
  for (const FiltrationNode& child : node.children) children.push_back(encode(child));
  return nlohmann::json{{"face", encode(node.face)},   {"middle", encode(node.middle)},
                        {"left", encode(node.left)},   {"right", encode(node.right)},
                        {"verdict", "ok"},             {"children", std::move(children)}};
}

inline nlohmann::json encode(const TorusFiltration& f) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const TorusFiltrationPiece& piece : f.pieces) {
    pieces.push_back(
        nlohmann::json{{"p", piece.p}, {"rank", piece.rank}, {"piece", encode(piece.piece)}});
  }
  return nlohmann::json{{"torus_rank", f.torus_rank}, {"pieces", std::move(pieces)}};
}

// Every emitted document carries the schema tag and serializes with sorted
// keys, so reruns are byte-identical.
inline std::string emit_document(nlohmann::json body) {
  body["schema"] = "motive-forge/1";
  return body.dump();
}

}  // namespace motive
