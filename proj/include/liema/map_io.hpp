// JSON description of a polynomial map:
//   {"n_in": n, "components": [[{"re": .., "im": .., "exp": [e1,..,en]}, ..], ..]}
#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "liema/holo_maps.hpp"

namespace liema {

inline PolynomialMap parse_map_json(const nlohmann::json& doc) {
  if (!doc.contains("n_in") || !doc["n_in"].is_number_integer())
    throw std::invalid_argument("map json: missing integer field \"n_in\"");
  if (!doc.contains("components") || !doc["components"].is_array())
    throw std::invalid_argument("map json: missing array field \"components\"");
  const std::size_t n_in = doc["n_in"].get<std::size_t>();
  std::vector<std::vector<PolyTerm>> comps;
  std::size_t ci = 0;
  for (const auto& comp : doc["components"]) {
    if (!comp.is_array())
      throw std::invalid_argument("map json: component " + std::to_string(ci) +
                                  " is not an array of terms");
    std::vector<PolyTerm> terms;
    std::size_t ti = 0;
    for (const auto& term : comp) {
      const auto where = "component " + std::to_string(ci) + ", term " +
                         std::to_string(ti);
      if (!term.is_object() || !term.contains("re") || !term.contains("im") ||
          !term.contains("exp"))
        throw std::invalid_argument("map json: " + where +
                                    " must have fields re, im, exp");
      if (!term["exp"].is_array() || term["exp"].size() != n_in)
        throw std::invalid_argument("map json: " + where +
                                    ": exp must have n_in entries");
      PolyTerm t;
      t.coeff = cplx(term["re"].get<double>(), term["im"].get<double>());
      for (const auto& e : term["exp"]) {
        const int ev = e.get<int>();
        if (ev < 0)
          throw std::invalid_argument("map json: " + where +
                                      ": exponents must be nonnegative");
        t.exponents.push_back(ev);
      }
      terms.push_back(std::move(t));
      ++ti;
    }
    comps.push_back(std::move(terms));
    ++ci;
  }
  return PolynomialMap::make(n_in, std::move(comps));
}

inline PolynomialMap load_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open map file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("map file " + path + ": " + e.what());
  }
  return parse_map_json(doc);
}

}  // namespace liema
