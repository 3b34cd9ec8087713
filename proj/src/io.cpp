/*
   Copyright 2026 The torsiongate Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include "torsiongate/io.hpp"

#include <fstream>
#include <sstream>

namespace torsiongate {

json rational_to_json(const Rational& q) { return to_fraction_string(q); }

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (!j.is_string()) throw SpecError(where + ": expected a \"num/den\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception&) {
    throw SpecError(where + ": cannot parse rational \"" + j.get<std::string>() + "\"");
  }
}

json poly_to_json(const PolyQ& f) {
  json a = json::array();
  for (const auto& c : f.coeffs()) a.push_back(rational_to_json(c));
  return a;
}

PolyQ poly_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw SpecError(where + ": expected an array of coefficients");
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return PolyQ(std::move(c));
}

json field_to_json(const NumberField& K) {
  if (K.is_rational()) return json{{"defining_poly", json::array({"0/1", "1/1"})}, {"label", "Q"}};
  return json{{"defining_poly", poly_to_json(K.defining_poly())}, {"label", K.label()}};
}

NumberField field_from_json(const json& j, const FieldOptions& opts, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "Q") return NumberField();
  if (!j.is_object()) throw SpecError(where + ": expected an object or \"Q\"");
  if (!j.contains("defining_poly")) throw SpecError(where + ".defining_poly: missing");
  PolyQ m = poly_from_json(j["defining_poly"], where + ".defining_poly");
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw SpecError(where + ".label: expected a string");
    label = j["label"].get<std::string>();
  }
  if (m.degree() == 1) return NumberField();
  try {
    return nf_create(m, label, opts);
  } catch (const DomainError& e) {
    throw SpecError(where + ".defining_poly: " + e.what());
  }
}

json element_to_json(const FieldElement& a) {
  json c = json::array();
  for (const auto& q : a.coords()) c.push_back(rational_to_json(q));
  return c;
}

FieldElement element_from_json(const NumberField& K, const json& j, const std::string& where) {
  if (!j.is_array()) {
    if (K.is_rational()) return K.from_rational(rational_from_json(j, where));
    throw SpecError(where + ": expected a coordinate array");
  }
  if (static_cast<int>(j.size()) != K.degree())
    throw SpecError(where + ": expected " + std::to_string(K.degree()) + " coordinates, got " +
                    std::to_string(j.size()));
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return K.from_coords(c);
}

json point_to_json(const CurvePoint& P) {
  if (P.infinity) return "infinity";
  return json{{"x", element_to_json(P.x)}, {"y", element_to_json(P.y)}};
}

json curve_to_json(const Curve& E) {
  json a = json::array();
  for (const auto& c : E.a_invariants()) a.push_back(element_to_json(c));
  return json{{"field", field_to_json(E.field())}, {"a_invariants", a}};
}

Curve curve_from_json(const json& j, const FieldOptions& opts, const std::string& where) {
  if (!j.is_object()) throw SpecError(where + ": expected an object");
  NumberField K = j.contains("field") ? field_from_json(j["field"], opts, where + ".field") : NumberField();
  if (!j.contains("a_invariants")) throw SpecError(where + ".a_invariants: missing");
  const json& a = j["a_invariants"];
  if (!a.is_array() || a.size() != 5) throw SpecError(where + ".a_invariants: expected 5 entries");
  std::array<FieldElement, 5> c;
  for (std::size_t i = 0; i < 5; ++i) c[i] = element_from_json(K, a[i], where + ".a_invariants[" + std::to_string(i) + "]");
  try {
    return Curve(K, c);
  } catch (const DomainError& e) {
    throw SpecError(where + ": " + e.what() + " (Delta = 0)");
  }
}

json torsion_to_json(const TorsionData& t) {
  json gens = json::array();
  for (const auto& g : t.generators) gens.push_back(point_to_json(g));
  return json{{"structure", t.structure()}, {"invariants", {t.m, t.n}}, {"order", t.order()},
              {"generators", gens}, {"field", field_to_json(t.field)}};
}

json mat_group_to_json(const MatGroup& G) {
  json gens = json::array();
  int ell = G.order() ? G.elements().front().ell : 0;
  for (const auto& g : generators_or_elements(G)) gens.push_back({g.a, g.b, g.c, g.d});
  return json{{"ell", ell}, {"order", G.order()}, {"generators", gens}};
}

json corpus_to_json(const std::vector<CorpusEntry>& corpus) {
  json out = json::array();
  for (const auto& e : corpus) {
    json exts = json::array();
    for (const auto& x : e.extensions) exts.push_back({{"defining_poly", poly_to_json(x.poly)}, {"label", x.label}});
    json item{{"curve", curve_to_json(e.curve)}, {"extensions", exts}, {"primes", e.primes}};
    if (!e.name.empty()) item["name"] = e.name;
    out.push_back(item);
  }
  return out;
}

std::vector<CorpusEntry> corpus_from_json(const json& j, const FieldOptions& opts) {
  if (!j.is_array()) throw SpecError("corpus: expected an array");
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string w = "corpus[" + std::to_string(i) + "]";
    const json& item = j[i];
    if (!item.is_object() || !item.contains("curve")) throw SpecError(w + ".curve: missing");
    CorpusEntry e{"", curve_from_json(item["curve"], opts, w + ".curve"), {}, {}};
    if (item.contains("name")) e.name = item["name"].get<std::string>();
    const json& exts = item.value("extensions", json::array());
    for (std::size_t k = 0; k < exts.size(); ++k) {
      std::string wk = w + ".extensions[" + std::to_string(k) + "]";
      if (!exts[k].is_object() || !exts[k].contains("defining_poly")) throw SpecError(wk + ".defining_poly: missing");
      ExtensionSpec x{poly_from_json(exts[k]["defining_poly"], wk + ".defining_poly"), exts[k].value("label", "")};
      if (x.poly.degree() < 1) throw SpecError(wk + ".defining_poly: degree must be at least 1");
      e.extensions.push_back(std::move(x));
    }
    const json& primes = item.value("primes", json::array());
    for (std::size_t k = 0; k < primes.size(); ++k) {
      if (!primes[k].is_number_integer()) throw SpecError(w + ".primes[" + std::to_string(k) + "]: expected an integer");
      e.primes.push_back(primes[k].get<int>());
    }
    out.push_back(std::move(e));
  }
  return out;
}

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SpecError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

}  // namespace torsiongate
