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


#ifndef TORSIONGATE_IO_HPP
#define TORSIONGATE_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "torsiongate/ellcurve.hpp"
#include "torsiongate/errors.hpp"
#include "torsiongate/finitegroups.hpp"
#include "torsiongate/numfield.hpp"

namespace torsiongate {

/// Malformed input file; the message names the offending path, e.g. "curve.a_invariants[3]".
class SpecError : public Error {
 public:
  using Error::Error;
};

using nlohmann::json;

json rational_to_json(const Rational& q);  // "num/den"
Rational rational_from_json(const json& j, const std::string& where = "value");

json poly_to_json(const PolyQ& f);
PolyQ poly_from_json(const json& j, const std::string& where = "poly");

/// {"defining_poly": [...], "label": ...}. The string "Q" is accepted for the rationals.
json field_to_json(const NumberField& K);
NumberField field_from_json(const json& j, const FieldOptions& opts = {}, const std::string& where = "field");

json element_to_json(const FieldElement& a);
FieldElement element_from_json(const NumberField& K, const json& j, const std::string& where = "element");

json point_to_json(const CurvePoint& P);

/// {"field": field spec, "a_invariants": [5 coordinate arrays]}. Integers and
/// "num/den" strings are also accepted for a-invariants over Q.
json curve_to_json(const Curve& E);
Curve curve_from_json(const json& j, const FieldOptions& opts = {}, const std::string& where = "curve");

json torsion_to_json(const TorsionData& t);
json mat_group_to_json(const MatGroup& G);

struct ExtensionSpec {
  PolyQ poly;  // defining polynomial over the curve's field
  std::string label;
};

struct CorpusEntry {
  std::string name;
  Curve curve;
  std::vector<ExtensionSpec> extensions;
  std::vector<int> primes;
};

json corpus_to_json(const std::vector<CorpusEntry>& corpus);
std::vector<CorpusEntry> corpus_from_json(const json& j, const FieldOptions& opts = {});

/// Parses text, turning syntax errors into SpecError with line and column.
json parse_json_text(const std::string& text, const std::string& source = "input");
json read_json_file(const std::string& path);

}  // namespace torsiongate

#endif  // TORSIONGATE_IO_HPP
