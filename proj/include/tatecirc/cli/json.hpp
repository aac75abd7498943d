// Copyright 2026 The tatecirc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "tatecirc/cli/evaluator.hpp"
#include "tatecirc/cli/parser.hpp"
#include "tatecirc/report.hpp"

/// JSON encodings of reports, series and errors. Key order is fixed so equal
/// inputs give byte-identical output.
namespace tatecirc::cli {

using Json = nlohmann::ordered_json;

inline Json to_json(const Check& c) {
  Json j;
  j["identity"] = c.identity;
  j["status"] = c.pass ? "pass" : "fail";
  if (c.first_defect)
    j["firstDefect"] = Json{{"index", c.first_defect->index},
                            {"expected", c.first_defect->expected},
                            {"actual", c.first_defect->actual}};
  if (c.note) j["note"] = *c.note;
  return j;
}

inline Json to_json(const Report& r) {
  Json j;
  j["suite"] = r.suite;
  j["order"] = r.order;
  j["seed"] = r.seed;
  j["pass"] = r.pass();
  j["checks"] = Json::array();
  for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
  j["notes"] = r.notes;
  return j;
}

/// Laurent polynomial as [[exponent, numerator, denominator], ...].
inline Json to_json(const LaurentPoly& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p.terms()) a.push_back(Json{e, c.numerator().get_str(), c.denominator().get_str()});
  return a;
}

template <CoefficientRing R, class Render>
Json series_json(const TruncSeries<R>& s, Render render) {
  Json j;
  j["ring"] = s.ring().name;
  j["low"] = s.low();
  j["order"] = s.order();
  j["coeffs"] = Json::array();
  for (long k = s.low(); k <= s.order(); ++k) j["coeffs"].push_back(render(s[k]));
  return j;
}

inline Json to_json(const expansions::LaurentSeriesZ& s) {
  Json j;
  j["puncture"] = expansions::puncture_name(s.puncture);
  j["variable"] = s.var();
  j["low"] = s.low();
  j["order"] = s.order();
  j["coeffs"] = Json::array();
  for (long k = s.low(); k <= s.order(); ++k) j["coeffs"].push_back(s.coeff(k).get_str());
  return j;
}

inline Json to_json(const ParseError& e) {
  return Json{{"error", Json{{"kind", to_string(e.kind())},
                             {"offset", e.offset()},
                             {"message", e.detail()},
                             {"expected", e.expected()}}}};
}

inline Json value_json(const std::string& input, const Value& v) {
  Json j;
  j["input"] = input;
  j["kind"] = kind_name(v);
  j["value"] = render(v);
  if (const auto* s = std::get_if<SeriesValue>(&v))
    j["series"] = series_json(s->s, [](const MultiPoly& p) { return detail::render_coefficient(p); });
  else if (const auto* p = std::get_if<LaurentPoly>(&v))
    j["terms"] = to_json(*p);
  else if (const auto* k = std::get_if<tate_k::TateKElem>(&v))
    j["terms"] = Json{{"numerator", to_json(k->numerator())}, {"poleOrder", k->denom_power()}};
  else if (const auto* e = std::get_if<expansions::LaurentSeriesZ>(&v))
    j["series"] = to_json(*e);
  return j;
}

}  // namespace tatecirc::cli
