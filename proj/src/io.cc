// Copyright 2026 The PMI Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pmi/io.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace pmi {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) fail(where, "expected an integer");
  return value.get<int>();
}

// Shortest decimal form of a JSON float, possibly with an exponent.
Rational decimal_with_exponent(const std::string& text) {
  const auto e = text.find_first_of("eE");
  if (e == std::string::npos) return parse_rational(text);
  Rational mantissa = parse_rational(text.substr(0, e));
  const int exponent = std::stoi(text.substr(e + 1));
  mpz_class scale = 1;
  for (int i = 0; i < std::abs(exponent); ++i) scale *= 10;
  Rational out = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa / scale);
  out.canonicalize();
  return out;
}

Rational as_rational(const json& value, const std::string& where) {
  try {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.dump());
    if (value.is_number_float()) return decimal_with_exponent(value.dump());
  } catch (const std::invalid_argument& err) {
    fail(where, err.what());
  }
  fail(where, "expected a number or a rational string");
}

std::optional<Rational> as_bound(const json& value, bool upper, const std::string& where) {
  if (value.is_string()) {
    try {
      return parse_bound(value.get<std::string>(), upper);
    } catch (const std::invalid_argument& err) {
      fail(where, err.what());
    }
  }
  return as_rational(value, where);
}

ElementSet as_set(const json& value, const std::string& where) {
  if (!value.is_array()) fail(where, "expected an array of element ids");
  ElementSet out;
  for (const json& x : value) out.push_back(as_int(x, where));
  std::sort(out.begin(), out.end());
  return out;
}

Matroid parse_matroid(const json& spec) {
  const std::string where = "matroid";
  const json& type_field = field(spec, "type", where);
  if (!type_field.is_string()) fail(where + ".type", "expected a string");
  const std::string type = type_field.get<std::string>();
  try {
    if (type == "graphic") {
      const int vertices = as_int(field(spec, "vertices", where), where + ".vertices");
      const json& edges = field(spec, "edges", where);
      if (!edges.is_array()) fail(where + ".edges", "expected an array");
      std::vector<std::pair<int, int>> endpoints;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string at = where + ".edges[" + std::to_string(i) + "]";
        if (!edges[i].is_array() || edges[i].size() != 2) fail(at, "expected [u, v]");
        endpoints.emplace_back(as_int(edges[i][0], at), as_int(edges[i][1], at));
      }
      return Matroid::graphic(vertices, std::move(endpoints));
    }
    if (type == "uniform") {
      return Matroid::uniform(as_int(field(spec, "size", where), where + ".size"),
                              as_int(field(spec, "rank", where), where + ".rank"));
    }
    if (type == "partition") {
      const json& blocks = field(spec, "blocks", where);
      const json& capacities = field(spec, "capacities", where);
      if (!blocks.is_array() || !capacities.is_array()) fail(where, "blocks and capacities must be arrays");
      std::vector<int> block_of;
      std::vector<int> capacity;
      for (const json& b : blocks) block_of.push_back(as_int(b, where + ".blocks"));
      for (const json& c : capacities) capacity.push_back(as_int(c, where + ".capacities"));
      return Matroid::partition(std::move(block_of), std::move(capacity));
    }
    if (type == "explicit") {
      const int size = as_int(field(spec, "size", where), where + ".size");
      const json& bases = field(spec, "bases", where);
      if (!bases.is_array()) fail(where + ".bases", "expected an array");
      std::vector<ElementSet> sets;
      for (const json& b : bases) sets.push_back(as_set(b, where + ".bases"));
      return Matroid::explicit_bases(size, sets);
    }
  } catch (const std::invalid_argument& err) {
    fail(where, err.what());
  }
  fail(where + ".type", "unknown matroid family '" + type + "'");
}

json matroid_to_json(const Matroid& matroid) {
  return std::visit(
      [](const auto& family) -> json {
        using T = std::decay_t<decltype(family)>;
        if constexpr (std::is_same_v<T, GraphicFamily>) {
          json edges = json::array();
          for (const auto& [u, v] : family.endpoints) edges.push_back({u, v});
          return {{"type", "graphic"}, {"vertices", family.num_vertices}, {"edges", edges}};
        } else if constexpr (std::is_same_v<T, UniformFamily>) {
          return {{"type", "uniform"}, {"size", family.size}, {"rank", family.rank}};
        } else if constexpr (std::is_same_v<T, PartitionFamily>) {
          return {{"type", "partition"},
                  {"blocks", family.block_of},
                  {"capacities", family.capacity}};
        } else {
          json bases = json::array();
          for (std::uint32_t mask : family.bases) {
            json basis = json::array();
            for (int e = 0; e < family.size; ++e) {
              if ((mask >> e) & 1U) basis.push_back(e);
            }
            bases.push_back(basis);
          }
          return {{"type", "explicit"}, {"size", family.size}, {"bases", bases}};
        }
      },
      matroid.family());
}

json set_to_json(const ElementSet& set) {
  json out = json::array();
  for (Element e : set) out.push_back(e);
  return out;
}

}  // namespace

MatroidInstance parse_instance(const json& doc) {
  if (!doc.is_object()) fail("instance", "expected an object");
  Matroid matroid = parse_matroid(field(doc, "matroid", "instance"));
  const int m = matroid.ground_size();

  const json& weights_field = field(doc, "weights", "instance");
  if (!weights_field.is_array()) fail("weights", "expected an array");
  if (static_cast<int>(weights_field.size()) != m) {
    fail("weights", "weight count " + std::to_string(weights_field.size()) +
                        " does not match the ground set size " + std::to_string(m));
  }
  Weights weights;
  for (std::size_t i = 0; i < weights_field.size(); ++i) {
    const std::string at = "weights[" + std::to_string(i) + "]";
    const json& w = weights_field[i];
    if (w.is_array() && w.size() == 2) {
      weights.push_back({as_rational(w[0], at), as_rational(w[1], at)});
    } else {
      weights.push_back({as_rational(field(w, "a", at), at + ".a"),
                         as_rational(field(w, "b", at), at + ".b")});
    }
  }

  std::vector<std::string> names;
  if (const auto it = doc.find("names"); it != doc.end()) {
    if (!it->is_array()) fail("names", "expected an array of strings");
    for (const json& n : *it) {
      if (!n.is_string()) fail("names", "expected an array of strings");
      names.push_back(n.get<std::string>());
    }
  }

  const int ell = as_int(field(doc, "ell", "instance"), "ell");
  Interval interval = Interval::real_line();
  if (const auto it = doc.find("interval"); it != doc.end()) {
    if (!it->is_object()) fail("interval", "expected an object with lo and hi");
    if (const auto lo = it->find("lo"); lo != it->end()) interval.lo = as_bound(*lo, false, "interval.lo");
    if (const auto hi = it->find("hi"); hi != it->end()) interval.hi = as_bound(*hi, true, "interval.hi");
  }

  MatroidInstance instance{std::move(matroid), std::move(weights), ell, interval, std::move(names)};
  try {
    validate_instance(instance);
  } catch (const InvalidInstance& err) {
    fail("instance", err.what());
  }
  return instance;
}

MatroidInstance parse_instance_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("malformed JSON: ") + err.what());
  }
  return parse_instance(doc);
}

MatroidInstance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance_text(buffer.str());
  } catch (const ParseError& err) {
    throw ParseError(path + ": " + err.what());
  }
}

json instance_to_json(const MatroidInstance& instance) {
  json weights = json::array();
  for (const ParametricWeight& w : instance.weights) {
    weights.push_back({{"a", format_rational(w.a)}, {"b", format_rational(w.b)}});
  }
  json doc = {{"matroid", matroid_to_json(instance.matroid)},
              {"weights", weights},
              {"ell", instance.ell},
              {"interval",
               {{"lo", format_bound(instance.interval.lo, false)},
                {"hi", format_bound(instance.interval.hi, true)}}}};
  if (!instance.names.empty()) doc["names"] = instance.names;
  return doc;
}

json verification_to_json(const VerificationReport& report) {
  json failures = json::array();
  for (const SampleCheck& f : report.failures) {
    failures.push_back({{"lambda", format_rational(f.lambda)},
                        {"source", f.source},
                        {"expected", f.expected.to_string()},
                        {"reported", f.reported.to_string()},
                        {"value_ok", f.value_ok},
                        {"label_ok", f.label_ok}});
  }
  return {{"passed", report.passed},
          {"samples", report.samples},
          {"value_mismatches", report.value_mismatches},
          {"label_mismatches", report.label_mismatches},
          {"failures", failures}};
}

json solution_to_json(const InterdictionSolution& solution, const MatroidInstance& instance,
                      const VerificationReport* verification) {
  json segments = json::array();
  for (const Segment& s : solution.segments) {
    json seg = {{"lo", format_bound(s.span.lo, false)},
                {"hi", format_bound(s.span.hi, true)},
                {"slope", s.piece.line ? format_rational(s.piece.line->slope) : "0/1"},
                {"intercept", s.piece.line ? format_rational(s.piece.line->intercept) : "inf"},
                {"f_star", set_to_json(s.piece.label)},
                {"basis", set_to_json(s.basis)}};
    if (!instance.names.empty()) {
      json names = json::array();
      for (Element e : s.piece.label) names.push_back(instance.names[e]);
      seg["f_star_names"] = names;
    }
    segments.push_back(std::move(seg));
  }
  json changepoints = json::array();
  for (const Changepoint& c : solution.changepoints) {
    changepoints.push_back({{"lambda", format_rational(c.lambda)}, {"kind", to_string(c.kind)}});
  }
  json doc = {{"segments", segments},
              {"changepoints", changepoints},
              {"meta",
               {{"algorithm", to_string(solution.algorithm)},
                {"oracle_calls", solution.oracle_calls},
                {"wall_time_ms", solution.wall_seconds * 1000.0},
                {"m", instance.ground_size()},
                {"ell", instance.ell},
                {"cells", solution.stats.cells},
                {"events", solution.stats.events},
                {"coincident_ties", solution.stats.coincident_ties}}}};
  if (verification != nullptr) doc["verification"] = verification_to_json(*verification);
  return doc;
}

SolutionFile parse_solution(const json& doc) {
  const json& segments = field(doc, "segments", "solution");
  if (!segments.is_array() || segments.empty()) fail("segments", "expected a non-empty array");
  Interval domain;
  std::vector<Rational> breaks;
  std::vector<Piece> pieces;
  SolutionFile out{PiecewiseLinear::single(Interval::real_line(), Piece::infinite({})), {}, {}};
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const std::string at = "segments[" + std::to_string(i) + "]";
    const json& s = segments[i];
    const auto lo = as_bound(field(s, "lo", at), false, at + ".lo");
    const auto hi = as_bound(field(s, "hi", at), true, at + ".hi");
    if (i == 0) domain.lo = lo;
    if (i + 1 == segments.size()) domain.hi = hi;
    if (i > 0) {
      if (!lo) fail(at + ".lo", "only the first segment may start at -inf");
      breaks.push_back(*lo);
    }
    ElementSet label = as_set(field(s, "f_star", at), at + ".f_star");
    const json& intercept = field(s, "intercept", at);
    if (intercept.is_string() && intercept.get<std::string>() == "inf") {
      pieces.push_back(Piece::infinite(std::move(label)));
    } else {
      pieces.push_back(Piece::finite(Line{as_rational(field(s, "slope", at), at + ".slope"),
                                          as_rational(intercept, at + ".intercept")},
                                     std::move(label)));
    }
    out.bases.push_back(as_set(field(s, "basis", at), at + ".basis"));
  }
  try {
    out.y = PiecewiseLinear(domain, std::move(breaks), std::move(pieces));
  } catch (const std::invalid_argument& err) {
    fail("segments", err.what());
  }
  if (const auto it = doc.find("changepoints"); it != doc.end() && it->is_array()) {
    for (const json& c : *it) {
      const std::string kind = field(c, "kind", "changepoints").get<std::string>();
      out.changepoints.emplace_back(as_rational(field(c, "lambda", "changepoints"), "changepoints"),
                                    kind == "breakpoint" ? ChangepointKind::kBreakpoint
                                                         : ChangepointKind::kInterdictionPoint);
    }
  }
  return out;
}

std::vector<PlotRow> plot_rows(const InterdictionSolution& solution, const Rational& step,
                               const Rational& lo, const Rational& hi) {
  if (step <= 0) throw std::invalid_argument("plot step must be positive");
  if (lo > hi) throw std::invalid_argument("plot range has lo > hi");
  std::set<Rational> lambdas;
  for (Rational x = lo; x <= hi; x += step) lambdas.insert(x);
  lambdas.insert(hi);
  for (const Changepoint& c : solution.changepoints) {
    if (lo <= c.lambda && c.lambda <= hi) lambdas.insert(c.lambda);
  }
  const PiecewiseLinear& y = solution.y;
  std::vector<PlotRow> rows;
  for (const Rational& x : lambdas) {
    if (!y.domain().contains(x)) continue;
    std::size_t i = y.piece_index(x);
    if (i + 1 < y.pieces().size() && y.breaks()[i] == x) ++i;
    rows.push_back(PlotRow{x, y.evaluate(x), y.pieces()[i].label});
  }
  return rows;
}

std::string format_plot(const std::vector<PlotRow>& rows, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "lambda\ty\tlambda_approx\ty_approx\tf_star\n";
  os << std::setprecision(10);
  for (const PlotRow& row : rows) {
    os << format_rational(row.lambda) << '\t' << row.value.to_string() << '\t'
       << row.lambda.get_d() << '\t';
    if (row.value.is_infinite()) {
      os << "inf";
    } else {
      os << row.value.value().get_d();
    }
    os << '\t';
    for (std::size_t i = 0; i < row.f_star.size(); ++i) {
      if (i > 0) os << ',';
      const Element e = row.f_star[i];
      if (names.empty()) {
        os << e;
      } else {
        os << names[e];
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace pmi
