#include "blockline/json_io.hpp"

#include <cmath>
#include <sstream>

#include "blockline/errors.hpp"

namespace blockline {

namespace {

json bound_to_json(double v) {
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  return v;
}

double bound_from_json(const json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf" || s == "+inf") return kInf;
    if (s == "-inf") return -kInf;
  }
  fail(errc::validation, std::string(what) + " must be a number or \"±inf\"");
}

double number_from_json(const json& j, const char* what) {
  if (!j.is_number())
    fail(errc::validation, std::string(what) + " must be a number");
  return j.get<double>();
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    fail(errc::validation, std::string("missing field \"") + name + "\"");
  return *it;
}

CompassLabel label_from_string(const std::string& s) {
  for (int i = 0; i < 8; ++i) {
    auto l = static_cast<CompassLabel>(i);
    if (s == compass_name(l)) return l;
  }
  fail(errc::validation, "unknown component label \"" + s + "\"");
}

json vec2_to_json(Vec2 v) { return json::array({v.x, v.y}); }

Vec2 vec2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    fail(errc::validation, "point must be a [x, y] pair");
  return {number_from_json(j[0], "x"), number_from_json(j[1], "y")};
}

}  // namespace

json set1d_to_json(const ClosedSet1D& set) {
  json parts = json::array();
  for (const auto& iv : set.intervals())
    parts.push_back({{"kind", "interval"},
                     {"lo", bound_to_json(iv.lo)},
                     {"hi", bound_to_json(iv.hi)}});
  for (double p : set.points())
    parts.push_back({{"kind", "point"}, {"at", p}});
  for (const auto& l : set.lattices())
    parts.push_back(
        {{"kind", "lattice"}, {"offset", l.offset}, {"period", l.period}});
  return {{"parts", parts}};
}

ClosedSet1D set1d_from_json(const json& j) {
  const json& parts = field(j, "parts");
  if (!parts.is_array()) fail(errc::validation, "\"parts\" must be an array");
  ClosedSet1D set;
  for (const json& p : parts) {
    const json& kind = field(p, "kind");
    if (kind == "interval")
      set.add_interval(bound_from_json(field(p, "lo"), "lo"),
                       bound_from_json(field(p, "hi"), "hi"));
    else if (kind == "point")
      set.add_point(number_from_json(field(p, "at"), "at"));
    else if (kind == "lattice")
      set.add_lattice(number_from_json(field(p, "offset"), "offset"),
                      number_from_json(field(p, "period"), "period"));
    else
      fail(errc::validation, "part kind must be interval, point, or lattice");
  }
  return set;
}

json sequence1d_to_json(const GridSequence1D& seq) {
  json sets = json::array();
  for (const auto& s : seq.sets) sets.push_back(set1d_to_json(s));
  return {{"sets", sets}, {"s", seq.target}, {"dense", seq.dense}};
}

GridSequence1D sequence1d_from_json(const json& j) {
  const json& sets = field(j, "sets");
  if (!sets.is_array() || sets.size() < 2)
    fail(errc::validation, "\"sets\" must list at least two sets");
  GridSequence1D seq;
  for (const json& s : sets) seq.sets.push_back(set1d_from_json(s));
  seq.target = number_from_json(field(j, "s"), "s");
  const json& dense = field(j, "dense");
  if (!dense.is_boolean()) fail(errc::validation, "\"dense\" must be boolean");
  seq.dense = dense.get<bool>();
  return seq;
}

json transversal1d_to_json(const SolveResult& result) {
  return {{"points", result.transversal.points},
          {"z", result.transversal.z()},
          {"spread", result.transversal.spread()},
          {"offset_window", {result.window.lo, result.window.hi}}};
}

json block_partition_to_json(const BlockPartition& part) {
  return {{"boundaries", part.boundaries},
          {"sizes", part.sizes},
          {"spread", part.spread}};
}

json box_set_to_json(const BoxUnionSet2D& set) {
  json boxes = json::array();
  for (const Box2& b : set.boxes)
    boxes.push_back({{"x", {bound_to_json(b.lx), bound_to_json(b.hx)}},
                     {"y", {bound_to_json(b.ly), bound_to_json(b.hy)}}});
  json out{{"boxes", boxes}};
  if (set.labeled()) {
    json labels = json::array();
    for (CompassLabel l : set.labels) labels.push_back(compass_name(l));
    out["labels"] = labels;
  }
  return out;
}

BoxUnionSet2D box_set_from_json(const json& j) {
  const json& boxes = field(j, "boxes");
  if (!boxes.is_array()) fail(errc::validation, "\"boxes\" must be an array");
  BoxUnionSet2D set;
  for (const json& b : boxes) {
    const json& xs = field(b, "x");
    const json& ys = field(b, "y");
    if (!xs.is_array() || xs.size() != 2 || !ys.is_array() || ys.size() != 2)
      fail(errc::validation, "box needs x and y bound pairs");
    set.boxes.push_back({bound_from_json(xs[0], "x lo"),
                         bound_from_json(xs[1], "x hi"),
                         bound_from_json(ys[0], "y lo"),
                         bound_from_json(ys[1], "y hi")});
  }
  if (auto it = j.find("labels"); it != j.end()) {
    for (const json& l : *it)
      set.labels.push_back(label_from_string(l.get<std::string>()));
  }
  set.validate();
  return set;
}

json sequence2d_to_json(const GridSequence2D& seq) {
  json sets = json::array();
  for (const auto& s : seq.sets) sets.push_back(box_set_to_json(s));
  return {{"sets", sets}, {"s", vec2_to_json(seq.target)}};
}

GridSequence2D sequence2d_from_json(const json& j) {
  const json& sets = field(j, "sets");
  if (!sets.is_array() || sets.size() < 2)
    fail(errc::validation, "\"sets\" must list at least two sets");
  GridSequence2D seq;
  for (const json& s : sets) seq.sets.push_back(box_set_from_json(s));
  seq.target = vec2_from_json(field(j, "s"));
  return seq;
}

json transversal2d_to_json(const Transversal2D& t, NormKind kind) {
  json points = json::array();
  for (Vec2 p : t.points) points.push_back(vec2_to_json(p));
  json zv = json::array();
  for (Vec2 z : t.zs()) zv.push_back(vec2_to_json(z));
  return {{"points", points}, {"z", zv}, {"diameter", t.diameter(kind)}};
}

Transversal2D transversal2d_from_json(const json& j) {
  const json& points = field(j, "points");
  if (!points.is_array() || points.size() < 2)
    fail(errc::validation, "\"points\" must list at least two points");
  Transversal2D t;
  for (const json& p : points) t.points.push_back(vec2_from_json(p));
  return t;
}

json jumps_to_json(const std::vector<Jump>& jumps) {
  json out = json::array();
  for (const Jump& j : jumps)
    out.push_back({{"index", j.index},
                   {"from", compass_name(j.from)},
                   {"to", compass_name(j.to)}});
  return out;
}

std::vector<double> parse_values_text(const std::string& text) {
  std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '[') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array())
      fail(errc::io, "input is not a valid JSON array");
    std::vector<double> out;
    for (const json& v : j) out.push_back(number_from_json(v, "value"));
    return out;
  }
  std::vector<double> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t a = line.find_first_not_of(" \t\r,");
    if (a == std::string::npos || line[a] == '#') continue;
    try {
      out.push_back(std::stod(line.substr(a)));
    } catch (const std::exception&) {
      fail(errc::io, "unparsable value on line " + std::to_string(lineno));
    }
  }
  return out;
}

}  // namespace blockline
