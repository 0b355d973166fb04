#include "lpkit/json_io.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "lpkit/errors.hpp"

namespace lpkit::io {

namespace {

// Turns nlohmann's type errors into our schema errors.
template <typename F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double finite_number(const json& j) {
  if (!j.is_number()) throw SchemaError("expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw SchemaError("non-finite number");
  return v;
}

}  // namespace

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

Complex parse_complex(const json& j) {
  if (j.is_number()) return {finite_number(j), 0.0};
  if (!j.is_array() || j.size() != 2) throw SchemaError("complex numbers are [re, im]");
  return {finite_number(j[0]), finite_number(j[1])};
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Angle parse_angle(const json& j) {
  if (j.is_number()) return Angle::from_turns(finite_number(j));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Angle(std::stoll(s), 1);
      return Angle(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
      throw SchemaError("bad angle \"" + s + "\"");
    }
  }
  throw SchemaError("angles are numbers of turns or \"p/q\" strings");
}

CyclicElement parse_cyclic(const json& j) {
  return guarded("cyclic element", [&] {
    const json& xi = field(j, "xi");
    if (!xi.is_array()) throw SchemaError("\"xi\" must be an array");
    std::vector<Complex> v;
    for (const auto& z : xi) v.push_back(parse_complex(z));
    if (j.contains("n") && j.at("n").get<long long>() != static_cast<long long>(v.size())) {
      throw SchemaError("\"n\" does not match the length of \"xi\"");
    }
    return CyclicElement(std::move(v));
  });
}

json to_json(const CyclicElement& x) {
  json xi = json::array();
  for (const auto& z : x.xi()) xi.push_back(to_json(z));
  return {{"n", x.order()}, {"xi", xi}};
}

LaurentPolynomial parse_laurent(const json& j) {
  return guarded("laurent polynomial", [&] {
    const json& terms = field(j, "terms");
    if (!terms.is_array()) throw SchemaError("\"terms\" must be an array");
    std::map<int, Complex> c;
    for (const auto& t : terms) {
      const json& m = field(t, "m");
      if (!m.is_number_integer()) throw SchemaError("exponent \"m\" must be an integer");
      c[m.get<int>()] += parse_complex(field(t, "a"));
    }
    return LaurentPolynomial(std::move(c));
  });
}

json to_json(const LaurentPolynomial& f) {
  json terms = json::array();
  for (const auto& [m, a] : f.terms()) terms.push_back({{"m", m}, {"a", to_json(a)}});
  return {{"terms", terms}};
}

ArcSet parse_arcset(const json& j) {
  return guarded("arc set", [&] {
    if (!j.is_object()) throw SchemaError("slot must be an object");
    if (j.value("full", false)) return ArcSet::full_circle();
    std::vector<Angle> points;
    if (j.contains("points")) {
      for (const auto& a : j.at("points")) points.push_back(parse_angle(a));
    }
    ArcSet out(std::move(points), {});
    if (j.contains("arcs")) {
      for (const auto& a : j.at("arcs")) {
        if (!a.is_array() || a.size() != 2) throw SchemaError("arcs are [start, end] in turns");
        out = out.unite(ArcSet::arc(parse_angle(a[0]), parse_angle(a[1])));
      }
    }
    return out;
  });
}

json to_json(const ArcSet& s) {
  json points = json::array();
  json arcs = json::array();
  for (const auto& p : s.points()) points.push_back(p.to_double());
  for (const auto& a : s.arcs()) arcs.push_back(json::array({a.start.to_double(), a.end().to_double()}));
  return {{"points", points}, {"arcs", arcs}, {"full", s.full()}};
}

SpectralConfiguration parse_configuration(const json& j) {
  return guarded("configuration", [&] {
    if (!j.is_object()) throw SchemaError("configuration must be an object");
    std::map<int, ArcSet> slots;
    if (j.contains("finite")) {
      for (const auto& [key, val] : j.at("finite").items()) {
        int n = 0;
        try {
          std::size_t used = 0;
          n = std::stoi(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::logic_error&) {
          throw SchemaError("slot key \"" + key + "\" is not an integer");
        }
        slots.emplace(n, parse_arcset(val));
      }
    }
    const std::string inf = j.value("infinity", std::string("empty"));
    if (inf != "empty" && inf != "full") throw SchemaError("\"infinity\" must be \"empty\" or \"full\"");
    const std::string tail = j.value("tail", std::string("none"));
    Tail t = Tail::None;
    if (tail == "full") {
      t = Tail::Full;
    } else if (tail == "roots") {
      t = Tail::Roots;
    } else if (tail != "none") {
      throw SchemaError("\"tail\" must be \"none\", \"full\" or \"roots\"");
    }
    return SpectralConfiguration(std::move(slots), inf == "full", t);
  });
}

json to_json(const SpectralConfiguration& s) {
  json finite = json::object();
  for (const auto& [n, set] : s.finite()) finite[std::to_string(n)] = to_json(set);
  static constexpr const char* tails[] = {"none", "full", "roots"};
  return {{"finite", finite},
          {"infinity", s.infinity_full() ? "full" : "empty"},
          {"tail", tails[static_cast<int>(s.tail())]}};
}

SpatialIsometry parse_isometry(const json& j) {
  return guarded("spatial isometry", [&] {
    std::vector<double> w;
    for (const auto& x : field(j, "weights")) w.push_back(finite_number(x));
    std::vector<Complex> h;
    for (const auto& x : field(j, "h")) h.push_back(parse_complex(x));
    std::vector<int> T;
    for (const auto& x : field(j, "T")) {
      if (!x.is_number_integer()) throw SchemaError("T entries must be integers");
      T.push_back(x.get<int>());
    }
    return SpatialIsometry(AtomicSpace(std::move(w)), std::move(h), std::move(T), j.value("aperiodic", false));
  });
}

json to_json(const SpatialIsometry& v) {
  json h = json::array();
  for (const auto& z : v.h) h.push_back(to_json(z));
  return {{"weights", v.space.weights()}, {"h", h}, {"T", v.T}, {"aperiodic", v.aperiodic}};
}

std::pair<CMatrix, AtomicSpace> parse_matrix(const json& j) {
  return guarded("matrix", [&] {
    const json& rows = field(j, "matrix");
    if (!rows.is_array() || rows.empty()) throw SchemaError("\"matrix\" must be a nonempty array of rows");
    const auto n = static_cast<Eigen::Index>(rows.size());
    CMatrix a(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const json& row = rows[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw SchemaError("matrix must be square");
      for (Eigen::Index c = 0; c < n; ++c) a(r, c) = parse_complex(row[static_cast<std::size_t>(c)]);
    }
    std::vector<double> w(static_cast<std::size_t>(n), 1.0);
    if (j.contains("weights")) {
      w.clear();
      for (const auto& x : j.at("weights")) w.push_back(finite_number(x));
    }
    return std::make_pair(a, AtomicSpace(std::move(w)));
  });
}

json to_json(const NormEstimate& e) {
  json w = json::array();
  for (Eigen::Index i = 0; i < e.witness.size(); ++i) w.push_back(to_json(e.witness[i]));
  json out = {{"lower", e.lower},
              {"upper", e.upper},
              {"method", std::string(to_string(e.method))},
              {"witness", w}};
  out["resolution"] = e.resolution ? json(*e.resolution) : json(nullptr);
  return out;
}

json to_json(const PeriodDecomposition& d) {
  json cycles = json::array();
  for (const auto& c : d.cycles) {
    cycles.push_back({{"length", c.length}, {"atoms", c.atoms}, {"cross_section", c.cross_section}});
  }
  json slots = json::object();
  for (const auto& [n, atoms] : d.slots) slots[std::to_string(n)] = atoms;
  return {{"cycles", cycles}, {"slots", slots}, {"aperiodic", d.aperiodic}};
}

}  // namespace lpkit::io
