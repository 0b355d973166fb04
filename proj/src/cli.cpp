#include "lpkit/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lpkit/errors.hpp"
#include "lpkit/json_io.hpp"
#include "lpkit/parallel.hpp"

namespace lpkit {

namespace {

using io::json;

struct RunConfig {
  std::string command;  // "norm zn", "config leq", ...
  std::vector<std::string> inputs;
  std::string poly;
  std::optional<double> p;
  double tol = 1e-6;
  int n_max = 4096;
  double resolution = 1.0 / 2048.0;
  std::uint64_t seed = 0;
  std::string mode = "both";
  std::string format = "json";
  std::string out;
  // sweep only
  std::string kind;
  std::string p_grid;
  std::string n_grid;
  bool timings = false;
};

json audit(const RunConfig& c) {
  json j = {{"subcommand", c.command}, {"inputs", c.inputs}, {"tol", c.tol},
            {"n_max", c.n_max},        {"resolution", c.resolution}, {"seed", c.seed},
            {"format", c.format}};
  j["p"] = c.p ? json(*c.p) : json(nullptr);
  if (!c.poly.empty()) j["poly"] = c.poly;
  if (c.command == "norm isometry") j["mode"] = c.mode;
  if (c.command == "sweep") {
    j["kind"] = c.kind;
    j["p_grid"] = c.p_grid;
    j["n_grid"] = c.n_grid;
  }
  return j;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

PExponent need_p(const RunConfig& c) {
  if (!c.p) throw SchemaError("--p is required for " + c.command);
  return PExponent(*c.p);
}

const std::string& need_input(const RunConfig& c, std::size_t i) {
  if (c.inputs.size() <= i) throw SchemaError(c.command + " needs " + std::to_string(i + 1) + " --in file(s)");
  return c.inputs[i];
}

LaurentPolynomial need_poly(const RunConfig& c) {
  if (c.poly.empty()) throw SchemaError("--poly is required for " + c.command);
  return io::parse_laurent(io::read_file(c.poly));
}

OpnormOptions opnorm_options(const RunConfig& c) {
  OpnormOptions o;
  o.seed = c.seed;
  return o;
}

FpsigmaOptions sigma_options(const RunConfig& c) {
  FpsigmaOptions o;
  o.resolution = c.resolution;
  o.fpz.tol = c.tol;
  o.fpz.n_max = c.n_max;
  o.fpz.opnorm = opnorm_options(c);
  return o;
}

// Output is either a JSON document or CSV text.
struct Emitted {
  std::optional<json> doc;
  std::string csv;
};

std::string estimate_csv(const std::vector<std::pair<std::string, NormEstimate>>& rows) {
  std::string s = "path,lower,upper,method\n";
  for (const auto& [name, e] : rows) {
    s += name + "," + fmt17(e.lower) + "," + fmt17(e.upper) + "," + std::string(to_string(e.method)) + "\n";
  }
  return s;
}

Emitted run_norm(const std::string& kind, const RunConfig& c) {
  const PExponent p = need_p(c);
  const FpsigmaOptions opts = sigma_options(c);
  std::vector<std::pair<std::string, NormEstimate>> rows;
  json doc;
  if (kind == "zn") {
    const auto x = io::parse_cyclic(io::read_file(need_input(c, 0)));
    rows.emplace_back(kind, fpzn_norm(x, p, opts.fpz.opnorm));
    doc["result"] = io::to_json(rows.back().second);
  } else if (kind == "z") {
    const auto f = c.poly.empty() ? io::parse_laurent(io::read_file(need_input(c, 0))) : need_poly(c);
    std::vector<ScheduleStep> trace;
    rows.emplace_back(kind, fpz_norm(f, p, opts.fpz, &trace));
    doc["result"] = io::to_json(rows.back().second);
    json sched = json::array();
    for (const auto& s : trace) sched.push_back({{"n", s.n}, {"lower", s.lower}});
    doc["schedule"] = sched;
    doc["l1"] = norm_l1(f);
  } else if (kind == "sigma") {
    const auto s = io::parse_configuration(io::read_file(need_input(c, 0)));
    const auto f = need_poly(c);
    rows.emplace_back(kind, fpsigma_norm(f, s, p, opts));
    doc["result"] = io::to_json(rows.back().second);
  } else {
    const auto v = io::parse_isometry(io::read_file(need_input(c, 0)));
    const auto f = need_poly(c);
    FpvMode mode = FpvMode::Both;
    if (c.mode == "direct") {
      mode = FpvMode::Direct;
    } else if (c.mode == "sigma" || c.mode == "via-sigma") {
      mode = FpvMode::ViaSigma;
    } else if (c.mode != "both") {
      throw SchemaError("--mode must be direct, sigma or both");
    }
    const FpvResult r = fpv_norm(f, v, p, mode, opts);
    if (r.direct) {
      rows.emplace_back("direct", *r.direct);
      doc["direct"] = io::to_json(*r.direct);
    }
    if (r.via_sigma) {
      rows.emplace_back("via_sigma", *r.via_sigma);
      doc["via_sigma"] = io::to_json(*r.via_sigma);
    }
    if (mode == FpvMode::Both) doc["overlap"] = r.overlap();
  }
  if (c.format == "csv") return {std::nullopt, estimate_csv(rows)};
  return {doc, {}};
}

SpectralConfiguration read_config(const std::string& path) { return io::parse_configuration(io::read_file(path)); }

Emitted run_config(const std::string& op, const RunConfig& c) {
  if (c.format != "json") throw SchemaError("config output is JSON only");
  json doc;
  if (op == "saturate") {
    doc["result"] = io::to_json(saturate(read_config(need_input(c, 0))));
  } else if (op == "leq") {
    const auto r = leq(read_config(need_input(c, 0)), read_config(need_input(c, 1)));
    doc["result"] = r.value;
    doc["saturated_inputs"] = r.saturated_inputs;
  } else if (op == "sup" || op == "inf") {
    need_input(c, 0);
    std::vector<SpectralConfiguration> cs;
    bool flagged = false;
    for (const auto& path : c.inputs) {
      const auto s = read_config(path);
      auto sat = saturate(s);
      flagged = flagged || !(sat == s);
      cs.push_back(std::move(sat));
    }
    doc["result"] = io::to_json(lattice(op == "sup" ? LatticeOp::Sup : LatticeOp::Inf, cs));
    doc["saturated_inputs"] = flagged;
  } else if (op == "classify") {
    const auto s = read_config(need_input(c, 0));
    const auto k = classify(s, need_p(c));
    if (std::holds_alternative<IsometricallyFpZ>(k)) {
      doc["result"] = "FpZ";
    } else {
      const auto& cf = std::get<ContinuousFunctions>(k);
      doc["result"] = "C(sigma)";
      doc["order"] = cf.order;
      doc["isometric_to_sup"] = cf.isometric_to_sup;
    }
  } else {
    doc["result"] = canonically_equivalent(read_config(need_input(c, 0)), read_config(need_input(c, 1)));
  }
  return {doc, {}};
}

Emitted run_isom(const std::string& op, const RunConfig& c) {
  if (c.format != "json") throw SchemaError("isom output is JSON only");
  json doc;
  if (op == "decompose") {
    const auto [a, space] = io::parse_matrix(io::read_file(need_input(c, 0)));
    doc["result"] = io::to_json(decompose(a, space, need_p(c), c.tol));
    return {doc, {}};
  }
  const auto v = io::parse_isometry(io::read_file(need_input(c, 0)));
  if (op == "periods") {
    doc["result"] = io::to_json(periods(v));
  } else if (op == "trivialize") {
    const auto g = gauge_trivialize(v);
    json gj = json::array();
    for (const auto& z : g.g) gj.push_back(io::to_json(z));
    doc["g"] = gj;
    doc["result"] = io::to_json(g.v);
  } else {
    const auto s = spectral_configuration_of(v);
    doc["result"] = io::to_json(s);
    doc["closure"] = io::to_json(closure_union(s));
  }
  return {doc, {}};
}

// "a,b,c" or "start:stop:step" (inclusive).
std::vector<double> parse_grid(const std::string& spec, const char* name) {
  std::vector<double> out;
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
      return v;
    } catch (const std::logic_error&) {
      throw SchemaError(std::string("bad ") + name + " entry \"" + s + "\"");
    }
  };
  if (spec.empty()) return out;
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() != 3) throw SchemaError(std::string(name) + " ranges are start:stop:step");
    const double a = number(parts[0]), b = number(parts[1]), h = number(parts[2]);
    if (!(h > 0.0)) throw SchemaError(std::string(name) + " step must be positive");
    for (long k = 0;; ++k) {
      const double v = a + static_cast<double>(k) * h;
      if (v > b + 1e-9 * h) break;
      out.push_back(v);
    }
    return out;
  }
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(number(item));
  return out;
}

Emitted run_sweep(const RunConfig& c) {
  if (c.kind != "zn" && c.kind != "z" && c.kind != "cyclic") throw SchemaError("--kind must be zn, z or cyclic");
  std::vector<double> ps = parse_grid(c.p_grid, "--p-grid");
  if (c.p_grid.empty() && c.p) ps.push_back(*c.p);
  const std::vector<double> ns_raw = parse_grid(c.n_grid, "--n-grid");
  if (ps.empty()) throw SchemaError("sweep grid is empty: give --p-grid or --p");
  std::vector<int> ns;
  for (double v : ns_raw) {
    if (v != std::floor(v) || v < 1) throw SchemaError("--n-grid entries must be positive integers");
    ns.push_back(static_cast<int>(v));
  }
  if (c.kind == "cyclic" && ns.empty()) throw SchemaError("sweep grid is empty: cyclic sweeps need --n-grid");
  if (c.kind == "zn" && !ns.empty()) throw SchemaError("--n-grid does not apply to zn sweeps");

  struct Row {
    double p;
    int n;
    NormEstimate e;
    double ms;
  };
  std::vector<Row> rows;
  const FpsigmaOptions opts = sigma_options(c);
  const json input = io::read_file(need_input(c, 0));
  auto timed = [](auto&& body, double& ms) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = body();
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
  };
  if (c.kind == "zn") {
    const auto x = io::parse_cyclic(input);
    for (double p : ps) {
      Row r{p, x.order(), {}, 0.0};
      r.e = timed([&] { return fpzn_norm(x, PExponent(p), opts.fpz.opnorm); }, r.ms);
      rows.push_back(std::move(r));
    }
  } else {
    const auto f = io::parse_laurent(input);
    const std::vector<int> n_list = ns.empty() ? std::vector<int>{c.n_max} : ns;
    for (double p : ps) {
      for (int n : n_list) {
        Row r{p, n, {}, 0.0};
        if (c.kind == "z") {
          FpzOptions o = opts.fpz;
          o.n_max = n;
          r.e = timed([&] { return fpz_norm(f, PExponent(p), o); }, r.ms);
        } else {
          r.e = timed([&] { return cyclic_estimate(f, n, PExponent(p), 0.0, opts.fpz.opnorm); }, r.ms);
        }
        rows.push_back(std::move(r));
      }
    }
  }

  if (c.format == "csv") {
    std::string s = "p,n,lower,upper,method,runtime_ms\n";
    for (const auto& r : rows) {
      s += fmt17(r.p) + "," + std::to_string(r.n) + "," + fmt17(r.e.lower) + "," + fmt17(r.e.upper) + "," +
           std::string(to_string(r.e.method)) + "," + (c.timings ? fmt17(r.ms) : std::string()) + "\n";
    }
    return {std::nullopt, s};
  }
  json list = json::array();
  for (const auto& r : rows) {
    json j = {{"p", r.p}, {"n", r.n}, {"lower", r.e.lower}, {"upper", r.e.upper},
              {"method", std::string(to_string(r.e.method))}};
    j["runtime_ms"] = c.timings ? json(r.ms) : json(nullptr);
    list.push_back(j);
  }
  return {json{{"rows", list}}, {}};
}

int report(std::ostream& err, const char* kind, const std::exception& e, int code) {
  err << json{{"error", kind}, {"message", e.what()}}.dump() << "\n";
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"lpkit: norms of p-pseudofunction algebras, spectral configurations and atomic isometries"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  app.add_option("--p", cfg.p, "exponent p in [1, inf)");
  app.add_option("--tol", cfg.tol, "bracket width at which F^p(Z) truncation stops");
  app.add_option("--n-max", cfg.n_max, "largest cyclic truncation");
  app.add_option("--resolution", cfg.resolution, "arc grid spacing in turns");
  app.add_option("--seed", cfg.seed, "seed for randomized restarts");
  app.add_option("--in", cfg.inputs, "input JSON file (repeatable)");
  app.add_option("--poly", cfg.poly, "Laurent polynomial JSON file");
  app.add_option("--mode", cfg.mode, "direct | sigma | both");
  app.add_option("--out", cfg.out, "write the result here instead of stdout");
  app.add_option("--format", cfg.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  std::string leaf;
  auto* norm = app.add_subcommand("norm", "norm brackets");
  norm->require_subcommand(1, 1);
  for (const char* k : {"zn", "z", "sigma", "isometry"}) {
    norm->add_subcommand(k)->callback([&, k] { cfg.command = std::string("norm ") + k, leaf = k; });
  }
  auto* config = app.add_subcommand("config", "spectral configuration algebra");
  config->require_subcommand(1, 1);
  for (const char* k : {"saturate", "leq", "sup", "inf", "classify", "equiv"}) {
    config->add_subcommand(k)->callback([&, k] { cfg.command = std::string("config ") + k, leaf = k; });
  }
  auto* isom = app.add_subcommand("isom", "atomic isometries");
  isom->require_subcommand(1, 1);
  for (const char* k : {"decompose", "periods", "trivialize", "sigma"}) {
    isom->add_subcommand(k)->callback([&, k] { cfg.command = std::string("isom ") + k, leaf = k; });
  }
  auto* sweep = app.add_subcommand("sweep", "CSV sweeps over p or n");
  sweep->add_option("--kind", cfg.kind, "zn | z | cyclic")->required();
  sweep->add_option("--p-grid", cfg.p_grid, "p values: a,b,c or start:stop:step");
  sweep->add_option("--n-grid", cfg.n_grid, "n values: a,b,c or start:stop:step");
  sweep->add_flag("--timings", cfg.timings, "fill the runtime_ms column");
  sweep->callback([&] { cfg.command = "sweep"; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    const int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? kExitOk : kExitSchema;
  }

  try {
    if (!(cfg.tol > 0.0)) throw PreconditionError("--tol must be > 0");
    if (cfg.p && !(std::isfinite(*cfg.p) && *cfg.p >= 1.0)) throw PreconditionError("--p must be in [1, inf)");
    Emitted result;
    if (cfg.command.rfind("norm ", 0) == 0) {
      result = run_norm(leaf, cfg);
    } else if (cfg.command.rfind("config ", 0) == 0) {
      result = run_config(leaf, cfg);
    } else if (cfg.command.rfind("isom ", 0) == 0) {
      result = run_isom(leaf, cfg);
    } else {
      result = run_sweep(cfg);
    }
    std::string text;
    if (result.doc) {
      (*result.doc)["config"] = audit(cfg);
      text = result.doc->dump(2) + "\n";
    } else {
      text = result.csv;
    }
    if (cfg.out.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) throw SchemaError("cannot write " + cfg.out);
      f << text;
    }
    return kExitOk;
  } catch (const SchemaError& e) {
    return report(err, "schema", e, kExitSchema);
  } catch (const EmptyInfimumError& e) {
    return report(err, "empty-infimum", e, kExitEmptyInfimum);
  } catch (const PreconditionError& e) {
    return report(err, "precondition", e, kExitPrecondition);
  } catch (const SearchExhaustedError& e) {
    return report(err, "search-exhausted", e, kExitSearchExhausted);
  } catch (const std::exception& e) {
    return report(err, "failure", e, kExitFailure);
  }
}

}  // namespace lpkit
