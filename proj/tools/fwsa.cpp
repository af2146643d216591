// fwsa: batch front end.  Exit status 0 = success/PASS, 1 = FAIL, 2 = usage
// or input error (one diagnostic line naming the offending field), 3 =
// internal consistency failure.

#include "fwsa/fwsa.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace fwsa;

namespace {

struct UsageError : std::runtime_error {
  UsageError(const std::string& field, const std::string& msg) : std::runtime_error(field + ": " + msg) {}
};

template <class F>
auto in_field(const char* field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConsistencyError&) {
    throw;
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(field, e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(field, e.what());
  }
}

struct Outcome {
  Json payload;
  bool pass = true;
  std::optional<std::string> csv;  // tabular commands only
};

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::uint32_t> parse_map(const std::string& s) {
  std::vector<std::uint32_t> out;
  if (s.empty() || s == "-") return out;
  for (auto tok : fwsa::detail::split(s, ',')) {
    std::uint64_t v = 0;
    if (!fwsa::detail::parse_uint(tok, v)) throw ParseError("bad map entry '" + std::string(tok) + "'");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

Outcome run_objects(const RunConfig& c) {
  const auto a = in_field("--group", [&] { return parse_group(c.group); });
  Outcome o;
  Json objs = Json::array();
  std::string csv = "labels,multidegree\n";
  for (const auto& x : enumerate_objects(a, c.size)) {
    const auto lab = format_labels(a, x);
    const auto md = format_multidegree(x.multidegree(a));
    objs.push_back(Json{{"labels", lab}, {"multidegree", md}});
    csv += csv_quote(lab) + "," + csv_quote(md) + "\n";
  }
  o.payload = Json{{"group", a.to_string()}, {"size", c.size}, {"count", objs.size()}, {"objects", objs}};
  o.csv = csv;
  return o;
}

Outcome run_hom(const RunConfig& c) {
  const auto a = in_field("--group", [&] { return parse_group(c.group); });
  const auto x = in_field("--src", [&] {
    auto l = parse_labels(a, c.src);
    validate_object(a, l);
    return l;
  });
  const auto y = in_field("--dst", [&] {
    auto l = parse_labels(a, c.dst);
    validate_object(a, l);
    return l;
  });
  Outcome o;
  std::vector<TwsMorphism> homs;
  if (c.tilde) {
    homs = hom_tws(a, x, y);
  } else {
    for (auto& f : hom_fws(a, x, y)) homs.push_back(with_zero_pointing(std::move(f)));
  }
  o.payload = Json{{"group", a.to_string()},
                   {"src", format_labels(a, x)},
                   {"dst", format_labels(a, y)},
                   {"category", c.tilde ? "tws" : "fws"},
                   {"count", homs.size()}};
  if (c.list) {
    Json ms = Json::array();
    for (const auto& h : homs) {
      std::string m;
      for (std::size_t i = 0; i < h.map().size(); ++i) m += (i ? "," : "") + std::to_string(h.map()[i]);
      Json j{{"map", m.empty() ? "-" : m}};
      if (c.tilde) j["pointing"] = fwsa::detail::format_values(a, h.pointing);
      ms.push_back(std::move(j));
    }
    o.payload["morphisms"] = ms;
  }
  return o;
}

struct Resolved {
  FiniteAbelianGroup group;
  ModulePtr module;
};

Resolved resolve_module(const RunConfig& c) {
  const auto a = in_field("--group", [&] { return parse_group(c.group); });
  if (c.module.empty()) throw UsageError("--module", "a module spec is required");
  auto m = in_field("--module", [&] { return parse_module(a, c.module); });
  return {a, m};
}

LabeledSet module_object(const Module& m, const std::string& field, const std::string& s) {
  return in_field(field.c_str(), [&] {
    auto l = parse_labels(m.group(), s);
    m.check_object(l);
    return l;
  });
}

Outcome run_dim(const RunConfig& c) {
  const auto r = resolve_module(c);
  const auto x = module_object(*r.module, "--object", c.object);
  Outcome o;
  Json basis = Json::array();
  for (const auto& b : r.module->basis(x)) basis.push_back(b);
  o.payload = Json{{"module", r.module->name()},
                   {"category", to_string(r.module->category())},
                   {"object", format_labels(r.module->group(), x)},
                   {"dim", r.module->dim(x)},
                   {"basis", basis}};
  return o;
}

Outcome run_act(const RunConfig& c) {
  const auto r = resolve_module(c);
  const auto& g = r.module->group();
  TwsMorphism m;
  m.base.source = module_object(*r.module, "--src", c.src);
  m.base.target = module_object(*r.module, "--dst", c.dst);
  m.base.map = in_field("--map", [&] { return parse_map(c.map); });
  if (c.pointing.empty()) {
    m.pointing.assign(m.source().size(), g.zero());
  } else {
    m.pointing = in_field("--pointing", [&] { return parse_labels(g, c.pointing).labels(); });
  }
  in_field("--map", [&] {
    validate_morphism(g, m);
    r.module->check_morphism(m);
    return 0;
  });
  const Matrix a = r.module->act(m);
  Json entries = Json::array();
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (const auto& [i, v] : a.column(j)) entries.push_back(Json{{"row", i}, {"col", j}, {"value", v.to_string()}});
  }
  Outcome o;
  o.payload = Json{{"module", r.module->name()},
                   {"src", format_labels(g, m.source())},
                   {"dst", format_labels(g, m.target())},
                   {"map", c.map},
                   {"pointing", fwsa::detail::format_values(g, m.pointing)},
                   {"rows", a.rows()},
                   {"cols", a.cols()},
                   {"entries", entries}};
  return o;
}

Outcome run_gencert(const RunConfig& c) {
  const auto r = resolve_module(c);
  if (c.max_size < c.claim) throw UsageError("--max-size", "must be at least --claim");
  const auto rep = certify_generation(*r.module, c.claim, c.max_size);
  return Outcome{to_json(r.module->group(), rep), rep.pass, std::nullopt};
}

Outcome run_profile(const RunConfig& c) {
  const auto r = resolve_module(c);
  const auto p = generation_profile(*r.module, c.max_size);
  std::string csv = "object,multidegree,size,dim,rank,new_generators\n";
  for (const auto& rec : p.records) {
    csv += csv_quote(format_labels(r.module->group(), rec.object)) + "," +
           csv_quote(format_multidegree(rec.object.multidegree(r.module->group()))) + "," +
           std::to_string(rec.object.size()) + "," + std::to_string(rec.dim) + "," + std::to_string(rec.rank) + "," +
           std::to_string(rec.coker) + "\n";
  }
  return Outcome{to_json(r.module->group(), p), true, csv};
}

Outcome run_factor_check(const RunConfig& c) {
  const auto a = in_field("--group", [&] { return parse_group(c.group); });
  const auto rep = factor_check_v00(a, c.max_size);
  return Outcome{to_json(a, rep), rep.pass, std::nullopt};
}

Outcome run_restrict_witness(const RunConfig& c) {
  const auto a = in_field("--group", [&] { return parse_group(c.group); });
  const auto x = in_field("--object", [&] {
    auto l = parse_labels(a, c.object);
    validate_object(a, l);
    return l;
  });
  const auto mode = in_field("--mode", [&] { return parse_witness_mode(c.mode); });
  const auto w = in_field("--object", [&] { return restriction_witness(a, x, mode, c.max_size); });
  return Outcome{to_json(a, w), w.pass, std::nullopt};
}

Outcome run_bounds(const RunConfig& c) {
  const auto t = bound_recursion_check(c.imax, c.gmax);
  std::string csv = "i,g,f,bound\n";
  for (std::size_t i = 0; i <= t.imax; ++i) {
    for (std::size_t g = 0; g <= t.gmax; ++g) {
      csv += std::to_string(i) + "," + std::to_string(g) + "," + std::to_string(t.f[i][g]) + "," +
             std::to_string(g + 5 * i) + "\n";
    }
  }
  return Outcome{to_json(t), t.pass, csv};
}

Outcome run_hilbert(const RunConfig& c) {
  const auto r = resolve_module(c);
  if (c.guard < 2) throw UsageError("--guard", "must be at least 2");
  const auto s = truncated_series(*r.module, c.max_size, c.weighted);
  Outcome o;
  o.payload = Json{{"module", r.module->name()}, {"series", to_json(s)}};
  Json uni = Json::array();
  for (const auto& v : specialize_univariate(s)) uni.push_back(v.to_string());
  o.payload["univariate"] = uni;
  std::string csv = "multidegree,coefficient\n";
  for (const auto& [f, v] : s.coeffs) csv += csv_quote(format_multidegree(f)) + "," + csv_quote(v.to_string()) + "\n";
  o.csv = csv;
  if (c.fit) {
    FitOptions opt;
    opt.guard = c.guard;
    opt.max_multiplicity = c.max_multiplicity;
    opt.backtrack = c.backtrack;
    opt.jmax = c.jmax;
    const auto fr = fit_rational(s, opt);
    o.payload["fit"] = to_json(r.module->group(), fr);
    o.pass = fr.fit.has_value();
  }
  return o;
}

Outcome dispatch(const RunConfig& c) {
  if (c.command == "objects") return run_objects(c);
  if (c.command == "hom") return run_hom(c);
  if (c.command == "dim") return run_dim(c);
  if (c.command == "act") return run_act(c);
  if (c.command == "gencert") return run_gencert(c);
  if (c.command == "profile") return run_profile(c);
  if (c.command == "factor-check") return run_factor_check(c);
  if (c.command == "restrict-witness") return run_restrict_witness(c);
  if (c.command == "bounds") return run_bounds(c);
  if (c.command == "hilbert") return run_hilbert(c);
  throw UsageError("command", "unknown command '" + c.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* env = std::getenv("FWSA_FORMAT"); env && *env) cfg.format = env;

  CLI::App app{"Exact computations with FWS_A and tilde-FWS_A modules"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "json or csv (default: $FWSA_FORMAT, else json)");
  app.add_option("--output", cfg.output, "write the report to this file instead of stdout");
  app.fallthrough();

  auto group_opt = [&](CLI::App* s) { s->add_option("--group", cfg.group, "group spec: 1 | Z<n>(xZ<m>)*"); };
  auto module_opt = [&](CLI::App* s) { s->add_option("--module", cfg.module, "module spec")->required(); };

  auto* objects = app.add_subcommand("objects", "iso classes of labeled sets of a given size");
  group_opt(objects);
  objects->add_option("--size", cfg.size, "number of points")->required();

  auto* hom = app.add_subcommand("hom", "enumerate morphisms between labeled sets");
  group_opt(hom);
  hom->add_option("--src", cfg.src, "source labels, e.g. 1,1,0")->required();
  hom->add_option("--dst", cfg.dst, "target labels")->required();
  hom->add_flag("--tilde", cfg.tilde, "pointed morphisms");
  hom->add_flag("--list", cfg.list, "list the morphisms");

  auto* dim = app.add_subcommand("dim", "dimension and basis of a module value");
  group_opt(dim);
  module_opt(dim);
  dim->add_option("--object", cfg.object, "object labels")->required();

  auto* act = app.add_subcommand("act", "action matrix of a morphism");
  group_opt(act);
  module_opt(act);
  act->add_option("--src", cfg.src, "source labels")->required();
  act->add_option("--dst", cfg.dst, "target labels")->required();
  act->add_option("--map", cfg.map, "image of each source point, e.g. 0,1,0")->required();
  act->add_option("--pointing", cfg.pointing, "pointing per source point (default 0)");

  auto* gencert = app.add_subcommand("gencert", "certify generation in degree <= claim up to max-size");
  group_opt(gencert);
  module_opt(gencert);
  gencert->add_option("--claim", cfg.claim, "claimed generation degree")->required();
  gencert->add_option("--max-size", cfg.max_size, "truncation")->required();

  auto* profile = app.add_subcommand("profile", "new generators per object up to max-size");
  group_opt(profile);
  module_opt(profile);
  profile->add_option("--max-size", cfg.max_size, "truncation")->required();

  auto* factor = app.add_subcommand("factor-check", "η̃ for v0bar factors through q ⊛ id");
  group_opt(factor);
  factor->add_option("--max-size", cfg.max_size, "truncation (default 4)");

  auto* witness = app.add_subcommand("restrict-witness", "restriction-bound witness for a projective");
  group_opt(witness);
  witness->add_option("--object", cfg.object, "generator labels")->required();
  witness->add_option("--mode", cfg.mode, "tws-to-fws | fws-to-fs | composite")->required();
  witness->add_option("--max-size", cfg.max_size, "truncation")->required();

  auto* bounds = app.add_subcommand("bounds", "numerical recursion table");
  bounds->add_option("--imax", cfg.imax, "largest i")->required();
  bounds->add_option("--gmax", cfg.gmax, "largest g")->required();

  auto* hilbert = app.add_subcommand("hilbert", "truncated Hilbert series and rational fit");
  group_opt(hilbert);
  module_opt(hilbert);
  hilbert->add_option("--max-size", cfg.max_size, "truncation")->required();
  hilbert->add_flag("--weighted", cfg.weighted, "multiply by multinomial coefficients");
  hilbert->add_flag("--fit", cfg.fit, "fit a rational function");
  hilbert->add_option("--guard", cfg.guard, "verified zero tail length (default 3)");
  hilbert->add_option("--jmax", cfg.jmax, "largest j in candidate factors (default |A|^2)");
  hilbert->add_option("--max-multiplicity", cfg.max_multiplicity, "uses per candidate factor (default 3)");
  hilbert->add_flag("--backtrack", cfg.backtrack, "backtracking search");

  if (argc > 1 && argv[1][0] != '-' && app.get_subcommand_no_throw(argv[1]) == nullptr) {
    std::cerr << "fwsa: error: command: unknown command '" << argv[1] << "' (see --help)\n";
    return 2;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    std::cerr << "fwsa: error: " << msg << "\n";
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.command == "factor-check" && factor->count("--max-size") == 0) cfg.max_size = 4;

  try {
    if (cfg.format != "json" && cfg.format != "csv") {
      throw UsageError("--format", "expected json or csv, got '" + cfg.format + "'");
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out = dispatch(cfg);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::string text;
    if (cfg.format == "csv") {
      if (!out.csv) throw UsageError("--format", "csv output is only available for objects, profile, bounds and hilbert");
      text = *out.csv;
    } else {
      text = make_report(cfg, std::move(out.payload), ms).dump(2) + "\n";
    }
    if (cfg.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(cfg.output);
      if (!f) throw UsageError("--output", "cannot open '" + cfg.output + "'");
      f << text;
    }
    return out.pass ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "fwsa: error: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    std::cerr << "fwsa: internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "fwsa: error: " << e.what() << "\n";
    return 2;
  }
}
