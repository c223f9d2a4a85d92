#include "lozimax/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "json_io.hpp"
#include "lozimax/conjugation.hpp"
#include "lozimax/csv.hpp"

namespace lozimax::cli {

namespace {

enum class Mode { Float, Exact };

// Raw parameter strings; interpretation depends on --mode.
struct Params {
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const { return values.count(key) && !values.at(key).empty(); }
  const std::string& get(const std::string& key) const {
    if (!has(key)) throw InvalidParameters("missing --" + key);
    return values.at(key);
  }
};

double parse_float(const std::string& name, const std::string& text) {
  if (text.find('/') != std::string::npos) {
    throw ParseError("--" + name + " '" + text + "': rational literal in float mode (use --mode exact)");
  }
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("--" + name + " '" + text + "' is not a number");
  }
  if (used != text.size() || !std::isfinite(v)) throw ParseError("--" + name + " '" + text + "' is not a finite number");
  return v;
}

Rational parse_exact(const std::string& name, const std::string& text) {
  if (text.find_first_of(".eE") != std::string::npos) {
    throw ParseError("--" + name + " '" + text + "': decimal literal in exact mode (use num/den)");
  }
  return parse_rational(text);
}

Formulation parse_formulation(const std::string& text) {
  if (text == "sys1" || text == "lozi1") return Formulation::Sys1;
  if (text == "sys2" || text == "lozi2") return Formulation::Sys2;
  if (text == "sys3" || text == "lozi3") return Formulation::Sys3;
  throw ParseError("unknown formulation '" + text + "'");
}

bool is_lozi(const std::string& map) { return map == "lozi1" || map == "lozi2" || map == "lozi3" || map == "lozi"; }

FloatMap float_map(const std::string& kind, const Params& p, Formulation lozi_form = Formulation::Sys3) {
  auto f = [&](const char* key) { return parse_float(key, p.get(key)); };
  if (is_lozi(kind)) {
    const Formulation form = kind == "lozi" ? lozi_form : parse_formulation(kind);
    return LoziMap<double>{{f("a"), f("b")}, form};
  }
  if (kind == "genlozi") return GenLoziMap<double>{GenLoziParams(f("alpha"), f("beta"), f("gamma"), f("delta"))};
  if (kind == "maxeq") {
    const double c = p.has("c") ? f("c") : 1.0;
    return MaxEqMap{MaxEqParams(f("k"), f("l"), f("m"), f("M"), c)};
  }
  throw ParseError("unknown map '" + kind + "' (lozi1|lozi2|lozi3|genlozi|maxeq)");
}

ExactMap exact_map(const std::string& kind, const Params& p) {
  auto r = [&](const char* key) { return parse_exact(key, p.get(key)); };
  if (is_lozi(kind)) {
    const Formulation form = kind == "lozi" ? Formulation::Sys3 : parse_formulation(kind);
    return LoziMap<Rational>{{r("a"), r("b")}, form};
  }
  if (kind == "genlozi") return GenLoziMap<Rational>{RationalGenLoziParams(r("alpha"), r("beta"), r("gamma"), r("delta"))};
  if (kind == "maxeq") throw InvalidParameters("max-type equations have no exact mode (real powers)");
  throw ParseError("unknown map '" + kind + "' (lozi1|lozi2|lozi3|genlozi|maxeq)");
}

Mode parse_mode(const std::string& text) {
  if (text == "float") return Mode::Float;
  if (text == "exact") return Mode::Exact;
  throw ParseError("unknown mode '" + text + "' (float|exact)");
}

void add_param_options(CLI::App* app, Params& p, std::initializer_list<const char*> keys) {
  for (const char* key : keys) {
    app->add_option(std::string("--") + key, p.values[key], std::string("parameter ") + key);
  }
}

// Writes `text` to the file, or to `out` when no file is given.
void emit_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidParameters("cannot write " + path);
  file << text;
}

json header() { return json{{"schema", kSchemaVersion}}; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// -- subcommands ----------------------------------------------------------------

struct SimulateArgs {
  std::string map, mode = "float", x0, x1, out;
  std::size_t steps = 100;
  double guard = kDefaultGuard;
  Params params;
};

int run_simulate(const SimulateArgs& args, std::ostream& out) {
  std::ostringstream csv;
  json summary = header();
  if (parse_mode(args.mode) == Mode::Exact) {
    const ExactMap map = exact_map(args.map, args.params);
    const RationalOrbit orbit = iterate(map, {parse_exact("x0", args.x0), parse_exact("x1", args.x1)}, args.steps);
    write_orbit_csv(csv, orbit);
    summary["termination"] = std::string(to_string(orbit.termination.kind));
    summary["points"] = orbit.points.size();
  } else {
    const FloatMap map = float_map(args.map, args.params);
    const Orbit orbit = iterate(map, {parse_float("x0", args.x0), parse_float("x1", args.x1)}, args.steps, args.guard);
    write_orbit_csv(csv, orbit);
    summary["termination"] = std::string(to_string(orbit.termination.kind));
    summary["termination_step"] = orbit.termination.step;
    summary["points"] = orbit.points.size();
  }
  emit_text(args.out, csv.str(), out);
  if (!args.out.empty()) out << dump(summary);
  return 0;
}

struct ConjugateArgs {
  Params params;
  std::string A, p, q;
  double base = 2.0;
};

int run_conjugate(const ConjugateArgs& args, std::ostream& out) {
  json j = header();
  const Params& prm = args.params;
  if (prm.has("k")) {
    auto f = [&](const char* key) { return parse_float(key, prm.get(key)); };
    const MaxEqParams mp(f("k"), f("l"), f("m"), f("M"), prm.has("c") ? f("c") : 1.0);
    const LoziForm form = lozi_form(mp, args.base);
    j["alpha"] = form.params.alpha;
    j["beta"] = form.params.beta;
    j["gamma"] = form.params.gamma;
    j["delta"] = form.params.delta;
    j["case"] = std::string(to_string(classify_family(form.params)));
    j["cov"] = {{"A", form.cov.base()}, {"p", form.cov.shift()}, {"q", form.cov.scale()}};
    out << dump(j);
    return 0;
  }
  auto f = [&](const char* key) { return parse_float(key, prm.get(key)); };
  const GenLoziParams gl(f("alpha"), f("beta"), f("gamma"), f("delta"));
  const bool custom = !args.A.empty() || !args.p.empty() || !args.q.empty();
  const ChangeOfVariables cov =
      custom ? ChangeOfVariables(parse_float("A", args.A.empty() ? "2" : args.A),
                                 parse_float("p", args.p.empty() ? "0" : args.p),
                                 parse_float("q", args.q.empty() ? (gl.alpha > 0 ? "1" : "-1") : args.q))
             : canonical_change(gl);
  const MaxEqParams mp = derive_max_params(gl, cov);
  j["k"] = mp.k;
  j["l"] = mp.l;
  j["m"] = mp.m;
  j["M"] = mp.M;
  j["c"] = mp.c;
  j["case"] = std::string(to_string(classify_family(gl)));
  j["cov"] = {{"A", cov.base()}, {"p", cov.shift()}, {"q", cov.scale()}};
  out << dump(j);
  return 0;
}

struct AnalyzeArgs {
  std::string map = "lozi3", mode = "float";
  Params params;
};

json cycle_json(const LoziParams& params, const Cycle& cycle) {
  json pts = json::array();
  for (const auto& p : cycle.points) pts.push_back(to_json(p));
  json c = {{"period", cycle.period}, {"points", pts}};
  try {
    const StabilityReport s = cycle_stability(params, cycle);
    c.update(to_json(s));
  } catch (const NonSmooth& e) {
    c["classification"] = "NonSmooth";
    c["eigenvalues"] = nullptr;
  }
  return c;
}

int run_analyze(const AnalyzeArgs& args, std::ostream& out) {
  json j = header();
  json cycles = json::array();
  const Mode mode = parse_mode(args.mode);
  if (is_lozi(args.map)) {
    if (mode == Mode::Exact) {
      const RationalLoziParams rp{parse_exact("a", args.params.get("a")), parse_exact("b", args.params.get("b"))};
      const RationalEquilibriumSet eq = equilibria(RationalGenLoziParams::from_lozi(rp));
      j["equilibria"] = to_json(eq);
      const LoziParams fp{rp.a.get_d(), rp.b.get_d()};
      std::vector<RationalCycle> exact_cycles;
      for (const auto& x : eq.isolated) exact_cycles.push_back({1, {RationalPoint{x, x}}});
      if (rp.a == rp.b) {
        for (auto& c : two_cycles_lozi_ab(rp.a)) exact_cycles.push_back(c);
      }
      for (const auto& c : exact_cycles) {
        Cycle approx{c.period, {}};
        json pts = json::array();
        for (const auto& p : c.points) {
          pts.push_back(to_json(p));
          approx.points.push_back(to_double(p));
        }
        json entry = cycle_json(fp, approx);
        entry["points"] = pts;
        try {
          const auto poly = cycle_characteristic(rp, c);
          entry["characteristic"] = json::array({to_string(poly[0]), to_string(poly[1])});
          entry["schur_cohn_stable"] = schur_cohn_stable(poly[0], poly[1]);
          if (auto roots = rational_roots(poly[0], poly[1])) {
            entry["exact_eigenvalues"] = json::array({to_string((*roots)[0]), to_string((*roots)[1])});
          }
        } catch (const NonSmooth&) {
        }
        cycles.push_back(entry);
      }
    } else {
      const LoziParams lp{parse_float("a", args.params.get("a")), parse_float("b", args.params.get("b"))};
      const EquilibriumSet eq = equilibria(lp);
      j["equilibria"] = to_json(eq);
      for (double x : eq.isolated) cycles.push_back(cycle_json(lp, Cycle{1, {PlanarPoint{x, x}}}));
      if (lp.a == lp.b) {
        for (const auto& c : two_cycles_lozi_ab(lp.a)) cycles.push_back(cycle_json(lp, c));
      }
    }
    // a = b = 1/2: the 2-cycles form the continuum {(v, 2 - v) : 0 <= v <= 2}.
    const std::string& a = args.params.get("a");
    const std::string& b = args.params.get("b");
    const bool half = mode == Mode::Exact ? parse_exact("a", a) == Rational(1, 2) && parse_exact("b", b) == Rational(1, 2)
                                          : parse_float("a", a) == 0.5 && parse_float("b", b) == 0.5;
    if (half) {
      j["cycle_continuum"] = {{"period", 2},
                              {"description", "(v, 2-v) for 0 <= v <= 2"},
                              {"eigenvalues", json::array({1.0, 0.25})},
                              {"classification", "Nonhyperbolic"}};
    }
  } else if (args.map == "genlozi") {
    if (mode == Mode::Exact) {
      auto r = [&](const char* key) { return parse_exact(key, args.params.get(key)); };
      j["equilibria"] = to_json(equilibria(RationalGenLoziParams(r("alpha"), r("beta"), r("gamma"), r("delta"))));
    } else {
      auto f = [&](const char* key) { return parse_float(key, args.params.get(key)); };
      j["equilibria"] = to_json(equilibria(GenLoziParams(f("alpha"), f("beta"), f("gamma"), f("delta"))));
    }
  } else if (args.map == "maxeq") {
    const auto map = std::get<MaxEqMap>(float_map("maxeq", args.params));
    j["equilibria"] = to_json(equilibria(map.params));
  } else {
    throw ParseError("unknown map '" + args.map + "'");
  }
  j["cycles"] = cycles;
  out << dump(j);
  return 0;
}

struct VerifyArgs {
  std::string preset = "a-half", eta = "1/1048576", trace;
  long levels = 3;
  std::size_t max_steps = 64;
  std::uint64_t seed = kDefaultSeed;
  bool serial = false;
};

int run_verify(const VerifyArgs& args, std::ostream& out) {
  SuiteOptions opts;
  opts.levels = args.levels;
  opts.max_steps = args.max_steps;
  opts.eta = parse_exact("eta", args.eta);
  opts.seed = args.seed;
  opts.parallel = !args.serial;
  std::ofstream trace_file;
  if (!args.trace.empty()) {
    trace_file.open(args.trace, std::ios::binary);
    if (!trace_file) throw InvalidParameters("cannot write " + args.trace);
    trace_file << "check,step,piece,vertices\n";
  }
  // Checks run in a fixed order; a trace row's check id counts the traced starts.
  std::size_t check = 0;
  if (trace_file.is_open()) {
    opts.trace = [&](std::size_t step, std::size_t index, const ConvexPolygon& poly) {
      if (step == 0 && index == 0) ++check;
      trace_file << check << ',' << step << ',' << index << ',' << format_polygon(poly) << '\n';
    };
  }
  std::vector<VerificationReport> reports;
  if (args.preset == "a-half") {
    reports = verify_global_attraction_a_half(opts);
  } else if (args.preset == "a-minus-half") {
    reports = verify_a_minus_half(opts);
  } else {
    throw ParseError("unknown preset '" + args.preset + "' (a-half|a-minus-half)");
  }
  json list = json::array();
  bool all = true;
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    all = all && r.certified();
  }
  json j = header();
  j["preset"] = args.preset;
  j["all_certified"] = all;
  j["reports"] = list;
  out << dump(j);
  return 0;
}

struct AttractorArgs {
  Params params;
  std::string x0, x1, out, formulation = "sys1";
  std::size_t burn = 1000, samples = 10000;
  double guard = kDefaultGuard;
  std::vector<double> boxes;
};

int run_attractor(const AttractorArgs& args, std::ostream& out) {
  json j = header();
  std::string kind;
  if (args.params.has("a")) {
    kind = "lozi";
  } else if (args.params.has("alpha")) {
    kind = "genlozi";
  } else if (args.params.has("k")) {
    kind = "maxeq";
  } else {
    throw InvalidParameters("give --a --b, --alpha..--delta, or --k..--M");
  }
  const FloatMap map = float_map(kind, args.params, parse_formulation(args.formulation));
  const std::string fallback = kind == "maxeq" ? "1" : "0";
  const PlanarPoint start{parse_float("x0", args.x0.empty() ? fallback : args.x0),
                          parse_float("x1", args.x1.empty() ? fallback : args.x1)};
  const PointCloud cloud = sample_attractor(map, start, args.burn, args.samples, args.guard);

  j["map"] = kind;
  j["bounded"] = cloud.bounded;
  j["burn"] = cloud.burn_in;
  j["recorded"] = cloud.points.size();
  if (!cloud.points.empty()) j["last_point"] = to_json(cloud.points.back());
  if (kind == "lozi") {
    const auto& lp = std::get<LoziMap<double>>(map).params;
    j["misiurewicz"] = to_json(misiurewicz_check(lp.a, lp.b));
    try {
      const TrappingTriangle tri = trapping_triangle(lp.a, lp.b);
      const TrappingCheck check = verify_trapping(tri, lp, 100);
      j["trapping"] = to_json(tri);
      j["trapping"]["inside"] = check.inside;
      j["trapping"]["max_violation"] = check.max_violation;
    } catch (const DegenerateParameters& e) {
      j["trapping"] = {{"error", e.what()}};
    }
  }
  if (!args.boxes.empty() && !cloud.points.empty()) {
    json counts = json::array();
    for (double g : args.boxes) counts.push_back({{"grid", g}, {"boxes", box_count(cloud.points, g)}});
    j["box_counts"] = counts;
  }
  if (!args.out.empty()) {
    std::ostringstream csv;
    write_points_csv(csv, cloud.points);
    emit_text(args.out, csv.str(), out);
  }
  out << dump(j);
  return 0;
}

struct ReproduceArgs {
  std::string id, out;
  std::uint64_t seed = kDefaultSeed;
};

int run_reproduce(const ReproduceArgs& args, std::ostream& out) {
  std::vector<const Preset*> selected;
  for (const auto& p : presets()) {
    if (args.id == "all" || args.id == p.id) selected.push_back(&p);
  }
  if (selected.empty()) {
    std::string known;
    for (const auto& p : presets()) known += (known.empty() ? "" : ", ") + p.id;
    throw ParseError("unknown preset '" + args.id + "'; known: " + known);
  }
  json rows = json::array();
  std::ostringstream table;
  table << "claim,expected,observed,result\n";
  bool all = true;
  for (const Preset* p : selected) {
    const PresetOutcome o = p->run(args.seed);
    all = all && o.pass;
    rows.push_back({{"preset", p->id},
                    {"anchor", p->anchor},
                    {"expected", p->expected},
                    {"observed", o.observed},
                    {"pass", o.pass},
                    {"details", o.details}});
    table << p->id << ",\"" << p->expected << "\",\"" << o.observed << "\"," << (o.pass ? "pass" : "fail") << "\n";
  }
  json j = header();
  j["seed"] = args.seed;
  if (selected.size() == 1) {
    j.update(rows.front());
  } else {
    j["results"] = rows;
    j["all_pass"] = all;
  }
  if (!args.out.empty()) emit_text(args.out, table.str(), out);
  out << dump(j);
  return all ? 0 : 1;
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
  json e = header();
  e["error"] = {{"kind", kind}, {"message", message}};
  err << e.dump() << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lozi maps, max-type difference equations and the conjugacy between them"};
  app.name("lozimax");
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "iterate a map and write the orbit as CSV");
  simulate->add_option("--map", sim.map, "lozi1|lozi2|lozi3|genlozi|maxeq")->required();
  add_param_options(simulate, sim.params, {"a", "b", "alpha", "beta", "gamma", "delta", "k", "l", "m", "M", "c"});
  simulate->add_option("--x0", sim.x0, "first state coordinate")->required();
  simulate->add_option("--x1", sim.x1, "second state coordinate")->required();
  simulate->add_option("--steps", sim.steps, "number of steps");
  simulate->add_option("--mode", sim.mode, "float|exact");
  simulate->add_option("--guard", sim.guard, "divergence guard (float mode)");
  simulate->add_option("--out", sim.out, "CSV file (default stdout)");

  ConjugateArgs conj;
  auto* conjugate = app.add_subcommand("conjugate", "max-type equation conjugate to a generalized Lozi map (or back)");
  add_param_options(conjugate, conj.params, {"alpha", "beta", "gamma", "delta", "k", "l", "m", "M", "c"});
  conjugate->add_option("--A", conj.A, "base of the logarithm");
  conjugate->add_option("--p", conj.p, "shift");
  conjugate->add_option("--q", conj.q, "scale");
  conjugate->add_option("--base", conj.base, "base used when starting from a max-type equation");

  AnalyzeArgs ana;
  auto* analyze = app.add_subcommand("analyze", "equilibria, cycles and their stability");
  analyze->add_option("--map", ana.map, "lozi3|genlozi|maxeq");
  add_param_options(analyze, ana.params, {"a", "b", "alpha", "beta", "gamma", "delta", "k", "l", "m", "M", "c"});
  analyze->add_option("--mode", ana.mode, "float|exact");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify-region", "exact invariant-region certificate");
  verify->add_option("--preset", ver.preset, "a-half|a-minus-half");
  verify->add_option("--levels", ver.levels, "highest frame level");
  verify->add_option("--max-steps", ver.max_steps, "step budget per check");
  verify->add_option("--eta", ver.eta, "smallness threshold as num/den");
  verify->add_option("--seed", ver.seed, "seed for the random polygons");
  verify->add_option("--trace", ver.trace, "CSV trace of every piece");
  verify->add_flag("--serial", ver.serial, "use the serial worklist kernel");

  AttractorArgs att;
  auto* attractor = app.add_subcommand("attractor", "sample an attractor; Misiurewicz and trapping checks");
  add_param_options(attractor, att.params, {"a", "b", "alpha", "beta", "gamma", "delta", "k", "l", "m", "M", "c"});
  attractor->add_option("--formulation", att.formulation, "sys1|sys2|sys3 for --a --b");
  attractor->add_option("--x0", att.x0, "first state coordinate");
  attractor->add_option("--x1", att.x1, "second state coordinate");
  attractor->add_option("--burn", att.burn, "burn-in steps");
  attractor->add_option("--samples", att.samples, "recorded states");
  attractor->add_option("--guard", att.guard, "divergence guard");
  attractor->add_option("--box", att.boxes, "box-count grid sizes");
  attractor->add_option("--out", att.out, "CSV file for the cloud");

  ReproduceArgs rep;
  auto* reproduce = app.add_subcommand("reproduce", "rerun a documented claim (or 'all')");
  reproduce->add_option("preset", rep.id, "preset id or 'all'")->required();
  reproduce->add_option("--out", rep.out, "CSV summary table");
  reproduce->add_option("--seed", rep.seed, "seed for randomized presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    write_error(err, "UsageError", e.what());
    return 2;
  }

  try {
    if (*simulate) return run_simulate(sim, out);
    if (*conjugate) return run_conjugate(conj, out);
    if (*analyze) return run_analyze(ana, out);
    if (*verify) return run_verify(ver, out);
    if (*attractor) return run_attractor(att, out);
    if (*reproduce) return run_reproduce(rep, out);
  } catch (const ParseError& e) {
    // malformed flag values are usage errors, like unknown flags
    write_error(err, e.kind(), e.what());
    return 2;
  } catch (const Error& e) {
    write_error(err, e.kind(), e.what());
    return 1;
  } catch (const std::exception& e) {
    write_error(err, "InternalError", e.what());
    return 1;
  }
  return 1;
}

}  // namespace lozimax::cli
