#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <memory>
#include <optional>

#include "glstep/barrier.hpp"
#include "glstep/error.hpp"
#include "glstep/gl1d.hpp"
#include "glstep/halfline.hpp"
#include "glstep/parallel.hpp"
#include "glstep/phase.hpp"
#include "glstep/strip2d.hpp"

namespace glstep::cli {

using json = nlohmann::ordered_json;

namespace {

struct Options {
  double a = 0.0;
  double b = 0.0;
  std::vector<double> a_list;
  std::vector<double> b_list;
  std::string grid;
  std::vector<double> schedule;
  double tol = 0.0;  // 0 keeps the module default
  std::string out;
  std::string format = "csv";
  int threads = 1;
  bool energies = false;
  bool to_stdout = false;
  // 1D profile at a fixed xi (gl1d); NaN selects the optimal xi.
  double xi = std::nan("");
  // Strip geometry.
  double R = 8.0;
  double m = 6.0;
  double h = 0.0;
  std::string dump;
  // Phase geometry.
  double len_gamma = 1.0;
  double len_bnd1 = 1.0;
  double len_bnd2 = 1.0;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Result {
  json inputs = json::object();
  json outputs = json::object();
  json provenance = json::object();
  Table table;
};

json to_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        else if constexpr (std::is_same_v<T, double>) return std::isfinite(v) ? json(v) : json(nullptr);
        else return json(v);
      },
      c);
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }
Cell optional_cell(const std::optional<double>& v) { return v ? Cell(*v) : Cell(std::monostate{}); }

std::string render_csv(const Table& t) {
  std::string s;
  for (std::size_t k = 0; k < t.columns.size(); ++k) s += (k ? "," : "") + csv_field(t.columns[k]);
  s += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) s += (k ? "," : "") + csv_field(row[k]);
    s += "\n";
  }
  return s;
}

json table_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::array();
    for (const Cell& c : row) r.push_back(to_json(c));
    rows.push_back(std::move(r));
  }
  return json{{"columns", t.columns}, {"rows", std::move(rows)}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::Input, "cannot open output file " + path);
  f << text;
  if (!f) fail(ErrorKind::Input, "cannot write output file " + path);
}

void emit(const std::string& command, const Options& o, Result r, std::ostream& out, std::ostream& err) {
  json rec;
  rec["command"] = command;
  rec["version"] = kVersion;
  rec["inputs"] = std::move(r.inputs);
  rec["outputs"] = std::move(r.outputs);
  rec["provenance"] = std::move(r.provenance);
  rec["provenance"]["threads"] = o.threads;

  const bool csv = o.format == "csv";
  std::string primary;
  if (csv) {
    primary = render_csv(r.table);
  } else {
    rec["outputs"]["table"] = table_json(r.table);
    primary = rec.dump(2) + "\n";
  }
  const std::string path = o.out.empty() ? command + (csv ? ".csv" : ".json") : o.out;
  if (o.to_stdout) {
    out << primary;
  } else {
    write_file(path, primary);
    err << "wrote " << path << "\n";
  }
  if (csv && (!o.to_stdout || !o.out.empty())) {
    write_file(path + ".summary.json", rec.dump(2) + "\n");
    err << "wrote " << path << ".summary.json\n";
  }
}

void require_grid(const Options& o, const char* what) {
  if (o.grid.empty()) fail(ErrorKind::Input, std::string("--grid is required (") + what + ")");
}

DescentOptions descent(const Options& o) {
  DescentOptions d;
  if (o.tol > 0.0) d.grad_tol = o.tol;
  return d;
}

void check_not_bulk(double a, double b) {
  if (!(b > 1.0 / std::abs(a)))
    fail(ErrorKind::Domain, "b = " + std::to_string(b) + " <= 1/|a| = " + std::to_string(1.0 / std::abs(a)) +
                                " is the bulk regime (treated previously), outside this model");
}

// Subcommands.

Result cmd_degennes(const Options& o) {
  require_grid(o, "gamma values");
  const std::vector<double> gammas = parse_grid(o.grid);
  HalflineDisc disc;
  if (o.tol > 0.0) disc.scalar_tol = o.tol;
  std::vector<DeGennesPoint> pts(gammas.size());
  parallel_for(gammas.size(), [&](std::size_t k) { pts[k] = theta(gammas[k], disc); });
  Result r;
  r.inputs = {{"grid", o.grid}};
  r.table.columns = {"gamma", "theta", "xi_star", "phi0"};
  for (const DeGennesPoint& p : pts) r.table.rows.push_back({p.gamma, p.theta, p.xi_star, p.phi0});
  r.outputs = {{"points", gammas.size()}};
  r.provenance = {{"h", disc.h}, {"min_truncation", disc.min_truncation}, {"scalar_tol", disc.scalar_tol}};
  return r;
}

Result cmd_fiber(const Options& o) {
  FiberDisc disc;
  if (o.tol > 0.0) disc.scalar_tol = o.tol;
  const std::vector<double> xs = parse_grid(o.grid.empty() ? "-4:2:0.25" : o.grid);
  const DispersionCurve c = beta(o.a, disc);
  const std::vector<double> mu = dispersion(o.a, xs, disc);
  Result r;
  r.inputs = {{"a", o.a}, {"grid", o.grid.empty() ? "-4:2:0.25" : o.grid}};
  r.table.columns = {"xi", "mu"};
  for (std::size_t k = 0; k < xs.size(); ++k) r.table.rows.push_back({xs[k], mu[k]});
  const bool attained = c.zeta.has_value();
  r.outputs = {{"beta", c.beta},
               {"zeta", optional_json(c.zeta)},
               {"f0", attained ? json(c.f0) : json(nullptr)},
               {"nu", attained ? json(c.nu) : json(nullptr)},
               {"near_tie", c.near_tie}};
  r.provenance = {{"h", disc.h}, {"scan", {disc.scan_lo, disc.scan_hi, disc.scan_step}}, {"scalar_tol", disc.scalar_tol}};
  return r;
}

Result cmd_gl1d(const Options& o) {
  FiberDisc disc;
  Profile1DOptions popt;
  popt.descent = descent(o);
  Result r;
  r.inputs = {{"a", o.a}, {"b", o.b}, {"xi", std::isnan(o.xi) ? json(nullptr) : json(o.xi)}};
  r.provenance = {{"h", disc.h}, {"grad_tol", popt.descent.grad_tol}};
  r.table.columns = {"t", "f"};
  auto fill = [&](const GLProfile1D& f) {
    for (std::size_t i = 0; i < f.values.size(); ++i) r.table.rows.push_back({f.grid.node(i), f.values[i]});
    r.provenance["nodes"] = f.grid.size();
    r.provenance["iterations"] = f.iterations;
  };
  if (!std::isnan(o.xi)) {
    const GLProfile1D f = minimize_profile(o.a, o.b, o.xi, disc, popt);
    fill(f);
    r.outputs = {{"xi", o.xi}, {"energy", f.energy}, {"trivial", f.trivial}, {"converged", f.converged},
                 {"grad_norm", f.grad_norm}};
    return r;
  }
  const DispersionCurve c = beta(o.a, disc);
  if (o.a > 0.0 || threshold_reached(o.b, c.beta)) {
    if (o.a < 0.0) check_not_bulk(o.a, o.b);
    r.outputs = {{"xi0", nullptr}, {"energy", 0.0}, {"trivial", true}, {"beta", c.beta}};
    return r;
  }
  const OptimalXi x = optimal_xi(o.a, o.b, c, disc, popt);
  fill(x.profile);
  r.outputs = {{"xi0", x.xi0},
               {"energy", x.energy},
               {"trivial", x.profile.trivial},
               {"beta", c.beta},
               {"bracket", {x.bracket.first, x.bracket.second}},
               {"evaluations", x.evaluations},
               {"moment_residual", moment_identity_residual(x.profile)},
               {"converged", x.profile.converged}};
  return r;
}

Result cmd_surface(const Options& o) {
  require_grid(o, "b values");
  const std::vector<double> bs = parse_grid(o.grid);
  HalflineDisc disc;
  Profile1DOptions popt;
  popt.descent = descent(o);
  std::vector<SurfaceEnergySample> s(bs.size());
  parallel_for(bs.size(), [&](std::size_t k) { s[k] = surface_energy(bs[k], disc, popt); });
  Result r;
  r.inputs = {{"grid", o.grid}};
  r.table.columns = {"b", "value", "xi0"};
  for (const SurfaceEnergySample& p : s) r.table.rows.push_back({p.b, p.value, optional_cell(p.xi0)});
  r.outputs = {{"points", bs.size()}, {"inv_theta0", 1.0 / theta(0.0, disc).theta}};
  r.provenance = {{"h", disc.h}, {"grad_tol", popt.descent.grad_tol}};
  return r;
}

json decay_json(const StripState& s) {
  const DecayReport d = decay_diagnostics(s);
  return {{"weighted_l2", d.weighted_l2}, {"weighted_l4", d.weighted_l4}, {"plain_mass", d.plain_mass},
          {"mass", d.mass},           {"quartic", d.quartic},         {"l2_constant", d.l2_constant},
          {"l4_constant", d.l4_constant}, {"mass_constant", d.mass_constant}};
}

Result cmd_strip(const Options& o) {
  StripDisc d;
  d.a = o.a;
  d.b = o.b;
  d.R = o.R;
  d.m = o.m;
  d.hx = d.hy = o.h > 0.0 ? o.h : StripDisc::default_spacing(o.b);
  d.validate();
  const DispersionCurve c = o.a > 0.0 ? DispersionCurve{} : beta(o.a);
  StripOptions sopt;
  sopt.descent = descent(o);
  Result r;
  r.inputs = {{"a", o.a}, {"b", o.b}, {"R", o.R}, {"m", o.m}, {"h", d.hx}, {"schedule", o.schedule}};
  r.table.columns = {"m", "energy"};
  StripState s;
  if (o.schedule.empty()) {
    s = o.a > 0.0 ? minimize_strip(d, sopt) : minimize_strip(d, c, sopt);
    r.table.rows.push_back({d.m, s.energy});
  } else {
    StripGroundOptions g;
    g.m_schedule = o.schedule;
    g.hx = g.hy = d.hx;
    g.strip = sopt;
    const StripGround gs = o.a > 0.0 ? strip_ground_state(o.a, o.b, o.R, g) : strip_ground_state(o.a, o.b, o.R, c, g);
    for (std::size_t k = 0; k < gs.energies.size(); ++k) r.table.rows.push_back({gs.m_values[k], gs.energies[k]});
    s = gs.state;
  }
  r.outputs = {{"energy", s.energy},   {"sup_norm", s.sup_norm},   {"converged", s.converged},
               {"m", s.disc.m},        {"decay", decay_json(s)}};
  r.provenance = {{"nx", s.disc.nx()},         {"ny", s.disc.ny()},
                  {"iterations", s.iterations}, {"grad_norm", s.grad_norm},
                  {"grad_tol", sopt.descent.grad_tol}};
  if (!o.dump.empty()) {
    write_strip_dump(s, o.dump);
    r.outputs["dump"] = o.dump;
  }
  return r;
}

Result cmd_barrier(const Options& o) {
  if (o.a == 0.0 || o.a < -1.0 || o.a >= 1.0) fail(ErrorKind::Domain, "a must lie in [-1, 1) without 0");
  check_not_bulk(o.a, o.b);
  BarrierOptions bopt;
  if (!o.schedule.empty()) bopt.schedule = o.schedule;
  bopt.strip.hx = bopt.strip.hy = o.h;
  bopt.strip.strip.descent = descent(o);
  Result r;
  r.inputs = {{"a", o.a}, {"b", o.b}, {"schedule", bopt.schedule}, {"h", o.h > 0.0 ? o.h : StripDisc::default_spacing(o.b)}};
  r.table.columns = {"R", "g", "g_over_R", "m"};

  std::optional<DispersionCurve> curve;
  BarrierEnergyEstimate e;
  if (o.a > 0.0) {
    e = barrier_energy(o.a, o.b, bopt);
  } else {
    curve = beta(o.a);
    e = barrier_energy(o.a, o.b, *curve, bopt);
  }
  for (const SchedulePoint& p : e.schedule) r.table.rows.push_back({p.R, p.g, p.g_over_R, p.m});

  json e1d = nullptr, gap = nullptr, upper = nullptr;
  if (curve) {
    upper = analytic_bounds(o.a, o.b, *curve, 0.0).upper;
    if (e.analytic_zero) {
      e1d = 0.0;
      gap = 0.0;
    } else {
      const double v = optimal_xi(o.a, o.b, *curve).energy;
      e1d = v;
      gap = std::abs(e.e_best - v) / std::abs(v);
    }
  }
  r.outputs = {{"e_lower", e.e_lower},   {"e_best", e.e_best},       {"e_upper", e.e_upper},
               {"e1d", e1d},             {"gap", gap},               {"analytic_upper", upper},
               {"analytic_zero", e.analytic_zero}, {"fit_e", e.fit_e}, {"fit_c", e.fit_c},
               {"fit_c_over_b2", e.fit_c_over_b2}, {"wall_e", e.wall_e}, {"wall_w", e.wall_w}};
  r.provenance = {{"m_schedule", bopt.strip.m_schedule}, {"gap_tol", bopt.strip.gap_tol},
                  {"grad_tol", bopt.strip.strip.descent.grad_tol}};
  return r;
}

Result cmd_phase(const Options& o) {
  std::vector<double> as = o.a_list;
  std::vector<double> bs = o.b_list;
  if (!o.grid.empty()) {
    const std::vector<double> g = parse_grid(o.grid);
    bs.insert(bs.end(), g.begin(), g.end());
  }
  if (as.empty() || bs.empty()) fail(ErrorKind::Input, "phase needs --a values and --b or --grid values");
  std::map<double, Thresholds> th;
  for (double a : as) {
    if (a == 0.0) fail(ErrorKind::Input, "phase grid contains a = 0");
    th.emplace(a, thresholds(a));
  }
  const DomainGeometry geom{o.len_gamma, o.len_bnd1, o.len_bnd2};
  struct Row {
    bool bulk = false;
    PhaseVerdict v;
  };
  std::vector<Row> rows(as.size() * bs.size());
  PhaseEnergyOptions popt;
  popt.barrier.strip.strip.descent = descent(o);
  parallel_for(rows.size(), [&](std::size_t k) {
    const double a = as[k / bs.size()], b = bs[k % bs.size()];
    if (!(b > 1.0 / std::abs(a))) {
      rows[k].bulk = true;
      return;
    }
    std::optional<PhaseEnergies> e;
    if (o.energies) e = phase_energies(a, b, popt);
    rows[k].v = classify(a, b, th.at(a), e, geom);
  });
  Result r;
  r.inputs = {{"a", as}, {"b", bs}, {"energies", o.energies},
              {"geometry", {o.len_gamma, o.len_bnd1, o.len_bnd2}}};
  r.table.columns = {"a", "b", "barrier", "bnd1", "bnd2", "regime", "EL"};
  const Cell none = std::monostate{};
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const double a = as[k / bs.size()], b = bs[k % bs.size()];
    const Row& w = rows[k];
    if (w.bulk) {
      r.table.rows.push_back({a, b, none, none, none, std::string("bulk"), none});
      continue;
    }
    r.table.rows.push_back({a, b, w.v.barrier_super, w.v.bnd1_super, w.v.bnd2_super, w.v.regime_label,
                            o.energies ? Cell(w.v.EL) : none});
  }
  json t = json::array();
  for (const auto& [a, x] : th)
    t.push_back({{"a", a}, {"inv_abs_a", x.inv_abs_a}, {"inv_beta", x.inv_beta}, {"inv_theta", x.inv_theta},
                 {"inv_a_theta", x.inv_a_theta}});
  r.outputs = {{"thresholds", std::move(t)}, {"cells", rows.size()},
               {"mode", o.energies ? "energy" : "sign-only"}};
  r.provenance = {{"barrier_energy", o.energies ? "one-dimensional" : "none"}};
  return r;
}

void add_io(CLI::App* s, Options& o) {
  s->add_option("--out", o.out, "output path (default <command>.csv or .json)");
  s->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  s->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  s->add_option("--tol", o.tol, "solver tolerance")->check(CLI::PositiveNumber);
  s->add_flag("--stdout", o.to_stdout, "write data to stdout instead of a file");
}

}  // namespace

std::string csv_field(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "1" : "0";
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return "";
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.17g", v);
          return buf;
        } else {
          if (v.find_first_of(",\"\r\n") == std::string::npos) return v;
          std::string q = "\"";
          for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
          return q + "\"";
        }
      },
      c);
}

std::vector<double> parse_grid(const std::string& spec) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) fail(ErrorKind::Input, "bad grid value '" + s + "' in " + spec);
    return v;
  };
  std::vector<double> out;
  if (spec.empty()) fail(ErrorKind::Input, "empty grid");
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> p;
    std::size_t start = 0;
    for (std::size_t pos; (pos = spec.find(':', start)) != std::string::npos; start = pos + 1)
      p.push_back(spec.substr(start, pos - start));
    p.push_back(spec.substr(start));
    if (p.size() != 3) fail(ErrorKind::Input, "grid must be lo:hi:step, got " + spec);
    const double lo = number(p[0]), hi = number(p[1]), step = number(p[2]);
    if (!(step > 0.0)) fail(ErrorKind::Input, "grid step must be positive: " + spec);
    if (hi < lo) fail(ErrorKind::Input, "empty grid " + spec);
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    if (n > 1000000) fail(ErrorKind::Input, "grid too large: " + spec);
    for (std::size_t k = 0; k < n; ++k) out.push_back(lo + static_cast<double>(k) * step);
    return out;
  }
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = spec.find(',', start);
    out.push_back(number(spec.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ginzburg-Landau energies under a step magnetic field", "glstep"};
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "key=value file with one [section] per subcommand")->envname("GLSTEP_CONFIG");
  app.set_version_flag("--version", kVersion);

  using Handler = Result (*)(const Options&);
  struct Sub {
    CLI::App* app;
    Handler handler;
    Options opt;
  };
  std::map<std::string, std::unique_ptr<Sub>> subs;
  auto sub = [&](const std::string& name, const std::string& help, Handler h) {
    auto s = std::make_unique<Sub>();
    s->app = app.add_subcommand(name, help);
    s->handler = h;
    add_io(s->app, s->opt);
    Sub* raw = s.get();
    subs.emplace(name, std::move(s));
    return raw;
  };

  Sub* dg = sub("degennes", "de Gennes curve Theta(gamma) on a gamma grid", cmd_degennes);
  dg->app->add_option("--grid", dg->opt.grid, "gamma grid lo:hi:step or list");

  Sub* fb = sub("fiber", "band function of the step-field fiber operator", cmd_fiber);
  fb->app->add_option("--a", fb->opt.a, "field ratio a")->required();
  fb->app->add_option("--grid", fb->opt.grid, "xi grid for the dispersion table");

  Sub* gl = sub("gl1d", "whole-line 1D GL profile, optimal over xi", cmd_gl1d);
  gl->app->add_option("--a", gl->opt.a)->required();
  gl->app->add_option("--b", gl->opt.b)->required();
  gl->app->add_option("--xi", gl->opt.xi, "fix xi instead of optimising");

  Sub* sf = sub("surface", "surface energy E_surf on a b grid", cmd_surface);
  sf->app->add_option("--grid", sf->opt.grid, "b grid lo:hi:step or list");

  Sub* st = sub("strip", "2D strip ground state", cmd_strip);
  st->app->add_option("--a", st->opt.a)->required();
  st->app->add_option("--b", st->opt.b)->required();
  st->app->add_option("--R", st->opt.R, "strip width");
  st->app->add_option("--m", st->opt.m, "half height of the truncation");
  st->app->add_option("--spacing", st->opt.h, "lattice spacing (default min(0.05, 1/(4 sqrt b)))");
  st->app->add_option("--schedule", st->opt.schedule, "m schedule; runs the adaptive ground state")->delimiter(',');
  st->app->add_option("--dump", st->opt.dump, "binary state dump path");

  Sub* br = sub("barrier", "barrier energy per unit length from an R schedule", cmd_barrier);
  br->app->add_option("--a", br->opt.a)->required();
  br->app->add_option("--b", br->opt.b)->required();
  br->app->add_option("--schedule", br->opt.schedule, "strip widths R")->delimiter(',');
  br->app->add_option("--spacing", br->opt.h, "lattice spacing");

  Sub* ph = sub("phase", "phase map over an (a, b) grid", cmd_phase);
  ph->app->add_option("--a", ph->opt.a_list, "a values")->delimiter(',')->required();
  ph->app->add_option("--b", ph->opt.b_list, "b values")->delimiter(',');
  ph->app->add_option("--grid", ph->opt.grid, "b grid lo:hi:step");
  ph->app->add_flag("--energies", ph->opt.energies, "compute energies (1D barrier energy) and EL");
  ph->app->add_option("--len-gamma", ph->opt.len_gamma)->check(CLI::NonNegativeNumber);
  ph->app->add_option("--len-bnd1", ph->opt.len_bnd1)->check(CLI::NonNegativeNumber);
  ph->app->add_option("--len-bnd2", ph->opt.len_bnd2)->check(CLI::NonNegativeNumber);

  std::vector<const char*> argv{"glstep"};
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  for (auto& [name, s] : subs) {
    if (!s->app->parsed()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const int threads = thread_count();
      set_thread_count(s->opt.threads);
      Result r = s->handler(s->opt);
      set_thread_count(threads);
      emit(name, s->opt, std::move(r), out, err);
    } catch (const Error& e) {
      err << "glstep " << name << ": " << to_string(e.kind()) << " error: " << e.what() << "\n";
      const bool usage = e.kind() == ErrorKind::Input || e.kind() == ErrorKind::Domain;
      return usage ? kUsage : kSolver;
    } catch (const std::exception& e) {
      err << "glstep " << name << ": " << e.what() << "\n";
      return kSolver;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", secs);
    err << "glstep " << name << ": wall " << buf << " s\n";
  }
  return kOk;
}

}  // namespace glstep::cli
