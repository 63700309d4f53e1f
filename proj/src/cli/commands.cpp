#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cli/output.hpp"
#include "gibbsdice/datasets.hpp"
#include "gibbsdice/estimation.hpp"
#include "gibbsdice/model.hpp"
#include "gibbsdice/plot.hpp"
#include "gibbsdice/random.hpp"
#include "gibbsdice/simpson.hpp"
#include "gibbsdice/validation.hpp"

namespace gibbsdice::cli {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Flag values shared by several subcommands.

struct DatasetFlags {
  std::vector<std::string> builtin;
  std::vector<std::string> file;
};

struct GeometryFlags {
  std::string cuboid;
  std::string xxy;
  std::string heights;
  std::optional<double> scale;
};

struct FitFlags {
  double lo = 0.0;
  double hi = 100.0;
  double tol = 1e-6;

  FitOptions options() const { return {lo, hi, tol}; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<ExperimentRecord> resolve_all(const DatasetFlags& flags) {
  std::vector<ExperimentRecord> out;
  for (const auto& name : flags.builtin) out.push_back(load_builtin(name));
  for (const auto& path : flags.file) {
    ExperimentRecord r = parse_experiment(read_file(path));
    if (r.name.empty()) r.name = path;
    out.push_back(std::move(r));
  }
  return out;
}

ExperimentRecord resolve_one(const DatasetFlags& flags) {
  const std::size_t n = flags.builtin.size() + flags.file.size();
  if (n != 1) throw UsageError("give exactly one dataset via --builtin <name> or --file <path>");
  return resolve_all(flags).front();
}

std::string dataset_kind(const ExperimentRecord& r) {
  if (std::holds_alternative<CuboidExperiment>(r.data)) return "cuboid";
  if (std::holds_alternative<GeneralDieExperiment>(r.data)) return "die";
  return "xxy";
}

EnergyNormalization named_normalization(const std::string& name) {
  if (name == "half-diagonal") return EnergyNormalization::half_diagonal();
  if (name == "geometric-mean") return EnergyNormalization::geometric_mean();
  throw UsageError("unknown normalization '" + name +
                   "' (expected auto, half-diagonal or geometric-mean)");
}

std::string describe(const EnergyNormalization& norm) {
  switch (norm.kind()) {
    case EnergyNormalization::Kind::HalfDiagonal: return "half-diagonal";
    case EnergyNormalization::Kind::GeometricMean: return "geometric-mean";
    case EnergyNormalization::Kind::Explicit:
      return "explicit(" + format_number(norm.scale()) + ")";
  }
  return {};
}

// Geometric-mean for xxy families, half-diagonal for six-face cuboids, the
// stored scale for general dice.
EnergyNormalization normalization_for(const ExperimentRecord& r, const std::string& flag) {
  if (const auto* die = std::get_if<GeneralDieExperiment>(&r.data)) {
    if (flag != "auto" && flag != "explicit") {
      throw UsageError("a general die carries its own normalization scale; omit --norm");
    }
    return EnergyNormalization::explicit_scale(die->die.scale);
  }
  if (flag == "auto") {
    return std::holds_alternative<XxyFamily>(r.data) ? EnergyNormalization::geometric_mean()
                                                     : EnergyNormalization::half_diagonal();
  }
  return named_normalization(flag);
}

struct StateModel {
  std::vector<double> heights;
  EnergyVector energies;
  TossCounts counts;
};

StateModel state_model(const ExperimentRecord& r, const EnergyNormalization& norm) {
  if (const auto* c = std::get_if<CuboidExperiment>(&r.data)) {
    return {c->cuboid.half_heights(), cuboid_energies(c->cuboid, norm), c->counts};
  }
  const auto& d = std::get<GeneralDieExperiment>(r.data);
  return {d.die.heights, general_energies(d.die), d.counts};
}

std::string boundary_name(FitBoundary b) {
  switch (b) {
    case FitBoundary::None: return "none";
    case FitBoundary::Lower: return "lower";
    case FitBoundary::Upper: return "upper";
  }
  return "none";
}

json fit_json(const FitResult& f) {
  json j;
  j["beta_hat"] = f.beta_hat;
  j["neg_log_likelihood"] = f.neg_log_likelihood_at_min;
  j["iterations"] = f.iterations;
  j["bracket"] = {f.lo, f.hi};
  j["converged"] = f.converged;
  j["boundary"] = boundary_name(f.boundary);
  return j;
}

Table fit_table(const FitResult& f) {
  return {"fit",
          {"quantity", "value"},
          {{Cell::str("beta_hat"), Cell::num(f.beta_hat)},
           {Cell::str("neg_log_likelihood"), Cell::num(f.neg_log_likelihood_at_min)},
           {Cell::str("iterations"), Cell::count(f.iterations)},
           {Cell::str("converged"), Cell::str(f.converged ? "yes" : "no")},
           {Cell::str("boundary"), Cell::str(boundary_name(f.boundary))}}};
}

FitResult fit_record(const ExperimentRecord& r, const EnergyNormalization& norm,
                     const FitOptions& opts) {
  if (const auto* fam = std::get_if<XxyFamily>(&r.data)) {
    return fit_beta_global(fam->rows, opts, norm);
  }
  const StateModel m = state_model(r, norm);
  return fit_beta(m.energies, m.counts, opts);
}

// Per-state (or per-cuboid) model-vs-data view at a given beta.
void add_comparison(Report& rep, const ExperimentRecord& r, const EnergyNormalization& norm,
                    double beta) {
  Table t;
  json rows = json::array();
  if (const auto* fam = std::get_if<XxyFamily>(&r.data)) {
    t = {"cuboids", {"s_x", "s_y", "s_y/s_x", "N", "n_xx", "f_xx[%]", "p_xx[%]"}, {}};
    for (const auto& o : fam->rows) {
      const double p = xxy_pxx(o.sx, o.sy, beta, norm);
      t.rows.push_back({Cell::num(o.sx), Cell::num(o.sy), Cell::num(o.sy / o.sx),
                        Cell::count(static_cast<std::int64_t>(o.tosses)),
                        Cell::count(static_cast<std::int64_t>(o.nxx)), Cell::percent(o.fxx()),
                        Cell::percent(p)});
      rows.push_back({{"sx", o.sx},
                      {"sy", o.sy},
                      {"ratio", o.sy / o.sx},
                      {"N", o.tosses},
                      {"nxx", o.nxx},
                      {"fxx", o.fxx()},
                      {"pxx", p}});
    }
    rep.results["cuboids"] = rows;
  } else {
    const StateModel m = state_model(r, norm);
    const ProbabilityVector p = gibbs_probabilities(m.energies, beta);
    t = {"states", {"state", "h", "E", "n", "f[%]", "p[%]"}, {}};
    for (std::size_t i = 0; i < p.size(); ++i) {
      t.rows.push_back({Cell::count(static_cast<std::int64_t>(i + 1)), Cell::num(m.heights[i]),
                        Cell::num(m.energies[i]),
                        Cell::count(static_cast<std::int64_t>(m.counts[i])),
                        Cell::percent(m.counts.frequency(i)), Cell::percent(p[i])});
      rows.push_back({{"state", i + 1},
                      {"height", m.heights[i]},
                      {"energy", m.energies[i]},
                      {"count", m.counts[i]},
                      {"frequency", m.counts.frequency(i)},
                      {"probability", p[i]}});
    }
    rep.results["states"] = rows;
  }
  rep.tables.push_back(std::move(t));
}

// ---------------------------------------------------------------------------
// Geometry flags for predict / simulate.

std::vector<double> parse_number_list(const std::string& text, char sep, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--" + flag + ": cannot parse '" + item + "' as a number");
    }
  }
  return out;
}

struct Geometry {
  enum class Kind { Cuboid, Xxy, Die } kind;
  CuboidSpec cuboid;
  double sx = 0.0, sy = 0.0;
  GeneralDieSpec die;
  std::string canonical;
};

Geometry parse_geometry(const GeometryFlags& g) {
  const int given = !g.cuboid.empty() + !g.xxy.empty() + !g.heights.empty();
  if (given != 1) throw UsageError("give exactly one of --cuboid, --xxy or --heights");
  Geometry out{};
  if (!g.cuboid.empty()) {
    const auto s = parse_number_list(g.cuboid, 'x', "cuboid");
    if (s.size() != 3) throw UsageError("--cuboid expects AxBxC");
    out.kind = Geometry::Kind::Cuboid;
    out.cuboid = {s[0], s[1], s[2]};
    out.cuboid.validate();
    out.canonical = "cuboid:" + g.cuboid;
  } else if (!g.xxy.empty()) {
    const auto s = parse_number_list(g.xxy, 'x', "xxy");
    if (s.size() != 2) throw UsageError("--xxy expects SXxSY");
    out.kind = Geometry::Kind::Xxy;
    out.sx = s[0];
    out.sy = s[1];
    xxy_energies(out.sx, out.sy);
    out.canonical = "xxy:" + g.xxy;
  } else {
    if (!g.scale) throw UsageError("--heights needs --scale");
    out.kind = Geometry::Kind::Die;
    out.die = {parse_number_list(g.heights, ',', "heights"), *g.scale};
    out.die.validate();
    out.canonical = "heights:" + g.heights + ";scale:" + format_number(*g.scale);
  }
  if (out.kind != Geometry::Kind::Die && g.scale) {
    throw UsageError("--scale only applies to --heights");
  }
  return out;
}

EnergyNormalization geometry_normalization(const Geometry& g, const std::string& flag) {
  switch (g.kind) {
    case Geometry::Kind::Die:
      if (flag != "auto" && flag != "explicit") {
        throw UsageError("--heights uses --scale as its normalization; omit --norm");
      }
      return EnergyNormalization::explicit_scale(g.die.scale);
    case Geometry::Kind::Xxy:
      return flag == "auto" ? EnergyNormalization::geometric_mean() : named_normalization(flag);
    case Geometry::Kind::Cuboid:
      return flag == "auto" ? EnergyNormalization::half_diagonal() : named_normalization(flag);
  }
  return EnergyNormalization::half_diagonal();
}

json geometry_json(const Geometry& g) {
  switch (g.kind) {
    case Geometry::Kind::Cuboid:
      return {{"kind", "cuboid"}, {"sides", {g.cuboid.s1, g.cuboid.s2, g.cuboid.s3}}};
    case Geometry::Kind::Xxy:
      return {{"kind", "xxy"}, {"sx", g.sx}, {"sy", g.sy}};
    case Geometry::Kind::Die:
      return {{"kind", "die"}, {"heights", g.die.heights}, {"scale", g.die.scale}};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Subcommands.

Report cmd_fit(const DatasetFlags& ds, const std::string& norm_flag, const FitFlags& ff) {
  const ExperimentRecord r = resolve_one(ds);
  const EnergyNormalization norm = normalization_for(r, norm_flag);
  const FitResult f = fit_record(r, norm, ff.options());

  Report rep;
  rep.input_digest = digest(serialize_experiment(r));
  rep.results["dataset"] = r.name;
  rep.results["kind"] = dataset_kind(r);
  rep.results["normalization"] = describe(norm);
  rep.results["fit"] = fit_json(f);
  Table head = fit_table(f);
  head.rows.insert(head.rows.begin(), {Cell::str("normalization"), Cell::str(describe(norm))});
  head.rows.insert(head.rows.begin(), {Cell::str("dataset"), Cell::str(r.name)});
  rep.tables.push_back(std::move(head));
  add_comparison(rep, r, norm, f.beta_hat);
  return rep;
}

Report cmd_predict(const GeometryFlags& gf, std::optional<double> beta, const std::string& model,
                   const std::string& norm_flag) {
  const Geometry g = parse_geometry(gf);
  Report rep;
  rep.results["model"] = model;
  rep.results["geometry"] = geometry_json(g);

  std::vector<double> p;
  std::vector<std::string> labels;
  if (model == "simpson") {
    if (g.kind != Geometry::Kind::Cuboid) throw UsageError("--model simpson needs --cuboid");
    if (beta) throw UsageError("--model simpson takes no --beta");
    const ProbabilityVector pv = simpson_probabilities(g.cuboid);
    p.assign(pv.values().begin(), pv.values().end());
    const auto omega = face_solid_angles(g.cuboid);
    rep.results["solid_angles"] = omega;
    rep.input_digest = digest(g.canonical + ";simpson");
  } else if (model == "gibbs") {
    if (!beta) throw UsageError("--model gibbs needs --beta");
    const EnergyNormalization norm = geometry_normalization(g, norm_flag);
    rep.results["beta"] = *beta;
    rep.results["normalization"] = describe(norm);
    if (g.kind == Geometry::Kind::Xxy) {
      const double pxx = xxy_pxx(g.sx, g.sy, *beta, norm);
      p = {pxx, 1.0 - pxx};
      labels = {"xx", "xy"};
    } else {
      const EnergyVector e = g.kind == Geometry::Kind::Cuboid ? cuboid_energies(g.cuboid, norm)
                                                              : general_energies(g.die);
      const ProbabilityVector pv = gibbs_probabilities(e, *beta);
      p.assign(pv.values().begin(), pv.values().end());
      rep.results["energies"] = std::vector<double>(e.values().begin(), e.values().end());
    }
    rep.input_digest =
        digest(g.canonical + ";gibbs;beta:" + format_number(*beta) + ";" + describe(norm));
  } else {
    throw UsageError("unknown model '" + model + "' (expected gibbs or simpson)");
  }

  rep.results["probabilities"] = p;
  Table t{"prediction", {"state", "p[%]"}, {}};
  for (std::size_t i = 0; i < p.size(); ++i) {
    t.rows.push_back({labels.empty() ? Cell::count(static_cast<std::int64_t>(i + 1))
                                     : Cell::str(labels[i]),
                      Cell::percent(p[i])});
  }
  rep.tables.push_back(std::move(t));
  return rep;
}

std::string verdict_name(Verdict v) { return v == Verdict::Consistent ? "consistent" : "rejected"; }

Report cmd_gof(const DatasetFlags& ds, std::optional<double> beta, bool fit,
               const std::string& norm_flag, const FitFlags& ff) {
  if (beta.has_value() == fit) throw UsageError("give exactly one of --beta or --fit");
  const ExperimentRecord r = resolve_one(ds);
  const EnergyNormalization norm = normalization_for(r, norm_flag);

  Report rep;
  rep.input_digest = digest(serialize_experiment(r));
  rep.results["dataset"] = r.name;
  rep.results["normalization"] = describe(norm);
  double b = beta.value_or(0.0);
  if (fit) {
    const FitResult f = fit_record(r, norm, ff.options());
    b = f.beta_hat;
    rep.results["fit"] = fit_json(f);
  }
  require_valid_beta(b);

  GofResult g;
  if (const auto* fam = std::get_if<XxyFamily>(&r.data)) {
    g = chi_square_xxy(fam->rows, b, norm);
  } else {
    const StateModel m = state_model(r, norm);
    g = chi_square_full(m.counts, gibbs_probabilities(m.energies, b));
  }
  rep.results["beta"] = b;
  rep.results["beta_source"] = fit ? "fit" : "given";
  rep.results["chi2"] = g.chi2;
  rep.results["m"] = g.m;
  rep.results["chi2_per_m"] = g.chi2_per_m;
  rep.results["verdict"] = verdict_name(g.verdict);
  rep.tables.push_back({"goodness of fit",
                        {"quantity", "value"},
                        {{Cell::str("dataset"), Cell::str(r.name)},
                         {Cell::str("beta"), Cell::num(b)},
                         {Cell::str("chi2"), Cell::num(g.chi2)},
                         {Cell::str("m"), Cell::count(static_cast<std::int64_t>(g.m))},
                         {Cell::str("chi2/m"), Cell::num(g.chi2_per_m)},
                         {Cell::str("verdict"), Cell::str(verdict_name(g.verdict))}}});
  add_comparison(rep, r, norm, b);
  return rep;
}

struct BootstrapFlags {
  std::optional<double> epsilon;
  std::size_t iterations = 999;
  std::uint64_t seed = 1;
  std::optional<double> beta;
  std::size_t lanes = 0;
  std::string refit = "nominal";
};

Report cmd_bootstrap(const DatasetFlags& ds, const BootstrapFlags& bf,
                     const std::string& norm_flag, const FitFlags& ff) {
  if (!bf.epsilon) throw UsageError("--epsilon is required");
  const ExperimentRecord r = resolve_one(ds);
  const auto* fam = std::get_if<XxyFamily>(&r.data);
  if (!fam) throw UsageError("the bootstrap runs on xxy-cuboid families only");
  const EnergyNormalization norm = normalization_for(r, norm_flag);

  BootstrapConfig cfg;
  cfg.iterations = bf.iterations;
  cfg.epsilon = *bf.epsilon;
  cfg.master_seed = bf.seed;
  cfg.lanes = bf.lanes;
  cfg.norm = norm;
  cfg.fit = ff.options();
  if (bf.refit == "nominal") {
    cfg.refit_lengths = RefitLengths::Nominal;
  } else if (bf.refit == "perturbed") {
    cfg.refit_lengths = RefitLengths::Perturbed;
  } else {
    throw UsageError("--refit-lengths expects nominal or perturbed");
  }
  cfg.beta0 = bf.beta ? *bf.beta : fit_beta_global(fam->rows, cfg.fit, norm).beta_hat;

  const BootstrapResult res = bootstrap_constant_beta(fam->rows, cfg);

  std::vector<double> sorted = res.chi2_simulated;
  std::sort(sorted.begin(), sorted.end());
  double mean = 0.0;
  for (double c : sorted) mean += c;
  mean /= static_cast<double>(sorted.size());
  const double median = sorted[sorted.size() / 2];

  Report rep;
  rep.input_digest = digest(serialize_experiment(r));
  rep.results["dataset"] = r.name;
  rep.results["normalization"] = describe(norm);
  rep.results["config"] = {{"iterations", cfg.iterations},
                           {"epsilon", cfg.epsilon},
                           {"seed", cfg.master_seed},
                           {"beta0", cfg.beta0},
                           {"refit_lengths", bf.refit}};
  rep.results["chi2_observed"] = res.chi2_observed;
  rep.results["p_value"] = res.p_value;
  rep.results["chi2_simulated"] = res.chi2_simulated;
  rep.tables.push_back({"bootstrap",
                        {"quantity", "value"},
                        {{Cell::str("dataset"), Cell::str(r.name)},
                         {Cell::str("beta0"), Cell::num(cfg.beta0)},
                         {Cell::str("epsilon"), Cell::num(cfg.epsilon)},
                         {Cell::str("iterations"),
                          Cell::count(static_cast<std::int64_t>(cfg.iterations))},
                         {Cell::str("seed"), Cell::str(std::to_string(cfg.master_seed))},
                         {Cell::str("chi2_observed"), Cell::num(res.chi2_observed)},
                         {Cell::str("chi2_simulated_mean"), Cell::num(mean)},
                         {Cell::str("chi2_simulated_median"), Cell::num(median)},
                         {Cell::str("p_value"), Cell::num(res.p_value)}}});
  return rep;
}

Report cmd_simulate(const GeometryFlags& gf, std::optional<double> beta, std::int64_t tosses,
                    std::uint64_t seed, const std::string& norm_flag, const std::string& out_path) {
  if (!beta) throw UsageError("--beta is required");
  if (tosses < 0) throw UsageError("--tosses must be non-negative");
  const Geometry g = parse_geometry(gf);
  const EnergyNormalization norm = geometry_normalization(g, norm_flag);
  RandomStream stream(seed, 0);
  const auto n = static_cast<std::uint64_t>(tosses);

  std::vector<std::uint64_t> counts;
  if (g.kind == Geometry::Kind::Xxy) {
    const std::uint64_t nxx = simulate_tosses(xxy_pxx(g.sx, g.sy, *beta, norm), n, stream);
    counts = {nxx, n - nxx};
  } else {
    const EnergyVector e = g.kind == Geometry::Kind::Cuboid ? cuboid_energies(g.cuboid, norm)
                                                            : general_energies(g.die);
    counts = simulate_tosses(gibbs_probabilities(e, *beta), n, stream);
  }

  if (!out_path.empty()) {
    if (n == 0) throw UsageError("--out needs at least one toss (a dataset cannot be empty)");
    ExperimentRecord record;
    record.name = "simulated";
    record.source = "gibbsdice simulate beta=" + format_number(*beta) + " seed=" +
                    std::to_string(seed) + " norm=" + describe(norm);
    switch (g.kind) {
      case Geometry::Kind::Xxy:
        record.data = XxyFamily{{{g.sx, g.sy, n, counts[0]}}};
        break;
      case Geometry::Kind::Cuboid:
        record.data = CuboidExperiment{g.cuboid, TossCounts(counts)};
        break;
      case Geometry::Kind::Die:
        record.data = GeneralDieExperiment{g.die, TossCounts(counts)};
        break;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + out_path + "'");
    f << serialize_experiment(record);
  }

  Report rep;
  rep.input_digest = digest(g.canonical + ";beta:" + format_number(*beta) + ";" + describe(norm) +
                            ";N:" + std::to_string(n) + ";seed:" + std::to_string(seed));
  rep.results["geometry"] = geometry_json(g);
  rep.results["beta"] = *beta;
  rep.results["normalization"] = describe(norm);
  rep.results["tosses"] = n;
  rep.results["seed"] = seed;
  rep.results["counts"] = counts;
  Table t{"simulated counts", {"state", "n"}, {}};
  for (std::size_t i = 0; i < counts.size(); ++i) {
    t.rows.push_back({g.kind == Geometry::Kind::Xxy ? Cell::str(i == 0 ? "xx" : "xy")
                                                    : Cell::count(static_cast<std::int64_t>(i + 1)),
                      Cell::count(static_cast<std::int64_t>(counts[i]))});
  }
  rep.tables.push_back(std::move(t));
  return rep;
}

Report cmd_plot(const DatasetFlags& ds, std::optional<double> beta, bool fit,
                const std::string& out_path, double epsilon, const std::string& vertical,
                const std::string& norm_flag, const FitFlags& ff) {
  if (out_path.empty()) throw UsageError("--out <path> is required");
  if (beta.has_value() && fit) throw UsageError("give at most one of --beta or --fit");
  if (ds.builtin.empty() && ds.file.empty()) {
    throw UsageError("plot needs at least one dataset (--builtin or --file)");
  }
  const std::vector<ExperimentRecord> records = resolve_all(ds);

  PlotOptions opts;
  opts.epsilon = epsilon;
  if (vertical == "caption") {
    opts.vertical = VerticalError::Caption;
  } else if (vertical == "binomial") {
    opts.vertical = VerticalError::Binomial;
  } else {
    throw UsageError("--vertical-error expects caption or binomial");
  }

  std::vector<PlotSeries> series;
  std::string digest_input;
  json series_json = json::array();
  for (const auto& r : records) {
    const auto* fam = std::get_if<XxyFamily>(&r.data);
    if (!fam) throw UsageError("plot needs xxy-cuboid datasets; '" + r.name + "' is not one");
    const EnergyNormalization norm = normalization_for(r, norm_flag);
    opts.norm = norm;
    const double b = beta ? *beta : fit_beta_global(fam->rows, ff.options(), norm).beta_hat;
    series.push_back({r.name, fam->rows, b});
    digest_input += serialize_experiment(r);
    series_json.push_back({{"dataset", r.name}, {"beta", b}, {"markers", fam->rows.size()}});
  }

  const std::string svg = render_fxx_plot(series, opts);
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + out_path + "'");
  f << svg;

  Report rep;
  rep.input_digest = digest(digest_input);
  rep.results["out"] = out_path;
  rep.results["series"] = series_json;
  rep.results["curve_points"] = opts.curve_points;
  rep.results["epsilon"] = epsilon;
  rep.results["vertical_error"] = vertical;
  Table t{"plot " + out_path, {"dataset", "beta", "markers"}, {}};
  for (const auto& s : series) {
    t.rows.push_back({Cell::str(s.label), Cell::num(s.beta),
                      Cell::count(static_cast<std::int64_t>(s.rows.size()))});
  }
  rep.tables.push_back(std::move(t));
  return rep;
}

void add_dataset_flags(CLI::App* cmd, DatasetFlags& ds) {
  cmd->add_option("--builtin", ds.builtin, "Bundled dataset name")
      ->check(CLI::IsMember(builtin_names()));
  cmd->add_option("--file", ds.file, "Dataset file path");
}

void add_geometry_flags(CLI::App* cmd, GeometryFlags& g) {
  cmd->add_option("--cuboid", g.cuboid, "Homogeneous cuboid side-lengths AxBxC");
  cmd->add_option("--xxy", g.xxy, "xxy-cuboid side-lengths SXxSY");
  cmd->add_option("--heights", g.heights, "Comma-separated center-of-gravity heights");
  cmd->add_option("--scale", g.scale, "Normalization length for --heights");
}

void add_fit_flags(CLI::App* cmd, FitFlags& ff) {
  cmd->add_option("--lo", ff.lo, "Lower edge of the beta search bracket")->capture_default_str();
  cmd->add_option("--hi", ff.hi, "Upper edge of the beta search bracket")->capture_default_str();
  cmd->add_option("--tol", ff.tol, "Bracket width at which the search stops")
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gibbs-model face probabilities for cuboidal dice", "gibbsdice"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_flag;
  if (const char* env = std::getenv(kFormatEnv)) format_flag = env;
  if (format_flag.empty()) format_flag = "table";
  app.add_option("--format", format_flag, "Output format: table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  std::string norm_flag = "auto";
  DatasetFlags ds;
  GeometryFlags geo;
  FitFlags ff;
  std::optional<double> beta;
  bool fit = false;

  auto* fit_cmd = app.add_subcommand("fit", "Maximum-likelihood estimate of beta");
  add_dataset_flags(fit_cmd, ds);
  add_fit_flags(fit_cmd, ff);
  fit_cmd->add_option("--norm", norm_flag, "auto, half-diagonal or geometric-mean");

  std::string model = "gibbs";
  auto* predict_cmd = app.add_subcommand("predict", "Face probabilities for a geometry");
  add_geometry_flags(predict_cmd, geo);
  predict_cmd->add_option("--beta", beta, "Inverse temperature");
  predict_cmd->add_option("--model", model, "gibbs or simpson")->capture_default_str();
  predict_cmd->add_option("--norm", norm_flag, "auto, half-diagonal or geometric-mean");

  auto* gof_cmd = app.add_subcommand("gof", "Pearson chi-square goodness of fit");
  add_dataset_flags(gof_cmd, ds);
  add_fit_flags(gof_cmd, ff);
  gof_cmd->add_option("--beta", beta, "Evaluate at this beta");
  gof_cmd->add_flag("--fit", fit, "Evaluate at the maximum-likelihood beta");
  gof_cmd->add_option("--norm", norm_flag, "auto, half-diagonal or geometric-mean");

  BootstrapFlags bf;
  auto* boot_cmd =
      app.add_subcommand("bootstrap", "Parametric bootstrap of the constant-beta hypothesis");
  add_dataset_flags(boot_cmd, ds);
  add_fit_flags(boot_cmd, ff);
  boot_cmd->add_option("--epsilon", bf.epsilon, "Relative side-length standard deviation");
  boot_cmd->add_option("--iterations", bf.iterations, "Bootstrap iterations")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  boot_cmd->add_option("--seed", bf.seed, "Master seed")->capture_default_str();
  boot_cmd->add_option("--beta", bf.beta, "beta under test (default: fitted)");
  boot_cmd->add_option("--lanes", bf.lanes, "Worker threads (0 = all cores)")
      ->capture_default_str();
  boot_cmd->add_option("--refit-lengths", bf.refit, "nominal or perturbed")
      ->capture_default_str();
  boot_cmd->add_option("--norm", norm_flag, "auto, half-diagonal or geometric-mean");

  std::int64_t tosses = 0;
  std::uint64_t seed = 1;
  std::string out_path;
  auto* sim_cmd = app.add_subcommand("simulate", "Simulate toss counts from the Gibbs model");
  add_geometry_flags(sim_cmd, geo);
  sim_cmd->add_option("--beta", beta, "Inverse temperature");
  sim_cmd->add_option("--tosses", tosses, "Number of tosses")->required();
  sim_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  sim_cmd->add_option("--out", out_path, "Also write the counts as a dataset file");
  sim_cmd->add_option("--norm", norm_flag, "auto, half-diagonal or geometric-mean");

  double plot_epsilon = 0.05;
  std::string vertical = "caption";
  auto* plot_cmd = app.add_subcommand("plot", "SVG plot of f_xx and fitted p_xx against s_y/s_x");
  add_dataset_flags(plot_cmd, ds);
  add_fit_flags(plot_cmd, ff);
  plot_cmd->add_option("--beta", beta, "Use this beta for every curve");
  plot_cmd->add_flag("--fit", fit, "Fit beta per dataset (the default)");
  plot_cmd->add_option("--out", out_path, "Output SVG path");
  plot_cmd->add_option("--epsilon", plot_epsilon, "Relative side-length error for x bars")
      ->capture_default_str();
  plot_cmd->add_option("--vertical-error", vertical, "caption or binomial")
      ->capture_default_str();
  plot_cmd->add_option("--norm", norm_flag, "auto or geometric-mean / half-diagonal");

  bool list = false;
  auto* data_cmd = app.add_subcommand("dataset", "Print a bundled dataset in file format");
  add_dataset_flags(data_cmd, ds);
  data_cmd->add_flag("--list", list, "List bundled dataset names");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (data_cmd->parsed()) {
      if (list) {
        for (const auto& n : builtin_names()) out << n << '\n';
      } else {
        out << serialize_experiment(resolve_one(ds));
      }
      return kExitOk;
    }

    Report rep;
    if (fit_cmd->parsed()) {
      rep = cmd_fit(ds, norm_flag, ff);
    } else if (predict_cmd->parsed()) {
      rep = cmd_predict(geo, beta, model, norm_flag);
    } else if (gof_cmd->parsed()) {
      rep = cmd_gof(ds, beta, fit, norm_flag, ff);
    } else if (boot_cmd->parsed()) {
      rep = cmd_bootstrap(ds, bf, norm_flag, ff);
    } else if (sim_cmd->parsed()) {
      rep = cmd_simulate(geo, beta, tosses, seed, norm_flag, out_path);
    } else if (plot_cmd->parsed()) {
      rep = cmd_plot(ds, beta, fit, out_path, plot_epsilon, vertical, norm_flag, ff);
    }
    rep.command = app.get_subcommands().front()->get_name();
    rep.arguments = args;
    render(rep, parse_format(format_flag), out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const gibbsdice::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace gibbsdice::cli
