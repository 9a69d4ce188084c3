#include "spnet/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "spnet/analytics.hpp"
#include "spnet/hammersley.hpp"
#include "spnet/io.hpp"
#include "spnet/parallel.hpp"
#include "spnet/rng.hpp"

namespace spnet {

namespace fs = std::filesystem;
using nlohmann::json;

bool FamilySpec::has_param() const {
  return label == "beta" || label == "gp" || label == "geometric" || label == "knn";
}

std::string FamilySpec::name() const { return has_param() ? label + "-" + format_double(param) : label; }

FamilySpec parse_family(const std::string& text) {
  if (text == "gabriel") return {"beta", 1.0};
  if (text == "rng" || text == "relative-neighborhood") return {"beta", 2.0};
  const auto colon = text.find_first_of(":=");
  const std::string label = text.substr(0, colon);
  FamilySpec f{label, 0.0};
  if (f.has_param()) {
    if (colon == std::string::npos) throw std::invalid_argument("family '" + label + "' needs a parameter, e.g. " + label + ":1");
    f.param = parse_double(text.substr(colon + 1));
  } else if (label != "mst" && label != "delaunay" && label != "hammersley") {
    throw std::invalid_argument("unknown family: " + text);
  }
  return f;
}

Network build_family(const FamilySpec& family, const ConfigPtr& config, std::uint64_t seed, unsigned workers) {
  const std::string& l = family.label;
  if (l == "mst") return build_mst(config);
  if (l == "delaunay") return build_delaunay(config);
  if (l == "hammersley") return build_hammersley(config, seed);
  if (l == "beta") return build_proximity(config, beta_template(family.param));
  if (l == "gp") return build_gp(config, family.param, workers);
  if (l == "geometric") return build_geometric(config, family.param);
  if (l == "knn") return build_k_neighbor(config, static_cast<std::size_t>(family.param));
  throw std::invalid_argument("unknown family: " + l);
}

ProfileParams profile_for(const FamilySpec& family, ProfileParams base) {
  if (family.label == "hammersley") {
    base.inner_margin = std::max(base.inner_margin, 0.2);
    base.planarize = true;
  }
  return base;
}

std::uint64_t points_seed(std::uint64_t master, std::size_t rep) { return derive_seed(master, rep, "points"); }

std::uint64_t network_seed(std::uint64_t master, std::size_t rep, const FamilySpec& family) {
  return derive_seed(master, rep, "network:" + family.name());
}

namespace {

RunRecord measure(const FamilySpec& family, const ConfigPtr& cfg, std::size_t rep, std::uint64_t master,
                  const ProfileParams& params) {
  const auto t0 = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.family = family;
  rec.n = cfg->size();
  rec.rep = rep;
  rec.seed = network_seed(master, rep, family);
  rec.config_hash = config_hash(*cfg);
  const Network net = build_family(family, cfg, rec.seed);
  const ProfileParams p = profile_for(family, params);
  const RouteStats stats = route_stats(net, p);
  NetSummary& s = rec.summary;
  s.length = normalized_length(net, 0.0);
  s.length_inner = normalized_length(net, p.inner_margin);
  s.avg_degree = avg_degree(net, p.inner_margin);
  s.r_max = stats.r_max;
  s.r_ave = stats.r_ave;
  s.unreachable_fraction = stats.unreachable_fraction;
  s.pair_count = stats.pair_count;
  s.r_tilde = stats.unreachable_fraction > 0 ? std::numeric_limits<double>::infinity() : stats.profile.r_tilde();
  s.unbounded_suspected = stats.profile.unbounded_suspected();
  rec.profile = stats.profile;
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

FamilyResult aggregate(const FamilySpec& family, std::vector<RunRecord> records) {
  FamilyResult fr;
  fr.family = family;
  std::vector<double> l, d, rt, rm, ra;
  std::vector<RhoProfile> profiles;
  for (const auto& r : records) {
    l.push_back(r.summary.length_inner);
    d.push_back(r.summary.avg_degree);
    rt.push_back(r.summary.r_tilde);
    rm.push_back(r.summary.r_max);
    ra.push_back(r.summary.r_ave);
    profiles.push_back(r.profile);
  }
  fr.length = mean_se(l);
  fr.degree = mean_se(d);
  fr.r_tilde = mean_se(rt);
  fr.r_max = mean_se(rm);
  fr.r_ave = mean_se(ra);
  fr.profile = average_profiles(profiles);
  fr.unbounded_suspected = fr.profile.unbounded_suspected();
  fr.records = std::move(records);
  return fr;
}

std::string csv_field(double v) { return format_double(v); }

}  // namespace

RunRecord run_replicate(const FamilySpec& family, std::size_t n, std::size_t rep, std::uint64_t master_seed,
                        const ProfileParams& params) {
  const ConfigPtr cfg = share(sample_finite_model(n, points_seed(master_seed, rep)));
  return measure(family, cfg, rep, master_seed, params);
}

MeanSe mean_se(const std::vector<double>& xs) {
  MeanSe out;
  if (xs.empty()) return out;
  double sum = 0;
  for (double x : xs) sum += x;
  out.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.se = std::sqrt(ss / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()));
  }
  return out;
}

RhoProfile average_profiles(const std::vector<RhoProfile>& profiles) {
  if (profiles.empty()) return {};
  RhoProfile out = profiles.front();
  for (std::size_t k = 0; k < out.bins.size(); ++k) {
    RhoBin& b = out.bins[k];
    b.count = 0;
    b.max_ratio = 0;
    double sum = 0;
    bool all = true;
    for (const auto& p : profiles) {
      if (k >= p.bins.size()) {
        all = false;
        continue;
      }
      b.count += p.bins[k].count;
      b.max_ratio = std::max(b.max_ratio, p.bins[k].max_ratio);
      if (p.bins[k].mean_ratio) {
        sum += *p.bins[k].mean_ratio;
      } else {
        all = false;
      }
    }
    b.mean_ratio = all ? std::optional<double>(sum / static_cast<double>(profiles.size())) : std::nullopt;
  }
  return out;
}

std::vector<FamilyResult> run_families(const std::vector<FamilySpec>& families, std::size_t n, std::size_t reps,
                                       std::uint64_t master_seed, const ProfileParams& params, unsigned workers) {
  if (reps < 1) throw std::invalid_argument("replicates must be >= 1");
  std::vector<std::vector<RunRecord>> per_rep(reps);
  parallel_for(reps, workers, [&](std::size_t rep) {
    const ConfigPtr cfg = share(sample_finite_model(n, points_seed(master_seed, rep)));
    for (const auto& f : families) per_rep[rep].push_back(measure(f, cfg, rep, master_seed, params));
  });
  std::vector<FamilyResult> out;
  for (std::size_t f = 0; f < families.size(); ++f) {
    std::vector<RunRecord> recs;
    for (auto& rr : per_rep) recs.push_back(std::move(rr[f]));
    out.push_back(aggregate(families[f], std::move(recs)));
  }
  return out;
}

std::vector<FamilyResult> run_table1(std::size_t n, std::size_t reps, std::uint64_t master_seed,
                                     const ProfileParams& params, unsigned workers) {
  if (n < 100) throw std::invalid_argument("table1: n must be >= 100");
  return run_families(default_table1(n, reps, master_seed).families, n, reps, master_seed, params, workers);
}

std::vector<FamilyResult> run_fig6_curves(const std::vector<FamilySpec>& families, std::size_t n, std::size_t reps,
                                          const ProfileParams& params, std::uint64_t master_seed, unsigned workers) {
  return run_families(families, n, reps, master_seed, params, workers);
}

Fig7Result run_fig7_sweep(const std::vector<double>& beta_grid, std::size_t n, std::size_t reps,
                          std::uint64_t master_seed, const ProfileParams& params, unsigned workers, std::size_t gp_n) {
  std::vector<double> betas = beta_grid;
  std::sort(betas.begin(), betas.end());
  std::vector<FamilySpec> families;
  for (double b : betas) families.push_back({"beta", b});
  families.push_back({"delaunay", 0});
  families.push_back({"hammersley", 0});
  Fig7Result res;
  res.families = run_families(families, n, reps, master_seed, params, workers);
  auto gp = run_families({{"gp", 2.0}}, std::min(n, gp_n), reps, master_seed, params, workers);
  res.families.push_back(std::move(gp.front()));

  for (const auto& fr : res.families) {
    CurvePoint cp;
    cp.family = fr.family;
    cp.length_mc = fr.length.mean;
    cp.r_tilde = fr.r_tilde.mean;
    cp.r_tilde_se = fr.r_tilde.se;
    if (fr.family.label == "beta") {
      cp.label = fr.family.param == 1.0 ? "G" : fr.family.param == 2.0 ? "RN" : fr.family.name();
      cp.length = lemma1(template_area(fr.family.param)).length;
      cp.analytic_length = true;
    } else {
      cp.label = fr.family.label == "gp" ? "G_2" : fr.family.label;
      cp.length = fr.length.mean;
    }
    res.points.push_back(cp);
  }
  return res;
}

double beta_curve_r_at(const std::vector<CurvePoint>& points, double length) {
  std::vector<std::pair<double, double>> curve;
  for (const auto& p : points) {
    if (p.family.label == "beta") curve.emplace_back(p.length, p.r_tilde);
  }
  if (curve.empty()) throw std::invalid_argument("no beta points on the curve");
  std::sort(curve.begin(), curve.end());
  if (length <= curve.front().first) return curve.front().second;
  if (length >= curve.back().first) return curve.back().second;
  for (std::size_t k = 1; k < curve.size(); ++k) {
    if (length <= curve[k].first) {
      const auto [l0, r0] = curve[k - 1];
      const auto [l1, r1] = curve[k];
      return r0 + (r1 - r0) * (length - l0) / (l1 - l0);
    }
  }
  return curve.back().second;
}

std::vector<ConvergenceRow> run_convergence(const FamilySpec& family, const std::vector<std::size_t>& n_grid,
                                            std::size_t reps, std::uint64_t master_seed, unsigned workers) {
  std::vector<ConvergenceRow> rows;
  for (std::size_t n : n_grid) {
    std::vector<double> l(reps), d(reps);
    parallel_for(reps, workers, [&](std::size_t rep) {
      const ConfigPtr cfg = share(sample_finite_model(n, points_seed(master_seed, rep)));
      const Network net = build_family(family, cfg, network_seed(master_seed, rep, family));
      l[rep] = normalized_length(net, 0.0);
      d[rep] = avg_degree(net, 0.0);
    });
    rows.push_back({n, mean_se(l), mean_se(d)});
  }
  return rows;
}

std::vector<ParadoxRow> run_paradox_demo(std::size_t n, const std::vector<double>& intensities, std::size_t reps,
                                         std::uint64_t master_seed, const ProfileParams& params, unsigned workers) {
  if (intensities.empty()) return {};
  const double top = *std::max_element(intensities.begin(), intensities.end());
  const std::size_t k = intensities.size();
  std::vector<std::vector<ParadoxRow>> per_rep(reps, std::vector<ParadoxRow>(k));
  parallel_for(reps, workers, [&](std::size_t rep) {
    const ConfigPtr cfg = share(sample_finite_model(n, points_seed(master_seed, rep)));
    const Network base = build_mst(cfg);
    const auto lines = sample_line_process(cfg->window, top, derive_seed(master_seed, rep, "lines"));
    Rng thin(derive_seed(master_seed, rep, "lines-thinning"));
    std::vector<double> marks(lines.size());
    for (auto& m : marks) m = thin.uniform();
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Line> kept;
      for (std::size_t j = 0; j < lines.size(); ++j) {
        if (top > 0 && marks[j] * top < intensities[i]) kept.push_back(lines[j]);
      }
      const Network net = overlay_lines(base, kept);
      const RouteStats stats = route_stats(net, params);
      per_rep[rep][i] = {intensities[i], (net.total_length() - base.total_length()) / cfg->window.area(), stats.r_ave,
                         stats.profile.value_at(1.0)};
    }
  });
  std::vector<ParadoxRow> rows(k);
  for (std::size_t i = 0; i < k; ++i) {
    rows[i].intensity = intensities[i];
    for (const auto& pr : per_rep) {
      rows[i].added_length_per_area += pr[i].added_length_per_area / static_cast<double>(reps);
      rows[i].r_ave += pr[i].r_ave / static_cast<double>(reps);
      rows[i].rho_at_1 += pr[i].rho_at_1 / static_cast<double>(reps);
    }
  }
  return rows;
}

json ExperimentConfig::to_json() const {
  json j;
  j["schema"] = kSchemaVersion;
  j["codeVersion"] = kCodeVersion;
  j["experiment"] = experiment;
  j["families"] = json::array();
  for (const auto& f : families) j["families"].push_back(f.has_param() ? f.label + ":" + format_double(f.param) : f.label);
  j["n"] = n;
  j["replicates"] = replicates;
  j["masterSeed"] = master_seed;
  j["profile"] = {{"binWidth", profile.bin_width},
                  {"dMax", profile.d_max},
                  {"innerMargin", profile.inner_margin},
                  {"minCount", profile.min_count},
                  {"planarize", profile.planarize}};
  j["betaGrid"] = beta_grid;
  j["nGrid"] = n_grid;
  j["intensities"] = intensities;
  j["gpN"] = gp_n;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  if (j.value("schema", 0) != kSchemaVersion) throw std::invalid_argument("manifest: unsupported schema");
  ExperimentConfig c;
  c.experiment = j.at("experiment").get<std::string>();
  for (const auto& f : j.value("families", json::array())) c.families.push_back(parse_family(f.get<std::string>()));
  c.n = j.at("n").get<std::size_t>();
  c.replicates = j.at("replicates").get<std::size_t>();
  c.master_seed = j.at("masterSeed").get<std::uint64_t>();
  if (j.contains("profile")) {
    const auto& p = j["profile"];
    c.profile.bin_width = p.value("binWidth", c.profile.bin_width);
    c.profile.d_max = p.value("dMax", c.profile.d_max);
    c.profile.inner_margin = p.value("innerMargin", c.profile.inner_margin);
    c.profile.min_count = p.value("minCount", c.profile.min_count);
    c.profile.planarize = p.value("planarize", c.profile.planarize);
  }
  c.beta_grid = j.value("betaGrid", std::vector<double>{});
  c.n_grid = j.value("nGrid", std::vector<std::size_t>{});
  c.intensities = j.value("intensities", std::vector<double>{});
  c.gp_n = j.value("gpN", c.gp_n);
  if (c.replicates < 1) throw std::invalid_argument("manifest: replicates must be >= 1");
  return c;
}

ExperimentConfig default_table1(std::size_t n, std::size_t reps, std::uint64_t seed) {
  ExperimentConfig c;
  c.experiment = "table1";
  c.families = {{"mst", 0}, {"beta", 2.0}, {"beta", 1.0}, {"hammersley", 0}, {"delaunay", 0}};
  c.n = n;
  c.replicates = reps;
  c.master_seed = seed;
  return c;
}

ExperimentConfig default_fig6(std::size_t n, std::size_t reps, std::uint64_t seed) {
  ExperimentConfig c = default_table1(n, reps, seed);
  c.experiment = "fig6";
  c.families = {{"beta", 2.0}, {"beta", 1.0}, {"delaunay", 0}, {"hammersley", 0}};
  return c;
}

ExperimentConfig default_fig7(std::size_t n, std::size_t reps, std::uint64_t seed) {
  ExperimentConfig c = default_table1(n, reps, seed);
  c.experiment = "fig7";
  c.families.clear();
  c.beta_grid = kDefaultBetaGrid;
  return c;
}

ExperimentConfig default_convergence(const FamilySpec& family, std::vector<std::size_t> n_grid, std::size_t reps,
                                     std::uint64_t seed) {
  ExperimentConfig c = default_table1(n_grid.empty() ? 2500 : n_grid.back(), reps, seed);
  c.experiment = "converge";
  c.families = {family};
  c.n_grid = std::move(n_grid);
  return c;
}

ExperimentConfig default_paradox(std::size_t n, std::size_t reps, std::uint64_t seed) {
  ExperimentConfig c = default_table1(n, reps, seed);
  c.experiment = "paradox";
  c.families = {{"mst", 0}};
  c.intensities = {0.0, 0.05, 0.1, 0.2, 0.4};
  return c;
}

std::string summary_csv(const std::vector<const RunRecord*>& records) {
  std::ostringstream os;
  os << "family,param,n,rep,L,degree,rtilde,rmax,rave,unreachable\n";
  for (const RunRecord* r : records) {
    os << r->family.label << ',' << (r->family.has_param() ? csv_field(r->family.param) : "") << ',' << r->n << ','
       << r->rep << ',' << csv_field(r->summary.length_inner) << ',' << csv_field(r->summary.avg_degree) << ','
       << csv_field(r->summary.r_tilde) << ',' << csv_field(r->summary.r_max) << ',' << csv_field(r->summary.r_ave)
       << ',' << csv_field(r->summary.unreachable_fraction) << '\n';
  }
  return os.str();
}

namespace {

void write_family_outputs(const std::vector<FamilyResult>& results, const fs::path& dir) {
  std::vector<const RunRecord*> recs;
  for (const auto& fr : results) {
    for (const auto& r : fr.records) recs.push_back(&r);
  }
  auto text = summary_csv(recs);
  text.pop_back();
  write_text(dir / "summary.csv", text);
  for (const auto& fr : results) write_profile(fr.profile, dir / "rho" / (fr.family.name() + ".csv"));
}

std::string ms(const MeanSe& m) { return format_double(m.mean) + ',' + format_double(m.se); }

void write_table(const std::vector<FamilyResult>& results, const fs::path& path) {
  std::ostringstream os;
  os << "family,param,L,L_se,degree,degree_se,rtilde,rtilde_se,unbounded_suspected";
  for (const auto& fr : results) {
    os << '\n'
       << fr.family.label << ',' << (fr.family.has_param() ? format_double(fr.family.param) : "") << ','
       << ms(fr.length) << ',' << ms(fr.degree) << ',' << ms(fr.r_tilde) << ','
       << (fr.unbounded_suspected ? "true" : "false");
  }
  write_text(path, os.str());
}

}  // namespace

void run_experiment(const ExperimentConfig& c, const fs::path& out_dir, unsigned workers) {
  fs::create_directories(out_dir);
  write_text(out_dir / "manifest.json", c.to_json().dump(2));
  if (c.experiment == "table1") {
    std::vector<FamilyResult> res;
    if (c.n < 100) throw std::invalid_argument("table1: n must be >= 100");
    res = run_families(c.families, c.n, c.replicates, c.master_seed, c.profile, workers);
    write_family_outputs(res, out_dir);
    write_table(res, out_dir / "table1.csv");
  } else if (c.experiment == "fig6") {
    const auto res = run_fig6_curves(c.families, c.n, c.replicates, c.profile, c.master_seed, workers);
    write_family_outputs(res, out_dir);
  } else if (c.experiment == "fig7") {
    const auto res = run_fig7_sweep(c.beta_grid, c.n, c.replicates, c.master_seed, c.profile, workers, c.gp_n);
    write_family_outputs(res.families, out_dir);
    std::ostringstream os;
    os << "label,L,R";
    for (const auto& p : res.points) os << '\n' << p.label << ',' << format_double(p.length) << ',' << format_double(p.r_tilde);
    write_text(out_dir / "curve_fig7.csv", os.str());
  } else if (c.experiment == "converge") {
    if (c.families.size() != 1) throw std::invalid_argument("converge: exactly one family");
    const auto rows = run_convergence(c.families.front(), c.n_grid, c.replicates, c.master_seed, workers);
    std::ostringstream os;
    os << "family,n,L,L_se,degree,degree_se";
    for (const auto& r : rows) os << '\n' << c.families.front().name() << ',' << r.n << ',' << ms(r.length) << ',' << ms(r.degree);
    write_text(out_dir / "convergence.csv", os.str());
  } else if (c.experiment == "paradox") {
    const auto rows = run_paradox_demo(c.n, c.intensities, c.replicates, c.master_seed, c.profile, workers);
    std::ostringstream os;
    os << "intensity,added_length_per_area,rave,rho_1";
    for (const auto& r : rows) {
      os << '\n'
         << format_double(r.intensity) << ',' << format_double(r.added_length_per_area) << ','
         << format_double(r.r_ave) << ',' << format_double(r.rho_at_1);
    }
    write_text(out_dir / "paradox.csv", os.str());
  } else {
    throw std::invalid_argument("unknown experiment: " + c.experiment);
  }
}

}  // namespace spnet
