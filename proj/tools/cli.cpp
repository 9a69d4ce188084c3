#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "spnet/analytics.hpp"
#include "spnet/builders.hpp"
#include "spnet/experiments.hpp"
#include "spnet/hammersley.hpp"
#include "spnet/io.hpp"
#include "spnet/metrics.hpp"
#include "spnet/parallel.hpp"
#include "spnet/render.hpp"
#include "spnet/rng.hpp"

namespace spnet::cli {

namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProfileFlags {
  double bin_width = 0.25;
  double d_max = 10.0;
  double margin = 0.1;
  std::size_t min_count = 100;

  void add(CLI::App* app) {
    app->add_option("--bin-width", bin_width, "rho bin width")->check(CLI::PositiveNumber);
    app->add_option("--dmax", d_max, "largest distance binned")->check(CLI::PositiveNumber);
    app->add_option("--margin", margin, "inner window margin fraction")->check(CLI::Range(0.0, 0.49));
    app->add_option("--min-count", min_count, "pairs needed for a bin to qualify");
  }
  ProfileParams params() const {
    ProfileParams p;
    p.bin_width = bin_width;
    p.d_max = d_max;
    p.inner_margin = margin;
    p.min_count = min_count;
    return p;
  }
};

struct ExperimentFlags {
  std::size_t n = 2500;
  std::size_t reps = 10;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string config;
  ProfileFlags profile;
  CLI::Option* n_opt = nullptr;
  CLI::Option* reps_opt = nullptr;
  CLI::Option* seed_opt = nullptr;

  void add(CLI::App* app) {
    auto* cfg = app->add_option("--config", config, "run manifest (JSON)")->check(CLI::ExistingFile);
    n_opt = app->add_option("--n", n, "cities per configuration")->check(CLI::PositiveNumber);
    reps_opt = app->add_option("--reps", reps, "replicates")->check(CLI::PositiveNumber);
    seed_opt = app->add_option("--seed", seed, "master seed");
    app->add_option("--out", out, "run directory")->required();
    profile.add(app);
    cfg->excludes(n_opt)->excludes(reps_opt)->excludes(seed_opt);
  }

  // Either the manifest or the flags, with the seed mandatory for the latter.
  ExperimentConfig resolve(const ExperimentConfig& defaults) const {
    if (!config.empty()) return ExperimentConfig::from_json(nlohmann::json::parse(read_text(config)));
    if (!seed) throw UsageError("--seed is required");
    ExperimentConfig c = defaults;
    c.profile = profile.params();
    return c;
  }
};

std::vector<FamilySpec> parse_families(const std::vector<std::string>& names) {
  std::vector<FamilySpec> out;
  for (const auto& s : names) out.push_back(parse_family(s));
  return out;
}

void write_or_print(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text << '\n';
  } else {
    write_text(path, text);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spatial network route-length experiments", "spnet"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  unsigned workers = default_workers();
  app.add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

  // gen
  auto* gen = app.add_subcommand("gen", "sample a point configuration");
  std::size_t gen_n = 0;
  std::optional<std::uint64_t> gen_seed;
  std::string gen_out, gen_model = "finite";
  double gen_side = 0, gen_rate = 1;
  auto* gen_n_opt = gen->add_option("--n", gen_n, "number of cities (finite model)")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "seed")->required();
  gen->add_option("--out", gen_out, "points CSV")->required();
  gen->add_option("--model", gen_model, "finite | poisson")->check(CLI::IsMember({"finite", "poisson"}));
  auto* gen_side_opt = gen->add_option("--side", gen_side, "window side (poisson model)")->check(CLI::PositiveNumber);
  gen->add_option("--rate", gen_rate, "intensity (poisson model)")->check(CLI::PositiveNumber);

  // build
  auto* build = app.add_subcommand("build", "build a network on a point configuration");
  std::string b_family, b_in, b_out;
  std::optional<double> b_beta, b_p, b_c, b_lines;
  std::optional<std::size_t> b_k;
  std::optional<std::uint64_t> b_seed;
  bool b_planarize = false, b_stationary = false;
  build->add_option("--family", b_family, "mst | beta | gabriel | rng | delaunay | hammersley | gp | geometric | knn")
      ->required()
      ->check(CLI::IsMember({"mst", "beta", "gabriel", "rng", "delaunay", "hammersley", "gp", "geometric", "knn"}));
  build->add_option("--beta", b_beta, "beta in (0,2]");
  build->add_option("--p", b_p, "G_p exponent, > 1");
  build->add_option("--c", b_c, "geometric graph cost constant");
  build->add_option("--k", b_k, "neighbors per city");
  build->add_option("--lines", b_lines, "overlay a Poisson line process of this intensity")->check(CLI::NonNegativeNumber);
  build->add_option("--seed", b_seed, "seed for stochastic builders");
  build->add_flag("--planarize", b_planarize, "insert junctions at all crossings");
  build->add_flag("--stationary-boundary", b_stationary, "hammersley: Poisson frog exits at the downstream side");
  build->add_option("--in", b_in, "points CSV")->required()->check(CLI::ExistingFile);
  build->add_option("--out", b_out, "network directory")->required();

  // stats
  auto* stats = app.add_subcommand("stats", "route-length statistics of a network");
  std::string s_in, s_out, s_profile;
  ProfileFlags s_flags;
  bool s_planarize = false;
  stats->add_option("--in", s_in, "network directory")->required()->check(CLI::ExistingDirectory);
  stats->add_option("--out", s_out, "summary JSON (default stdout)");
  stats->add_option("--profile-out", s_profile, "rho profile CSV");
  stats->add_flag("--planarize", s_planarize, "route over the planarized network");
  s_flags.add(stats);

  // experiments
  ExperimentFlags t1, f6, f7, cv, px;
  auto* table1 = app.add_subcommand("table1", "statistics of the tractable networks");
  t1.add(table1);
  auto* fig6 = app.add_subcommand("fig6", "rho(d) curves");
  f6.add(fig6);
  std::vector<std::string> f6_families{"rng", "gabriel", "delaunay", "hammersley"};
  fig6->add_option("--families", f6_families, "families to profile")->delimiter(',');
  auto* fig7 = app.add_subcommand("fig7", "(L, R) trade-off sweep");
  f7.add(fig7);
  std::vector<double> f7_betas = kDefaultBetaGrid;
  std::size_t f7_gp_n = 1000;
  fig7->add_option("--betas", f7_betas, "beta grid")->delimiter(',')->check(CLI::Range(1e-9, 2.0));
  fig7->add_option("--gp-n", f7_gp_n, "city cap for the G_2 point")->check(CLI::PositiveNumber);
  auto* converge = app.add_subcommand("converge", "L_n and degree as n grows");
  cv.add(converge);
  std::string cv_family = "gabriel";
  std::vector<std::size_t> cv_grid{250, 1000, 2500, 10000};
  converge->add_option("--family", cv_family, "family");
  converge->add_option("--n-grid", cv_grid, "sizes")->delimiter(',');
  auto* paradox = app.add_subcommand("paradox", "MST plus Poisson lines: R_ave versus rho(1)");
  px.add(paradox);
  std::vector<double> px_int{0.0, 0.05, 0.1, 0.2, 0.4};
  paradox->add_option("--intensities", px_int, "increasing line intensities")->delimiter(',')->check(CLI::NonNegativeNumber);

  // render
  auto* render = app.add_subcommand("render", "draw a network as SVG");
  std::string r_in, r_out;
  RenderStyle style;
  render->add_option("--in", r_in, "network directory")->required()->check(CLI::ExistingDirectory);
  render->add_option("--out", r_out, "SVG file")->required();
  render->add_option("--width", style.width_px, "image width in pixels")->check(CLI::PositiveNumber);
  render->add_option("--city-radius", style.city_radius, "city dot radius")->check(CLI::NonNegativeNumber);
  render->add_option("--stroke", style.stroke_width, "edge stroke width")->check(CLI::PositiveNumber);

  // analytics-dump
  auto* dump = app.add_subcommand("analytics-dump", "named analytic constants as CSV");
  std::string d_out;
  dump->add_option("--out", d_out, "CSV file (default stdout)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name());
      return 0;
    }
    err << "spnet: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*gen) {
      PointConfig cfg;
      if (gen_model == "finite") {
        if (!*gen_n_opt || *gen_side_opt) throw UsageError("finite model takes --n and no --side");
        cfg = sample_finite_model(gen_n, *gen_seed);
      } else {
        if (!*gen_side_opt || *gen_n_opt) throw UsageError("poisson model takes --side (and --rate), not --n");
        cfg = sample_poisson(Window(gen_side), gen_rate, *gen_seed);
      }
      write_points(cfg, gen_out);
    } else if (*build) {
      std::string fam = b_family == "gabriel" || b_family == "rng" ? "beta" : b_family;
      if (b_family == "gabriel") b_beta = b_beta.value_or(1.0);
      if (b_family == "rng") b_beta = b_beta.value_or(2.0);
      if (b_beta && fam != "beta") throw UsageError("--beta applies to --family beta only");
      if (b_p && fam != "gp") throw UsageError("--p applies to --family gp only");
      if (b_c && fam != "geometric") throw UsageError("--c applies to --family geometric only");
      if (b_k && fam != "knn") throw UsageError("--k applies to --family knn only");
      if (b_stationary && fam != "hammersley") throw UsageError("--stationary-boundary applies to --family hammersley only");
      FamilySpec spec{fam, 0.0};
      if (fam == "beta") {
        if (!b_beta) throw UsageError("--family beta needs --beta");
        spec.param = *b_beta;
      } else if (fam == "gp") {
        if (!b_p) throw UsageError("--family gp needs --p");
        spec.param = *b_p;
      } else if (fam == "geometric") {
        if (!b_c) throw UsageError("--family geometric needs --c");
        spec.param = *b_c;
      } else if (fam == "knn") {
        if (!b_k) throw UsageError("--family knn needs --k");
        spec.param = static_cast<double>(*b_k);
      }
      const bool stochastic = fam == "hammersley" || (b_lines && *b_lines > 0);
      if (stochastic && !b_seed) throw UsageError("--seed is required for stochastic builds");
      const std::uint64_t seed = b_seed.value_or(0);
      const ConfigPtr cfg = share(read_points(b_in));
      Network net = b_stationary ? build_hammersley(cfg, derive_seed(seed, 0, "build"), HammersleyBoundary::stationary)
                                 : build_family(spec, cfg, derive_seed(seed, 0, "build"), workers);
      if (b_lines && *b_lines > 0) net = overlay_line_process(net, *b_lines, derive_seed(seed, 0, "lines"));
      if (b_planarize) net = planarize(net);
      write_network(net, b_out, seed);
    } else if (*stats) {
      Network net = read_network(s_in);
      ProfileParams params = s_flags.params();
      if (net.tag().label == "hammersley") params = profile_for({"hammersley", 0}, params);
      if (s_planarize) params.planarize = true;
      const NetSummary s = summarize(net, params, workers);
      if (!net.cities_connected()) err << "spnet: warning: network is disconnected; route statistics are infinite\n";
      write_or_print(to_json(s).dump(2), s_out, out);
      if (!s_profile.empty()) write_profile(rho_profile(net, params, workers), s_profile);
    } else if (*table1) {
      auto c = t1.resolve(default_table1(t1.n, t1.reps, t1.seed.value_or(0)));
      run_experiment(c, t1.out, workers);
    } else if (*fig6) {
      auto d = default_fig6(f6.n, f6.reps, f6.seed.value_or(0));
      d.families = parse_families(f6_families);
      run_experiment(f6.resolve(d), f6.out, workers);
    } else if (*fig7) {
      auto d = default_fig7(f7.n, f7.reps, f7.seed.value_or(0));
      d.beta_grid = f7_betas;
      d.gp_n = f7_gp_n;
      run_experiment(f7.resolve(d), f7.out, workers);
    } else if (*converge) {
      std::sort(cv_grid.begin(), cv_grid.end());
      auto d = default_convergence(parse_family(cv_family), cv_grid, cv.reps, cv.seed.value_or(0));
      if (*cv.n_opt) throw UsageError("converge takes --n-grid, not --n");
      run_experiment(cv.resolve(d), cv.out, workers);
    } else if (*paradox) {
      if (!std::is_sorted(px_int.begin(), px_int.end())) throw UsageError("--intensities must be increasing");
      auto d = default_paradox(px.n, px.reps, px.seed.value_or(0));
      d.intensities = px_int;
      run_experiment(px.resolve(d), px.out, workers);
    } else if (*render) {
      write_text(r_out, render_svg(read_network(r_in), style));
    } else if (*dump) {
      std::ostringstream os;
      os << "name,value,provenance";
      for (const auto& v : analytic_constants()) {
        os << '\n' << v.name << ',' << format_double(v.value) << ',' << to_string(v.provenance);
      }
      write_or_print(os.str(), d_out, out);
    }
  } catch (const UsageError& e) {
    err << "spnet: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "spnet: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "spnet: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace spnet::cli
