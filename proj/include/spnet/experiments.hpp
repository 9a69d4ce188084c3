#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spnet/builders.hpp"
#include "spnet/metrics.hpp"

namespace spnet {

inline constexpr const char* kCodeVersion = "spnet-1.0.0";

/// A network family plus its scalar parameter (beta, p, c or K; unused otherwise).
struct FamilySpec {
  std::string label;  // mst | beta | delaunay | hammersley | gp | geometric | knn
  double param = 0.0;

  /// File-system friendly name, e.g. "beta-1.5".
  std::string name() const;
  bool has_param() const;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

FamilySpec parse_family(const std::string& text);

/// Builds the family on a configuration; `seed` feeds stochastic builders.
Network build_family(const FamilySpec& family, const ConfigPtr& config, std::uint64_t seed, unsigned workers = 1);

/// Profile parameters actually used for a family: Hammersley is measured on a
/// 20% inner window and routed over its planarized form.
ProfileParams profile_for(const FamilySpec& family, ProfileParams base);

/// Substream seeds of one replicate.
std::uint64_t points_seed(std::uint64_t master, std::size_t rep);
std::uint64_t network_seed(std::uint64_t master, std::size_t rep, const FamilySpec& family);

struct RunRecord {
  FamilySpec family;
  std::size_t n = 0;
  std::size_t rep = 0;
  std::uint64_t seed = 0;
  std::uint64_t config_hash = 0;
  NetSummary summary;
  RhoProfile profile;
  double wall_seconds = 0.0;
};

/// Builds and measures one family on replicate `rep`'s configuration.
RunRecord run_replicate(const FamilySpec& family, std::size_t n, std::size_t rep, std::uint64_t master_seed,
                        const ProfileParams& params);

/// Mean and standard error of a sample.
struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};
MeanSe mean_se(const std::vector<double>& xs);

/// Bin-wise average of replicate profiles; a bin keeps a mean only if every
/// replicate has one.
RhoProfile average_profiles(const std::vector<RhoProfile>& profiles);

struct ExperimentConfig {
  std::string experiment;  // table1 | fig6 | fig7 | converge | paradox
  std::vector<FamilySpec> families;
  std::size_t n = 2500;
  std::size_t replicates = 10;
  std::uint64_t master_seed = 0;
  ProfileParams profile;
  std::vector<double> beta_grid;
  std::vector<std::size_t> n_grid;
  std::vector<double> intensities;
  /// Size cap for G_p builds inside the sweep.
  std::size_t gp_n = 1000;

  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);
};

ExperimentConfig default_table1(std::size_t n, std::size_t reps, std::uint64_t seed);
ExperimentConfig default_fig6(std::size_t n, std::size_t reps, std::uint64_t seed);
ExperimentConfig default_fig7(std::size_t n, std::size_t reps, std::uint64_t seed);
ExperimentConfig default_convergence(const FamilySpec& family, std::vector<std::size_t> n_grid, std::size_t reps,
                                     std::uint64_t seed);
ExperimentConfig default_paradox(std::size_t n, std::size_t reps, std::uint64_t seed);

inline const std::vector<double> kDefaultBetaGrid{0.8, 0.9, 1.0, 1.1, 1.25, 1.5, 1.75, 2.0};

struct FamilyResult {
  FamilySpec family;
  MeanSe length;
  MeanSe degree;
  MeanSe r_tilde;
  MeanSe r_max;
  MeanSe r_ave;
  RhoProfile profile;  // replicate average
  bool unbounded_suspected = false;
  std::vector<RunRecord> records;
};

/// Runs every family on every replicate (replicates in parallel).
std::vector<FamilyResult> run_families(const std::vector<FamilySpec>& families, std::size_t n, std::size_t reps,
                                       std::uint64_t master_seed, const ProfileParams& params, unsigned workers);

std::vector<FamilyResult> run_table1(std::size_t n, std::size_t reps, std::uint64_t master_seed,
                                     const ProfileParams& params, unsigned workers);

std::vector<FamilyResult> run_fig6_curves(const std::vector<FamilySpec>& families, std::size_t n, std::size_t reps,
                                          const ProfileParams& params, std::uint64_t master_seed, unsigned workers);

struct CurvePoint {
  std::string label;
  FamilySpec family;
  double length = 0.0;       // analytic for beta points, Monte Carlo otherwise
  double length_mc = 0.0;
  double r_tilde = 0.0;
  double r_tilde_se = 0.0;
  bool analytic_length = false;
};

struct Fig7Result {
  std::vector<CurvePoint> points;
  std::vector<FamilyResult> families;
};

/// The beta sweep and the specials (Delaunay, G_2, Hammersley). G_2 runs at
/// min(n, gp_n) cities.
Fig7Result run_fig7_sweep(const std::vector<double>& beta_grid, std::size_t n, std::size_t reps,
                          std::uint64_t master_seed, const ProfileParams& params, unsigned workers,
                          std::size_t gp_n = 1000);

/// Beta-curve R~ at length L by linear interpolation between the two beta grid
/// points whose (analytic) lengths bracket L; nearest end point outside the range.
double beta_curve_r_at(const std::vector<CurvePoint>& points, double length);

struct ConvergenceRow {
  std::size_t n = 0;
  MeanSe length;
  MeanSe degree;
};

/// Whole-window L_n = total length / n and mean degree, per n.
std::vector<ConvergenceRow> run_convergence(const FamilySpec& family, const std::vector<std::size_t>& n_grid,
                                            std::size_t reps, std::uint64_t master_seed, unsigned workers);

struct ParadoxRow {
  double intensity = 0.0;
  double added_length_per_area = 0.0;
  double r_ave = 0.0;
  double rho_at_1 = 0.0;
};

/// MST plus Poisson lines. Lower intensities use a thinning of the
/// highest-intensity line sample, so line sets are nested along the grid.
std::vector<ParadoxRow> run_paradox_demo(std::size_t n, const std::vector<double>& intensities, std::size_t reps,
                                         std::uint64_t master_seed, const ProfileParams& params, unsigned workers);

/// Executes an experiment configuration and writes the run directory:
/// manifest.json, summary.csv, rho/<family>.csv and the experiment's table.
void run_experiment(const ExperimentConfig& config, const std::filesystem::path& out_dir, unsigned workers);

/// summary.csv text for a set of records.
std::string summary_csv(const std::vector<const RunRecord*>& records);

}  // namespace spnet
