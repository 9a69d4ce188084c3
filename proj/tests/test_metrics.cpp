#include <doctest.h>

#include <stdexcept>
#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "spnet/builders.hpp"
#include "spnet/hammersley.hpp"
#include "spnet/metrics.hpp"

using namespace spnet;

TEST_CASE("route lengths equal the all-pairs relaxation") {
  for (std::uint64_t s = 1; s <= 5; ++s) {
    const auto cfg = share(sample_finite_model(60, s));
    const auto net = planarize(build_proximity(cfg, beta_template(0.8)));
    const auto all = oracle::all_pairs_routes(net);
    for (VertexId i = 0; i < net.city_count(); ++i) {
      const auto d = route_lengths(net, i);
      for (VertexId j = 0; j < net.city_count(); ++j) {
        CHECK(d[j] == doctest::Approx(all[i][j]).epsilon(1e-12));
        CHECK(d[j] >= distance(net.position(i), net.position(j)) * (1 - 1e-12));
      }
    }
  }
}

TEST_CASE("direct edge routes and unreachable cities") {
  PointConfig c;
  c.window = Window(10);
  c.points = {{1, 1}, {4, 5}, {9, 9}};
  const auto net = Network(share(c), {"test", {}}, {{0, 1}});
  const auto d = route_lengths(net, 0);
  CHECK(d[1] == doctest::Approx(5.0));
  CHECK(std::isinf(d[2]));
  ProfileParams p;
  p.inner_margin = 0;
  p.min_count = 1;
  p.d_max = 20;
  const auto s = summarize(net, p);
  CHECK(std::isinf(s.r_tilde));
  CHECK(s.unreachable_fraction == doctest::Approx(2.0 / 3.0));
  CHECK(std::isinf(s.r_max));
}

TEST_CASE("a complete graph has zero excess") {
  const auto cfg = share(sample_finite_model(80, 3));
  const auto net = build_geometric(cfg, 100);
  ProfileParams p;
  p.min_count = 1;
  p.inner_margin = 0;
  const auto st = route_stats(net, p);
  CHECK(st.r_max == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(st.profile.r_tilde() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("bins: centres on multiples of the width, counts add up") {
  const auto cfg = share(sample_finite_model(400, 4));
  const auto net = build_delaunay(cfg);
  ProfileParams p;
  p.bin_width = 0.5;
  p.d_max = 5;
  p.inner_margin = 0.1;
  p.min_count = 10;
  const auto prof = rho_profile(net, p);
  std::size_t total = 0;
  for (std::size_t k = 0; k < prof.bins.size(); ++k) {
    CHECK(prof.bins[k].center == doctest::Approx(0.5 * k));
    total += prof.bins[k].count;
  }
  std::size_t brute = 0;
  for (VertexId i = 0; i < net.city_count(); ++i) {
    for (VertexId j = i + 1; j < net.city_count(); ++j) {
      const auto& w = cfg->window;
      if (w.in_inner(cfg->points[i], 0.1) && w.in_inner(cfg->points[j], 0.1) &&
          distance(cfg->points[i], cfg->points[j]) <= 5.0)
        ++brute;
    }
  }
  CHECK(total == brute);
}

TEST_CASE("profile helpers") {
  RhoProfile p;
  p.bin_width = 1;
  p.min_count = 5;
  p.bins = {{0, 0, std::nullopt, 0}, {1, 10, 0.2, 0.5}, {2, 10, 0.4, 0.9}, {3, 3, std::nullopt, 1.0}, {4, 10, 0.3, 0.6}};
  CHECK(p.argmax() == 2u);
  CHECK(p.r_tilde() == doctest::Approx(0.4));
  CHECK(p.value_at(1.1) == doctest::Approx(0.2));
  CHECK(std::isnan(p.value_at(3)));
  CHECK(!p.unbounded_suspected());
  p.bins[4].mean_ratio = 0.5;
  CHECK(p.unbounded_suspected());
  RhoProfile empty;
  CHECK(std::isnan(empty.r_tilde()));
  CHECK(!empty.argmax());
}

TEST_CASE("subgraphs have larger route excess") {
  const auto cfg = share(sample_finite_model(900, 6));
  ProfileParams p;
  p.d_max = 6;
  p.min_count = 30;
  const auto rn = rho_profile(build_proximity(cfg, beta_template(2.0)), p);
  const auto ga = rho_profile(build_proximity(cfg, beta_template(1.0)), p);
  const auto de = rho_profile(build_delaunay(cfg), p);
  for (std::size_t k = 0; k < de.bins.size(); ++k) {
    if (!de.bins[k].mean_ratio) continue;
    CHECK(*rn.bins[k].mean_ratio >= *ga.bins[k].mean_ratio);
    CHECK(*ga.bins[k].mean_ratio >= *de.bins[k].mean_ratio);
  }
}

TEST_CASE("results do not depend on the worker count") {
  const auto cfg = share(sample_finite_model(700, 7));
  const auto net = build_proximity(cfg, beta_template(1.3));
  ProfileParams p;
  const auto a = summarize(net, p, 1);
  const auto b = summarize(net, p, 4);
  CHECK(a.r_tilde == b.r_tilde);
  CHECK(a.r_ave == b.r_ave);
  CHECK(a.r_max == b.r_max);
}

TEST_CASE("length and degree estimators") {
  const auto cfg = share(sample_finite_model(500, 8));
  const auto mst = build_mst(cfg);
  CHECK(avg_degree(mst, 0) == doctest::Approx(2.0 * 499 / 500));
  CHECK(normalized_length(mst, 0) == doctest::Approx(mst.total_length() / cfg->window.area()));
  CHECK_THROWS_AS(avg_degree(mst, 0.5), std::invalid_argument);
  const auto h = build_hammersley(cfg, 1);
  CHECK(avg_degree(h, 0.2) == doctest::Approx(4.0).epsilon(0.01));
}

TEST_CASE("planarized routing barely changes Hammersley routes") {
  const auto cfg = share(sample_finite_model(500, 9));
  const auto net = build_hammersley(cfg, 3);
  ProfileParams p;
  p.inner_margin = 0.2;
  p.min_count = 20;
  p.d_max = 6;
  const auto raw = route_stats(net, p);
  p.planarize = true;
  const auto flat = route_stats(net, p);
  CHECK(flat.r_ave <= raw.r_ave + 1e-12);
  CHECK(flat.r_ave >= 0);
}
