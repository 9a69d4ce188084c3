#include <doctest.h>

#include <stdexcept>
#include <cmath>

#include "spnet/delaunay.hpp"
#include "spnet/hammersley.hpp"
#include "spnet/rng.hpp"

using namespace spnet;

TEST_CASE("frog tape rules") {
  FrogTape left(FrogDirection::leftward, 10, 1);
  const std::size_t start = left.size();
  // a fly right of every frog is taken by a frog entering from outside
  CHECK(left.land(10 - 1e-9, 5) == FrogTape::kNoFrog);
  CHECK(left.size() == start + 1);
  CHECK(left.land(10 - 2e-9, 6) == 5);
  CHECK(left.size() == start + 1);
  FrogTape right(FrogDirection::rightward, 10, 1);
  CHECK(right.land(1e-9, 3) == FrogTape::kNoFrog);
  CHECK(right.land(2e-9, 4) == 3);
}

TEST_CASE("initial frogs are a rate-1 Poisson sample") {
  double s = 0;
  for (int r = 0; r < 500; ++r) s += static_cast<double>(FrogTape(FrogDirection::leftward, 40, r).size());
  CHECK(std::abs(s / 500 - 40) < 4 * std::sqrt(40.0 / 500));
}

TEST_CASE("one city gets no edges") {
  PointConfig c;
  c.window = Window(1);
  c.points = {{0.5, 0.5}};
  CHECK(build_hammersley(share(c), 3).edge_count() == 0);
}

TEST_CASE("equal times are rejected") {
  PointConfig c;
  c.window = Window(4);
  c.points = {{0.5, 1}, {2, 1}, {3, 3}};
  CHECK_THROWS_AS(build_hammersley(share(c), 1), DegenerateConfiguration);
}

namespace {

struct Interior {
  std::size_t cities = 0, good = 0, ne = 0, edges = 0;
  double ne_dx = 0, ne_dy = 0, edge_sum = 0;
};

void scan(const Network& net, Interior& acc) {
  const auto& w = net.config().window;
  for (VertexId v = 0; v < net.city_count(); ++v) {
    CHECK(net.degree(v) <= 4);
    if (!w.in_inner(net.position(v), 0.2)) continue;
    ++acc.cities;
    int quad[4] = {0, 0, 0, 0};
    for (auto e : net.incident(v)) {
      const double dx = net.position(net.other(e, v)).x - net.position(v).x;
      const double dy = net.position(net.other(e, v)).y - net.position(v).y;
      quad[(dx > 0 ? 0 : 1) + (dy > 0 ? 0 : 2)]++;
      acc.edge_sum += std::hypot(dx, dy);
      ++acc.edges;
      if (dx > 0 && dy > 0) {
        acc.ne_dx += dx;
        acc.ne_dy += dy;
        ++acc.ne;
      }
    }
    acc.good += net.degree(v) == 4 && quad[0] == 1 && quad[1] == 1 && quad[2] == 1 && quad[3] == 1;
  }
}

}  // namespace

TEST_CASE("degree and quadrant structure on interior cities") {
  Interior acc;
  for (std::uint64_t s = 0; s < 10; ++s) scan(build_hammersley(share(sample_finite_model(2500, 21 + s)), s), acc);
  CHECK(double(acc.good) / double(acc.cities) >= 0.99);
  CHECK(acc.edge_sum / double(acc.edges) == doctest::Approx(hammersley_mean_edge()).epsilon(0.03));
}

TEST_CASE("stationary boundary: NE displacements are unit-mean") {
  // Displacement means fluctuate strongly between networks (the frog density of
  // a whole window drifts together), so pool many small-window networks.
  Interior acc;
  for (std::uint64_t s = 0; s < 150; ++s) {
    scan(build_hammersley(share(sample_finite_model(900, 500 + s)), s, HammersleyBoundary::stationary), acc);
  }
  CHECK(double(acc.good) / double(acc.cities) >= 0.98);
  CHECK(acc.ne_dx / double(acc.ne) == doctest::Approx(1.0).epsilon(0.05));
  CHECK(acc.ne_dy / double(acc.ne) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("exits keep the frog count level") {
  FrogTape t(FrogDirection::rightward, 30, 4, true);
  Rng r(8);
  double time = 0;
  for (int k = 0; k < 30 * 60; ++k) {
    time += r.exponential(30);
    t.advance_to(time);
    t.land(r.uniform() * 30, k);
  }
  CHECK(t.exits() > 20);
  CHECK(std::abs(double(t.size()) - 30) < 20);
  FrogTape none(FrogDirection::rightward, 30, 4);
  none.advance_to(1e9);
  CHECK(none.exits() == 0);
}

TEST_CASE("seeded and reproducible") {
  const auto cfg = share(sample_finite_model(300, 2));
  CHECK(build_hammersley(cfg, 1).edge_pairs() == build_hammersley(cfg, 1).edge_pairs());
  CHECK(build_hammersley(cfg, 1).edge_pairs() != build_hammersley(cfg, 2).edge_pairs());
}
