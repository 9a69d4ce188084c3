#include "spnet/hammersley.hpp"

#include <algorithm>
#include <numeric>

#include "spnet/rng.hpp"

namespace spnet {

FrogTape::FrogTape(FrogDirection dir, double side, std::uint64_t seed, bool exits)
    : dir_(dir), rng_(seed), exits_on_(exits) {
  const std::uint64_t count = rng_.poisson(side);
  for (std::uint64_t k = 0; k < count; ++k) frogs_.emplace(rng_.uniform() * side, kInitialMarker);
  next_exit_ = rng_.exponential(1.0);
}

void FrogTape::advance_to(double t) {
  while (exits_on_ && next_exit_ < t) {
    if (!frogs_.empty()) {
      frogs_.erase(dir_ == FrogDirection::leftward ? frogs_.begin() : std::prev(frogs_.end()));
      ++exits_;
    }
    next_exit_ += rng_.exponential(1.0);
  }
}

std::int64_t FrogTape::land(double x, std::int64_t city) {
  auto it = frogs_.end();
  if (dir_ == FrogDirection::leftward) {
    it = frogs_.upper_bound(x);
  } else {
    it = frogs_.lower_bound(x);
    it = (it == frogs_.begin()) ? frogs_.end() : std::prev(it);
  }
  std::int64_t previous = kNoFrog;
  if (it != frogs_.end()) {
    previous = it->second;
    frogs_.erase(it);
  }
  frogs_.emplace(x, city);
  return previous;
}

Network build_hammersley(const ConfigPtr& config, std::uint64_t seed, HammersleyBoundary boundary) {
  const auto& pts = config->points;
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pts[a].y < pts[b].y; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (pts[order[k]].y == pts[order[k - 1]].y) {
      throw DegenerateConfiguration("hammersley: two cities share a y coordinate");
    }
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  const double side = config->window.side();
  const FrogDirection dirs[] = {FrogDirection::leftward, FrogDirection::rightward};
  for (int pass = 0; pass < 2; ++pass) {
    FrogTape tape(dirs[pass], side, derive_seed(seed, static_cast<std::uint64_t>(pass + 1), "hammersley"),
                  boundary == HammersleyBoundary::stationary);
    for (std::size_t c : order) {
      tape.advance_to(pts[c].y);
      const std::int64_t prev = tape.land(pts[c].x, static_cast<std::int64_t>(c));
      if (prev >= 0) pairs.emplace_back(static_cast<VertexId>(prev), static_cast<VertexId>(c));
    }
  }
  FamilyTag tag{"hammersley", {}};
  if (boundary == HammersleyBoundary::stationary) tag.params["stationary"] = 1;
  return Network(config, std::move(tag), std::move(pairs));
}

}  // namespace spnet
