#pragma once

#include <cstdint>
#include <map>

#include "spnet/builders.hpp"
#include "spnet/rng.hpp"

namespace spnet {

enum class FrogDirection { leftward, rightward };

/// Frog positions on the log during one sweep. Each frog remembers the city it
/// last jumped to, or kInitialMarker for a time-0 position.
///
/// A fly beyond the upstream-most frog is taken by a frog entering from
/// outside the window. Optionally frogs also leave through the downstream end
/// at the times of a rate-1 Poisson process (jumps to flies outside the
/// window), which keeps the process stationary inside the window.
class FrogTape {
 public:
  static constexpr std::int64_t kInitialMarker = -1;

  FrogTape(FrogDirection dir, double side, std::uint64_t seed, bool exits = false);

  FrogDirection direction() const { return dir_; }
  std::size_t size() const { return frogs_.size(); }
  const std::map<double, std::int64_t>& frogs() const { return frogs_; }

  /// Processes a fly (city) landing at x. Returns the city the responsible frog
  /// last visited, kInitialMarker when it had not visited a city yet, or
  /// kNoFrog when no frog in the window can see x (a frog then enters from
  /// outside the window).
  static constexpr std::int64_t kNoFrog = -2;
  std::int64_t land(double x, std::int64_t city);
  /// Applies the exits that happen before time t (no-op without exits).
  void advance_to(double t);
  /// Frogs that have left so far.
  std::size_t exits() const { return exits_; }

 private:
  FrogDirection dir_;
  std::map<double, std::int64_t> frogs_;
  Rng rng_;
  bool exits_on_;
  double next_exit_ = 0.0;
  std::size_t exits_ = 0;
};

/// How the frog process meets the window's side edges. `initial_only` is the
/// construction of randomizing the time-0 frogs only; frogs then accumulate at
/// the downstream side. `stationary` adds Poisson exits there.
enum class HammersleyBoundary { initial_only, stationary };

/// Hammersley network: union of the leftward (NW/SE edges) and rightward
/// (NE/SW edges) frog-process networks, with y read as time. Initial frog
/// positions for the two passes come from independent substreams of `seed`.
/// Throws DegenerateConfiguration when two cities share a y coordinate.
Network build_hammersley(const ConfigPtr& config, std::uint64_t seed,
                         HammersleyBoundary boundary = HammersleyBoundary::initial_only);

/// Mean edge length of the infinite network, by 2D quadrature.
double hammersley_mean_edge();

}  // namespace spnet
