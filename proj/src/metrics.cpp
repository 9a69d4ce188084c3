#include "spnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>

#include "spnet/builders.hpp"
#include "spnet/parallel.hpp"

namespace spnet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dijkstra from `source`; stops once `targets_left` flagged vertices are settled.
void dijkstra(const Network& net, VertexId source, std::vector<double>& dist, const std::vector<char>* target,
              std::size_t targets_left) {
  dist.assign(net.vertex_count(), kInf);
  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[v]) continue;
    if (target && (*target)[v]) {
      if (--targets_left == 0) return;
    }
    for (auto e : net.incident(v)) {
      const VertexId w = net.other(e, v);
      const double nd = d + net.edges()[e].length;
      if (nd < dist[w]) {
        dist[w] = nd;
        heap.emplace(nd, w);
      }
    }
  }
}

struct Partial {
  std::vector<double> sum;
  std::vector<std::size_t> count;
  std::vector<std::size_t> unreachable;
  std::vector<double> max;
  double total = 0.0;
  std::size_t pairs = 0;
  std::size_t pairs_unreachable = 0;
  double r_max = 0.0;
};

}  // namespace

std::optional<std::size_t> RhoProfile::argmax() const {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < bins.size(); ++k) {
    if (!bins[k].mean_ratio) continue;
    if (!best || *bins[k].mean_ratio > *bins[*best].mean_ratio) best = k;
  }
  return best;
}

double RhoProfile::r_tilde() const {
  const auto k = argmax();
  return k ? *bins[*k].mean_ratio : std::numeric_limits<double>::quiet_NaN();
}

double RhoProfile::value_at(double d) const {
  const auto k = static_cast<std::size_t>(std::llround(d / bin_width));
  if (k >= bins.size() || !bins[k].mean_ratio) return std::numeric_limits<double>::quiet_NaN();
  return *bins[k].mean_ratio;
}

bool RhoProfile::unbounded_suspected() const {
  std::vector<double> means;
  for (const auto& b : bins) {
    if (b.mean_ratio) means.push_back(*b.mean_ratio);
  }
  if (means.size() < 3) return false;
  const std::size_t m = means.size();
  return means[m - 3] < means[m - 2] && means[m - 2] < means[m - 1];
}

double normalized_length(const Network& net, double inner_margin) {
  const Window& w = net.config().window;
  if (inner_margin <= 0) return net.total_length() / w.area();
  if (inner_margin >= 0.5) throw std::invalid_argument("normalized_length: margin must be < 0.5");
  double sum = 0.0;
  for (const auto& e : net.edges()) {
    const int inside = (w.in_inner(net.position(e.u), inner_margin) ? 1 : 0) +
                       (w.in_inner(net.position(e.v), inner_margin) ? 1 : 0);
    sum += 0.5 * inside * e.length;
  }
  // Density-1 units: the inner window's area is measured by its city count.
  std::size_t cities = 0;
  for (VertexId v = 0; v < net.city_count(); ++v) cities += w.in_inner(net.position(v), inner_margin) ? 1 : 0;
  return cities ? sum / static_cast<double>(cities) : 0.0;
}

double avg_degree(const Network& net, double inner_margin) {
  if (!(inner_margin >= 0 && inner_margin < 0.5)) throw std::invalid_argument("avg_degree: margin must be in [0, 0.5)");
  const Window& w = net.config().window;
  std::size_t cities = 0, degree_sum = 0;
  for (VertexId v = 0; v < net.city_count(); ++v) {
    if (!w.in_inner(net.position(v), inner_margin)) continue;
    ++cities;
    degree_sum += net.degree(v);
  }
  return cities ? static_cast<double>(degree_sum) / static_cast<double>(cities) : 0.0;
}

std::vector<double> route_lengths(const Network& net, VertexId source) {
  if (source >= net.city_count()) throw std::invalid_argument("route_lengths: source is not a city");
  std::vector<double> dist;
  dijkstra(net, source, dist, nullptr, 0);
  dist.resize(net.city_count());
  return dist;
}

RouteStats route_stats(const Network& input, const ProfileParams& params, unsigned workers) {
  if (!(params.bin_width > 0)) throw std::invalid_argument("rho_profile: bin width must be positive");
  if (!(params.inner_margin >= 0 && params.inner_margin < 0.5)) {
    throw std::invalid_argument("rho_profile: margin must be in [0, 0.5)");
  }
  std::optional<Network> planar;
  if (params.planarize) planar.emplace(planarize(input));
  const Network& net = planar ? *planar : input;

  const Window& w = net.config().window;
  std::vector<VertexId> inner;
  for (VertexId v = 0; v < net.city_count(); ++v) {
    if (w.in_inner(net.position(v), params.inner_margin)) inner.push_back(v);
  }
  const auto nbins = static_cast<std::size_t>(std::llround(params.d_max / params.bin_width)) + 1;

  std::vector<Partial> partial(inner.size());
  parallel_for(inner.size(), workers, [&](std::size_t s) {
    Partial& part = partial[s];
    part.sum.assign(nbins, 0.0);
    part.count.assign(nbins, 0);
    part.unreachable.assign(nbins, 0);
    part.max.assign(nbins, 0.0);
    const VertexId src = inner[s];
    std::vector<char> target(net.vertex_count(), 0);
    for (std::size_t t = s + 1; t < inner.size(); ++t) target[inner[t]] = 1;
    const std::size_t ntargets = inner.size() - s - 1;
    if (ntargets == 0) return;
    std::vector<double> dist;
    dijkstra(net, src, dist, &target, ntargets);
    const Point& ps = net.position(src);
    for (std::size_t t = s + 1; t < inner.size(); ++t) {
      const VertexId dst = inner[t];
      const double d = distance(ps, net.position(dst));
      const double route = dist[dst];
      ++part.pairs;
      const bool reach = std::isfinite(route);
      const double r = reach ? std::max(0.0, route / d - 1.0) : kInf;
      if (reach) {
        part.total += r;
        part.r_max = std::max(part.r_max, r);
      } else {
        ++part.pairs_unreachable;
        part.r_max = kInf;
      }
      if (d <= params.d_max) {
        const auto k = static_cast<std::size_t>(std::llround(d / params.bin_width));
        if (k < nbins) {
          ++part.count[k];
          if (reach) {
            part.sum[k] += r;
          } else {
            ++part.unreachable[k];
          }
          part.max[k] = std::max(part.max[k], r);
        }
      }
    }
  });

  // Merge in source order so the result does not depend on the worker count.
  std::vector<double> sum(nbins, 0.0), mx(nbins, 0.0);
  std::vector<std::size_t> count(nbins, 0), unreach(nbins, 0);
  double total = 0.0, r_max = 0.0;
  std::size_t pairs = 0, pairs_unreachable = 0;
  for (const auto& part : partial) {
    if (part.sum.empty()) continue;
    for (std::size_t k = 0; k < nbins; ++k) {
      sum[k] += part.sum[k];
      count[k] += part.count[k];
      unreach[k] += part.unreachable[k];
      mx[k] = std::max(mx[k], part.max[k]);
    }
    total += part.total;
    pairs += part.pairs;
    pairs_unreachable += part.pairs_unreachable;
    r_max = std::max(r_max, part.r_max);
  }

  RouteStats out;
  out.profile.bin_width = params.bin_width;
  out.profile.d_max = params.d_max;
  out.profile.inner_margin = params.inner_margin;
  out.profile.min_count = params.min_count;
  for (std::size_t k = 0; k < nbins; ++k) {
    RhoBin b;
    b.center = static_cast<double>(k) * params.bin_width;
    b.count = count[k];
    b.max_ratio = mx[k];
    if (count[k] >= params.min_count && count[k] > 0) {
      b.mean_ratio = unreach[k] ? kInf : sum[k] / static_cast<double>(count[k]);
    }
    out.profile.bins.push_back(b);
  }
  out.pair_count = pairs;
  out.r_max = r_max;
  const std::size_t reachable = pairs - pairs_unreachable;
  out.r_ave = reachable ? total / static_cast<double>(reachable) : 0.0;
  out.unreachable_fraction = pairs ? static_cast<double>(pairs_unreachable) / static_cast<double>(pairs) : 0.0;
  return out;
}

RhoProfile rho_profile(const Network& net, const ProfileParams& params, unsigned workers) {
  return route_stats(net, params, workers).profile;
}

NetSummary summarize(const Network& net, const ProfileParams& params, unsigned workers) {
  const RouteStats stats = route_stats(net, params, workers);
  NetSummary s;
  s.length = normalized_length(net, 0.0);
  s.length_inner = normalized_length(net, params.inner_margin);
  s.avg_degree = avg_degree(net, params.inner_margin);
  s.r_max = stats.r_max;
  s.r_ave = stats.r_ave;
  s.unreachable_fraction = stats.unreachable_fraction;
  s.pair_count = stats.pair_count;
  s.r_tilde = stats.unreachable_fraction > 0 ? kInf : stats.profile.r_tilde();
  s.unbounded_suspected = stats.profile.unbounded_suspected();
  return s;
}

}  // namespace spnet
