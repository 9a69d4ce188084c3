#include "spnet/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace spnet {

namespace {

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, std::string_view purpose) {
  std::uint64_t s = master;
  std::uint64_t h = splitmix64(s);
  s = h ^ (index * 0xd1b54a32d192ed03ULL);
  h = splitmix64(s);
  s = h ^ fnv1a(purpose);
  return splitmix64(s);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return derive_seed(master, index, "");
}

Rng::Rng(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& w : s_) w = splitmix64(sm);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::exponential(double rate) {
  if (!(rate > 0)) throw std::invalid_argument("exponential: rate must be positive");
  return -std::log1p(-uniform()) / rate;
}

std::uint64_t Rng::poisson(double mean) {
  if (!(mean >= 0)) throw std::invalid_argument("poisson: mean must be non-negative");
  std::uint64_t count = 0;
  double t = exponential(1.0);
  while (t <= mean) {
    ++count;
    t += exponential(1.0);
  }
  return count;
}

}  // namespace spnet
