#include "spnet/predicates.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "spnet/geometry.hpp"

namespace spnet {

namespace {

using boost::multiprecision::cpp_int;

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2;  // 2^-53
constexpr double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIncircleBound = (10.0 + 96.0 * kEps) * kEps;

// Converts a batch of doubles to integers sharing one binary exponent, so that
// ring arithmetic on the integers is exact.
template <std::size_t N>
std::array<cpp_int, N> to_common_scale(const std::array<double, N>& v) {
  std::array<std::int64_t, N> mant{};
  std::array<int, N> expo{};
  int min_exp = INT_MAX;
  for (std::size_t i = 0; i < N; ++i) {
    if (v[i] == 0.0) {
      mant[i] = 0;
      expo[i] = 0;
      continue;
    }
    int e = 0;
    const double f = std::frexp(v[i], &e);  // v = f * 2^e, 0.5 <= |f| < 1
    mant[i] = static_cast<std::int64_t>(std::ldexp(f, 53));
    expo[i] = e - 53;
    min_exp = std::min(min_exp, expo[i]);
  }
  if (min_exp == INT_MAX) min_exp = 0;
  std::array<cpp_int, N> out;
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = mant[i];
    if (mant[i] != 0) out[i] <<= (expo[i] - min_exp);
  }
  return out;
}

int sign_of(const cpp_int& x) { return x.sign(); }

int orient_exact(const Point& a, const Point& b, const Point& c) {
  const auto v = to_common_scale<6>({a.x, a.y, b.x, b.y, c.x, c.y});
  const cpp_int det = (v[2] - v[0]) * (v[5] - v[1]) - (v[3] - v[1]) * (v[4] - v[0]);
  return sign_of(det);
}

int incircle_exact(const Point& a, const Point& b, const Point& c, const Point& d) {
  const auto v = to_common_scale<8>({a.x, a.y, b.x, b.y, c.x, c.y, d.x, d.y});
  const cpp_int adx = v[0] - v[6], ady = v[1] - v[7];
  const cpp_int bdx = v[2] - v[6], bdy = v[3] - v[7];
  const cpp_int cdx = v[4] - v[6], cdy = v[5] - v[7];
  const cpp_int alift = adx * adx + ady * ady;
  const cpp_int blift = bdx * bdx + bdy * bdy;
  const cpp_int clift = cdx * cdx + cdy * cdy;
  const cpp_int det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
                      clift * (adx * bdy - bdx * ady);
  return sign_of(det);
}

}  // namespace

int orient2d(const Point& a, const Point& b, const Point& c) {
  const double detleft = (a.x - c.x) * (b.y - c.y);
  const double detright = (a.y - c.y) * (b.x - c.x);
  const double det = detleft - detright;
  const double bound = kOrientBound * (std::abs(detleft) + std::abs(detright));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return orient_exact(a, b, c);
}

int incircle(const Point& a, const Point& b, const Point& c, const Point& d) {
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;

  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double alift = adx * adx + ady * ady;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double blift = bdx * bdx + bdy * bdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double clift = cdx * cdx + cdy * cdy;

  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
  const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                           (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                           (std::abs(adxbdy) + std::abs(bdxady)) * clift;
  const double bound = kIncircleBound * permanent;
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return incircle_exact(a, b, c, d);
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orient2d(a, b, c);
  const int o2 = orient2d(a, b, d);
  const int o3 = orient2d(c, d, a);
  const int o4 = orient2d(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

}  // namespace spnet
