#pragma once

// Reference computations for the tests, written without the library's
// geometry code: complex arithmetic in long double, closed forms in other
// parametrisations, and brute-force enumeration.

#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using real = long double;
using cplx = std::complex<real>;

// High-precision values (mpmath, 30 digits), rounded to double.
inline constexpr double kM1 = 3.525494348078172;        // 4 log(1 + sqrt 2)
inline constexpr double kM2 = 4.584863339122355;        // 2 log(5 + 2 sqrt 6)
inline constexpr double kGap = 1.0593689910441833;       // M2 - M1
inline constexpr double kIntermediate = 4.658544165996115;  // log(25/9) + 2 log(3 + sqrt 10)
inline constexpr double kT0 = 3.0523003446139407;        // root of dH/dT
inline constexpr double kHT0 = 4.734630547567881;        // H(T0)
inline constexpr double kAsinhDifference = 1.3021541441645819;  // 2 asinh 4 - 2 asinh 2

struct Mat {
  real a, b, c, d;
};

inline Mat mul(const Mat& x, const Mat& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline cplx mobius(const Mat& m, cplx z) { return (m.a * z + m.b) / (m.c * z + m.d); }

/// cosh d = 1 + |z - w|^2 / (2 Im z Im w).
inline real distance(cplx z, cplx w) {
  return std::acosh(1.0L + std::norm(z - w) / (2.0L * z.imag() * w.imag()));
}

/// Fixed points of a hyperbolic matrix with c != 0, by the textbook formula.
inline std::pair<real, real> fixed_points(const Mat& m) {
  const real disc = std::sqrt((m.a + m.d) * (m.a + m.d) - 4.0L);
  return {(m.a - m.d - disc) / (2.0L * m.c), (m.a - m.d + disc) / (2.0L * m.c)};
}

/// Endpoints interleave on the real line (neither at infinity).
inline bool interleave(std::pair<real, real> p, std::pair<real, real> q) {
  auto [p1, p2] = p;
  auto [q1, q2] = q;
  if (p1 > p2) std::swap(p1, p2);
  const bool in1 = p1 < q1 && q1 < p2;
  const bool in2 = p1 < q2 && q2 < p2;
  return in1 != in2;
}

inline Mat letter(char ch) {
  switch (ch) {
    case 'a': return {1, 2, 0, 1};
    case 'A': return {1, -2, 0, 1};
    case 'b': return {1, 0, 2, 1};
    default: return {1, 0, -2, 1};
  }
}

inline Mat word_matrix(const std::string& w) {
  Mat m{1, 0, 0, 1};
  for (char ch : w) m = mul(m, letter(ch));
  return m;
}

inline char inv(char ch) {
  switch (ch) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    default: return 'b';
  }
}

/// log coth(x / 4) = asinh(1 / sinh(x / 2)).
inline real collar_width(real x) { return std::log(1.0L / std::tanh(x / 4.0L)); }

/// log coth(x / 8) = asinh(1 / sinh(x / 4)).
inline real wide_width(real x) { return std::log(1.0L / std::tanh(x / 8.0L)); }

/// Self-intersection number by brute force: every reduced conjugator u of
/// length <= max_u with u.axis(g) crossing axis(g), keyed by the crossing
/// height along axis(g) modulo the period and by the crossing direction.
/// Only reliable for short words where the keys are well separated.
inline int brute_force_intersections(const std::string& w, int max_u) {
  const Mat g = word_matrix(w);
  const real tr = std::abs(g.a + g.d);
  const real period = 2.0L * std::acosh(tr / 2.0L);
  const auto [x1, x2] = fixed_points(g);
  // Moebius map sending x1 -> 0 and x2 -> infinity.
  auto normalize = [&](real x) { return (x - x1) / (x - x2); };

  std::vector<std::pair<real, real>> keys;
  std::vector<std::string> frontier{""};
  for (int len = 0; len <= max_u; ++len) {
    std::vector<std::string> next;
    for (const auto& u : frontier) {
      if (!u.empty()) {
        const Mat m = word_matrix(u);
        const std::pair<real, real> lift{
            (m.a * x1 + m.b) / (m.c * x1 + m.d), (m.a * x2 + m.b) / (m.c * x2 + m.d)};
        if (std::abs(lift.first - x1) > 1e-12L && std::abs(lift.second - x2) > 1e-12L &&
            interleave({x1, x2}, lift)) {
          const real y1 = normalize(lift.first), y2 = normalize(lift.second);
          const real height = std::sqrt(-y1 * y2);
          real offset = std::fmod(std::log(height), period);
          if (offset < 0) offset += period;
          const real slope = y1 / height;
          bool seen = false;
          for (const auto& [o, s] : keys) {
            const real d = std::abs(o - offset);
            if (std::min(d, period - d) < 1e-8L && std::abs(s - slope) < 1e-8L) seen = true;
          }
          if (!seen) keys.emplace_back(offset, slope);
        }
      }
      for (char ch : std::string("aAbB")) {
        if (!u.empty() && u.back() == inv(ch)) continue;
        next.push_back(u + ch);
      }
    }
    frontier = std::move(next);
  }
  return static_cast<int>(keys.size() / 2);
}

}  // namespace oracle
