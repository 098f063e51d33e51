#pragma once

// Lengths of the closed geodesics Gamma_{m,n} in a pair of pants: the
// closed form in terms of boundary lengths and an independent trace oracle
// built from an explicit holonomy representation.

#include <array>
#include <cmath>
#include <tuple>
#include <vector>

#include "geodesics/errors.hpp"
#include "geodesics/hyp2.hpp"

namespace geodesics::pants {

/// Boundary lengths of a pair of pants; a zero length is a cusp.
class PantsBoundary {
 public:
  PantsBoundary(double l1, double l2, double l3) : l_{l1, l2, l3} {
    for (double l : l_) {
      if (!std::isfinite(l) || l < 0.0) {
        throw DomainError("pants boundary lengths must be finite and >= 0");
      }
    }
  }
  static PantsBoundary ideal() { return {0.0, 0.0, 0.0}; }

  /// Lengths are indexed 1..3.
  double length(int i) const { return l_.at(static_cast<std::size_t>(i - 1)); }
  double c(int i) const { return std::cosh(0.5 * length(i)); }
  double s(int i) const { return std::sinh(0.5 * length(i)); }

  PantsBoundary swapped12() const { return {l_[1], l_[0], l_[2]}; }

  friend bool operator==(const PantsBoundary&, const PantsBoundary&) = default;

 private:
  std::array<double, 3> l_;
};

/// Winding numbers (m, n) around the first and second boundaries.
class CurveClass {
 public:
  CurveClass(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < 1) throw DomainError("curve class needs m, n >= 1");
  }
  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  friend bool operator==(const CurveClass&, const CurveClass&) = default;

 private:
  int m_;
  int n_;
};

/// sinh(m l/2)/sinh(l/2), with the cusp limit m at l = 0.
inline double chebyshev_ratio(int m, double l) {
  if (m < 1 || l < 0.0) throw DomainError("chebyshev_ratio needs m >= 1, l >= 0");
  if (l == 0.0) return static_cast<double>(m);
  if (m == 1) return 1.0;
  return std::sinh(0.5 * m * l) / std::sinh(0.5 * l);
}

/// Right-hand side of the closed form: cosh(length(Gamma_{m,n}) / 2).
inline double gamma_mn_half_cosh(const PantsBoundary& p, const CurveClass& k) {
  const double c1m = std::cosh(0.5 * k.m() * p.length(1));
  const double c2n = std::cosh(0.5 * k.n() * p.length(2));
  return chebyshev_ratio(k.m(), p.length(1)) * chebyshev_ratio(k.n(), p.length(2)) *
             (p.c(3) + p.c(1) * p.c(2)) +
         c1m * c2n;
}

inline double gamma_mn_length(const PantsBoundary& p, const CurveClass& k) {
  return 2.0 * std::acosh(gamma_mn_half_cosh(p, k));
}

/// Generators whose boundary classes are A, B and A B^-1.
struct PantsHolonomy {
  Isometry A;
  Isometry B;
  Isometry third() const { return A * B.inverse(); }
};

/// Explicit holonomy with tr A = 2c1, tr B = 2c2, tr(A B^-1) = -2c3.
///
/// A = [[lam, 2], [0, 1/lam]] with lam = exp(l1/2), which is the cusp
/// normal form at l1 = 0 and stays well conditioned as l1 -> 0. B is solved
/// from its trace and the trace of A B^-1, with the gauge fixed by equal
/// diagonal entries.
inline PantsHolonomy pants_holonomy(const PantsBoundary& p) {
  const double t1 = 2.0 * p.c(1), t2 = 2.0 * p.c(2), t3 = -2.0 * p.c(3);
  const double lam = std::exp(0.5 * p.length(1));
  const Isometry A = Isometry::make(lam, 2.0, 0.0, 1.0 / lam);
  // tr(A B^-1) = lam s - 2r + p/lam, and p = s = t2/2 gives r >= 2.
  const double bp = 0.5 * t2, bs = 0.5 * t2;
  const double br = 0.5 * (0.5 * t2 * (lam + 1.0 / lam) - t3);
  const double bq = (bp * bs - 1.0) / br;
  if (!(std::isfinite(bp) && std::isfinite(bq) && std::isfinite(br) && std::isfinite(bs))) {
    throw ConstructionFailure("pants holonomy solve produced non-finite entries");
  }
  PantsHolonomy h{A, Isometry::make(bp, bq, br, bs)};
  const double scale = std::max(1.0, std::abs(t1) + std::abs(t2) + std::abs(t3));
  if (std::abs(std::abs(h.A.trace()) - t1) > 1e-9 * scale ||
      std::abs(std::abs(h.B.trace()) - t2) > 1e-9 * scale ||
      std::abs(h.third().trace() - t3) > 1e-9 * scale) {
    throw ConstructionFailure("pants holonomy does not reproduce the boundary traces");
  }
  return h;
}

/// Translation length of A^m B^n for the explicit holonomy.
inline double trace_length_oracle(const PantsBoundary& p, const CurveClass& k) {
  const auto h = pants_holonomy(p);
  return translation_length(power(h.A, k.m()) * power(h.B, k.n()));
}

struct ModuliMinimum {
  PantsBoundary boundary;
  CurveClass curve;
  double length;
  double min_bound_margin;      // min over cells of cosh(l/2) - (2mn + 1)
  std::size_t cells;
  std::array<double, 3> forward_differences;  // objective increase per l_i at the minimizer
};

/// Grid search of length(Gamma_{m,n}) over [0, length_cap]^3 and all (m, n)
/// with m + n >= 3, m n <= mn_cap. The grid always contains l = 0; ties go to
/// the lexicographically smallest (l1, l2, l3, m, n).
inline ModuliMinimum minimize_over_moduli(int mn_cap, double length_cap, int grid) {
  if (mn_cap < 3 || grid < 2 || !(length_cap > 0.0)) {
    throw DomainError("minimize_over_moduli needs mn_cap >= 3, grid >= 2, length_cap > 0");
  }
  std::vector<CurveClass> classes;
  for (int m = 1; m <= mn_cap; ++m) {
    for (int n = 1; m * n <= mn_cap; ++n) {
      if (m + n >= 3) classes.emplace_back(m, n);
    }
  }
  const double step = length_cap / (grid - 1);
  auto level = [&](int i) { return i * step; };

  using Key = std::tuple<double, double, double, int, int>;
  double best = INFINITY;
  Key best_key{};
  double min_margin = INFINITY;
  std::size_t cells = 0;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      for (int k = 0; k < grid; ++k) {
        const PantsBoundary p(level(i), level(j), level(k));
        for (const auto& cc : classes) {
          const double half_cosh = gamma_mn_half_cosh(p, cc);
          min_margin = std::min(min_margin, half_cosh - (2.0 * cc.m() * cc.n() + 1.0));
          const double len = 2.0 * std::acosh(half_cosh);
          const Key key{level(i), level(j), level(k), cc.m(), cc.n()};
          if (len < best || (len == best && key < best_key)) {
            best = len;
            best_key = key;
          }
          ++cells;
        }
      }
    }
  }
  const auto [l1, l2, l3, m, n] = best_key;
  const PantsBoundary at(l1, l2, l3);
  const CurveClass cc(m, n);
  std::array<double, 3> diffs{};
  for (int i = 0; i < 3; ++i) {
    std::array<double, 3> l{l1, l2, l3};
    l[static_cast<std::size_t>(i)] += step;
    diffs[static_cast<std::size_t>(i)] = gamma_mn_length(PantsBoundary(l[0], l[1], l[2]), cc) - best;
  }
  return {at, cc, best, min_margin, cells, diffs};
}

}  // namespace geodesics::pants
