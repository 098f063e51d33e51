#pragma once

// Self-intersection numbers of closed geodesics on the thrice-punctured
// sphere, computed two independent ways:
//
//  * double cosets: lifts u.axis(g) crossing axis(g), one per double coset
//    <g> u <g>, identified exactly by a least word in the free group;
//  * tracer: the closed geodesic cut into chords of the fundamental domain
//    D = {|Re z| <= 1, |z + 1/2| >= 1/2, |z - 1/2| >= 1/2}, with crossings
//    counted directly inside D.
//
// The sides of D are paired by a (Re z = -1 -> Re z = 1) and b (the circle
// through -1, 0 -> the circle through 0, 1), so the tiles of the tessellation
// are in bijection with group elements and adjacent tiles differ by one
// letter. A geodesic therefore visits the tiles along the reduced word of its
// axis in the Cayley tree, which is what both methods rely on.

#include <algorithm>
#include <cmath>
#include <iterator>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "geodesics/errors.hpp"
#include "geodesics/hyp2.hpp"
#include "geodesics/words.hpp"

namespace geodesics::intersections {

inline constexpr double kDefaultTracerTolerance = 1e-6;
inline constexpr double kMinCrossingAngle = 1e-6;

inline int default_cutoff(const words::Word& w) { return static_cast<int>(w.size()) + 8; }

namespace detail {

inline void require_hyperbolic(const words::Word& w) {
  if (!words::is_hyperbolic(w)) {
    throw NotHyperbolic("word " + w.letters() + " is a cusp class, not a closed geodesic");
  }
}

inline OrientedAxis word_axis(const std::string& letters) {
  return oriented_axis_of(words::SurfaceGroup::matrix(letters));
}

/// Least element, by length then letter order, of the double coset
/// <g> u <g> in the free group, where g is cyclically reduced.
inline std::string canonical_double_coset(const std::string& g, const std::string& u) {
  const int reach = static_cast<int>(u.size() / g.size()) + 2;
  const std::string g_inv = words::inverse_of(g);
  auto power = [&](int k) {
    std::string out;
    for (int i = 0; i < std::abs(k); ++i) out += k > 0 ? g : g_inv;
    return out;
  };
  std::string best = u;
  for (int k = -reach; k <= reach; ++k) {
    const std::string left = words::free_reduce(power(k) + u);
    for (int l = -reach; l <= reach; ++l) {
      std::string cand = words::free_reduce(left + power(l));
      if (cand.size() < best.size() || (cand.size() == best.size() && words::compare_letters(cand, best) < 0)) {
        best = std::move(cand);
      }
    }
  }
  return best;
}

// Distinct double cosets <g> u <g> with u.axis(g) crossing axis(g), for
// conjugators of reduced length <= cutoff.
inline std::size_t count_crossing_cosets(const words::Word& w, int cutoff) {
  const std::string& s = w.letters();
  const std::size_t n = s.size();
  const Axis base = axis_of(words::SurfaceGroup::matrix(w));

  std::vector<OrientedAxis> rotated;
  rotated.reserve(n);
  for (std::size_t j = 0; j < n; ++j) rotated.push_back(word_axis(s.substr(j) + s.substr(0, j)));

  std::set<std::string> cosets;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string prefix = s.substr(0, i);
    // g^-1 p is the inverse of the suffix and moves axis(g) to the same line
    // up to <g>; the shorter matrix keeps nearly asymptotic lifts well
    // conditioned.
    const Isometry p = 2 * i <= n ? words::SurfaceGroup::matrix(prefix)
                                  : words::SurfaceGroup::matrix(words::inverse_of(s.substr(i)));
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      // u = p r^-1 with r = s[0, j); then u.axis(g) = p.axis(r^-1 g r) and
      // r^-1 g r is the rotation of w starting at j.
      const std::string u = words::free_reduce(prefix + words::inverse_of(s.substr(0, j)));
      if (static_cast<int>(u.size()) > cutoff) continue;
      const Axis other = Axis(p.apply(rotated[j].repelling), p.apply(rotated[j].attracting));
      if (other == base || !axes_cross(base, other)) continue;
      cosets.insert(canonical_double_coset(s, u));
    }
  }
  return cosets.size();
}

}  // namespace detail

/// Self-intersection number of a primitive closed geodesic via double cosets
/// <g> u <g> whose lifts cross axis(g). Each transverse double point yields
/// two such cosets (one per branch), so the count is halved.
///
/// Conjugators are restricted to those whose lift shares a tile with one
/// period of axis(g); every crossing coset has such a representative of
/// reduced length at most 2|w| - 2. Throws CutoffTooSmall when raising the
/// cutoff by 2 changes the result.
inline int self_intersection_count(const words::Word& w, int cutoff) {
  detail::require_hyperbolic(w);
  if (!w.is_primitive()) {
    throw GeometryError("double-coset count needs a primitive word; use tracer_count for powers");
  }
  const std::size_t at_cutoff = detail::count_crossing_cosets(w, cutoff);
  const std::size_t above = detail::count_crossing_cosets(w, cutoff + 2);
  if (at_cutoff != above) {
    throw CutoffTooSmall("conjugator cutoff " + std::to_string(cutoff) + " not converged for " + w.letters(),
                         cutoff);
  }
  if (at_cutoff % 2 != 0) {
    throw GeometryError("odd number of crossing cosets for " + w.letters());
  }
  return static_cast<int>(at_cutoff / 2);
}

inline int self_intersection_count(const words::Word& w) {
  return self_intersection_count(w, default_cutoff(w));
}

namespace detail {

inline double signed_distance_to_vertical(const PointUHP& z, double foot, bool inside_is_right) {
  const double dx = inside_is_right ? z.x() - foot : foot - z.x();
  return std::asinh(dx / z.y());
}

inline double signed_distance_outside_circle(const PointUHP& z, double center, double radius) {
  const double dx = z.x() - center;
  return std::asinh((dx * dx + z.y() * z.y() - radius * radius) / (2.0 * radius * z.y()));
}

// Half-open fundamental domain: the sides Re z = -1 and |z + 1/2| = 1/2 are
// kept, their images under a and b are dropped. Points within `tol` of a side
// are assigned consistently with the side pairing.
inline bool in_fundamental_domain(const PointUHP& z, double tol) {
  return signed_distance_to_vertical(z, -1.0, true) >= -tol &&
         signed_distance_outside_circle(z, -0.5, 0.5) >= -tol &&
         signed_distance_to_vertical(z, 1.0, false) > tol &&
         signed_distance_outside_circle(z, 0.5, 0.5) > tol;
}

}  // namespace detail

/// A transverse crossing of two chords inside the fundamental domain.
struct ChordCrossing {
  PointUHP point;
  std::size_t first;
  std::size_t second;
  double angle;
};

/// The |w| chords of the closed geodesic in the fundamental domain, as the
/// complete geodesics that carry them: chord j lies on the axis of the
/// rotation of w starting at letter j.
inline std::vector<Axis> domain_chords(const words::Word& w) {
  detail::require_hyperbolic(w);
  const std::string& s = w.letters();
  std::vector<Axis> chords;
  chords.reserve(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    chords.push_back(detail::word_axis(s.substr(j) + s.substr(0, j)).unoriented());
  }
  return chords;
}

inline std::vector<ChordCrossing> chord_crossings(const words::Word& w, double tol) {
  const auto chords = domain_chords(w);
  std::vector<ChordCrossing> out;
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      // Repeated strands of a proper power run along the same chord.
      if (chords[i] == chords[j] ||
          (geodesics::detail::same_point(chords[i].first(), chords[j].first()) &&
           geodesics::detail::same_point(chords[i].second(), chords[j].second()))) {
        continue;
      }
      const auto z = crossing_point(chords[i], chords[j]);
      if (!z || !detail::in_fundamental_domain(*z, tol)) continue;
      const double angle = crossing_angle(chords[i], chords[j]);
      if (angle < kMinCrossingAngle) {
        throw DegenerateCrossing("crossing angle below 1e-6 rad for " + w.letters());
      }
      out.push_back({*z, i, j, angle});
    }
  }
  return out;
}

/// Self-intersection number counted on the chords in the fundamental domain.
///
/// Crossing points are clustered by single linkage at distance 10 * tol. A
/// cluster carried by strands S contributes the pairs of S that cross there
/// plus the pairs of S running along the same chord (repeated strands of a
/// proper power), which is C(|S|, 2) at a genuine multiple point.
inline int tracer_count(const words::Word& w, double tol = kDefaultTracerTolerance) {
  const auto chords = domain_chords(w);
  const auto crossings = chord_crossings(w, tol);
  const double merge = 10.0 * tol;
  std::vector<std::size_t> parent(crossings.size());
  for (std::size_t k = 0; k < parent.size(); ++k) parent[k] = k;
  auto root = [&](std::size_t k) {
    while (parent[k] != k) k = parent[k] = parent[parent[k]];
    return k;
  };
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    for (std::size_t l = k + 1; l < crossings.size(); ++l) {
      if (dist(crossings[k].point, crossings[l].point) < merge) parent[root(l)] = root(k);
    }
  }
  auto same_chord = [&](std::size_t i, std::size_t j) {
    return chords[i] == chords[j] || (geodesics::detail::same_point(chords[i].first(), chords[j].first()) &&
                                      geodesics::detail::same_point(chords[i].second(), chords[j].second()));
  };
  int total = 0;
  for (std::size_t r = 0; r < crossings.size(); ++r) {
    if (root(r) != r) continue;
    std::set<std::size_t> strands;
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t k = 0; k < crossings.size(); ++k) {
      if (root(k) != r) continue;
      strands.insert(crossings[k].first);
      strands.insert(crossings[k].second);
      pairs.emplace(crossings[k].first, crossings[k].second);
    }
    for (auto i = strands.begin(); i != strands.end(); ++i) {
      for (auto j = std::next(i); j != strands.end(); ++j) {
        if (same_chord(*i, *j)) pairs.emplace(*i, *j);
      }
    }
    total += static_cast<int>(pairs.size());
  }
  return total;
}

}  // namespace geodesics::intersections
