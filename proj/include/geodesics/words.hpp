#pragma once

// Words in the free group <a, b> (A = a^-1, B = b^-1) and their holonomy in
// the thrice-punctured sphere group generated by [[1,2],[0,1]], [[1,0],[2,1]].

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "geodesics/errors.hpp"
#include "geodesics/hyp2.hpp"

namespace geodesics::words {

inline constexpr std::string_view kLetters = "aAbB";  // canonical order

inline int letter_rank(char c) {
  switch (c) {
    case 'a': return 0;
    case 'A': return 1;
    case 'b': return 2;
    case 'B': return 3;
    default: throw InvalidWord(std::string("unknown letter '") + c + "'");
  }
}

inline char inverse_letter(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    case 'B': return 'b';
    default: throw InvalidWord(std::string("unknown letter '") + c + "'");
  }
}

/// Free reduction of an arbitrary string over {a, A, b, B}.
inline std::string free_reduce(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (!out.empty() && out.back() == inverse_letter(c)) {
      out.pop_back();
    } else {
      letter_rank(c);
      out.push_back(c);
    }
  }
  return out;
}

inline std::string inverse_of(std::string_view s) {
  std::string out(s.rbegin(), s.rend());
  for (char& c : out) c = inverse_letter(c);
  return out;
}

/// Lexicographic order with a < A < b < B, shorter prefixes first.
inline std::strong_ordering compare_letters(std::string_view l, std::string_view r) {
  const std::size_t n = std::min(l.size(), r.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int a = letter_rank(l[i]), b = letter_rank(r[i]);
    if (a != b) return a <=> b;
  }
  return l.size() <=> r.size();
}

/// A non-empty, freely and cyclically reduced word.
class Word {
 public:
  static Word parse(std::string_view s) {
    if (s.empty()) throw InvalidWord("empty word");
    for (std::size_t i = 0; i < s.size(); ++i) {
      const char next = s[(i + 1) % s.size()];
      if (s.size() > 1 && next == inverse_letter(s[i])) {
        throw InvalidWord("word is not cyclically reduced: " + std::string(s));
      }
    }
    return Word(std::string(s));
  }

  /// Cyclically reduces an arbitrary nontrivial word.
  static Word cyclic_reduction(std::string_view s) {
    std::string r = free_reduce(s);
    std::size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[hi - 1] == inverse_letter(r[lo])) {
      ++lo;
      --hi;
    }
    return parse(std::string_view(r).substr(lo, hi - lo));
  }

  const std::string& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }

  Word rotation(std::size_t k) const {
    k %= size();
    return Word(letters_.substr(k) + letters_.substr(0, k));
  }
  Word inverse() const { return Word(inverse_of(letters_)); }

  /// Swaps a <-> b letterwise.
  Word mirror() const {
    std::string s = letters_;
    for (char& c : s) {
      c = c == 'a' ? 'b' : c == 'b' ? 'a' : c == 'A' ? 'B' : 'A';
    }
    return Word(std::move(s));
  }

  /// Least rotation of the word and of its inverse: the representative of
  /// the conjugacy class.
  Word canonical() const {
    const std::string inv = inverse_of(letters_);
    std::string best = letters_;
    const std::size_t n = size();
    for (std::size_t k = 0; k < n; ++k) {
      for (const std::string* s : {&letters_, &inv}) {
        std::string rot = s->substr(k) + s->substr(0, k);
        if (compare_letters(rot, best) < 0) best = std::move(rot);
      }
    }
    return Word(std::move(best));
  }
  bool is_canonical() const { return canonical().letters_ == letters_; }

  /// Shortest period p dividing the length with w = (w[0..p))^(n/p).
  std::size_t period() const {
    const std::size_t n = size();
    for (std::size_t p = 1; p < n; ++p) {
      if (n % p == 0 && letters_.compare(p, n - p, letters_, 0, n - p) == 0) return p;
    }
    return n;
  }
  bool is_primitive() const { return period() == size(); }
  Word root() const { return Word(letters_.substr(0, period())); }
  std::size_t exponent() const { return size() / period(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& l, const Word& r) {
    return compare_letters(l.letters_, r.letters_);
  }

 private:
  explicit Word(std::string s) : letters_(std::move(s)) {}
  std::string letters_;
};

/// Exact 2x2 integer matrix; products are checked for overflow.
struct IntMatrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    auto dot = [](std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
      const __int128 v = static_cast<__int128>(p) * q + static_cast<__int128>(r) * s;
      if (v > INT64_MAX || v < INT64_MIN) throw GeometryError("word matrix entry overflow");
      return static_cast<std::int64_t>(v);
    };
    return {dot(x.a, y.a, x.b, y.c), dot(x.a, y.b, x.b, y.d), dot(x.c, y.a, x.d, y.c),
            dot(x.c, y.b, x.d, y.d)};
  }

  std::int64_t trace() const { return a + d; }
  Isometry to_isometry() const {
    return Isometry::make(static_cast<double>(a), static_cast<double>(b), static_cast<double>(c),
                          static_cast<double>(d));
  }
};

/// Generators of the thrice-punctured sphere group. The three cusps are the
/// conjugacy classes of a, b and a b^-1.
struct SurfaceGroup {
  static IntMatrix letter(char c) {
    switch (c) {
      case 'a': return {1, 2, 0, 1};
      case 'A': return {1, -2, 0, 1};
      case 'b': return {1, 0, 2, 1};
      case 'B': return {1, 0, -2, 1};
      default: throw InvalidWord(std::string("unknown letter '") + c + "'");
    }
  }
  static Isometry gen_a() { return letter('a').to_isometry(); }
  static Isometry gen_b() { return letter('b').to_isometry(); }
  static std::array<std::string_view, 3> cusp_classes() { return {"a", "b", "aB"}; }

  static IntMatrix int_matrix(std::string_view s) {
    IntMatrix m;
    for (char c : s) m = m * letter(c);
    return m;
  }
  static Isometry matrix(std::string_view s) { return int_matrix(s).to_isometry(); }
  static Isometry matrix(const Word& w) { return matrix(w.letters()); }
};

inline std::int64_t word_trace_exact(const Word& w) { return SurfaceGroup::int_matrix(w.letters()).trace(); }
inline double word_trace(const Word& w) { return static_cast<double>(word_trace_exact(w)); }

/// Integer traces of magnitude 2 are exactly the cusp (parabolic) classes.
inline bool is_hyperbolic(const Word& w) { return std::llabs(word_trace_exact(w)) > 2; }

/// Canonical representatives of all hyperbolic conjugacy classes of
/// cyclically reduced words with length <= max_len, ordered by length and
/// then by the canonical letter order. Proper powers are included.
inline std::vector<Word> enumerate_classes(int max_len) {
  if (max_len < 1 || max_len > 14) throw DomainError("enumerate_classes needs 1 <= max_len <= 14");
  std::vector<Word> out;
  std::string buf;
  std::vector<IntMatrix> prefix{IntMatrix{}};
  // A canonical word starts with its least letter, and the least letter of a
  // word or its inverse is `a` unless the word is a power of b (a cusp).
  auto dfs = [&](auto&& self, std::size_t target) -> void {
    if (buf.size() == target) {
      if (target > 1 && buf.back() == inverse_letter(buf.front())) return;
      if (std::llabs(prefix.back().trace()) <= 2) return;
      auto w = Word::parse(buf);
      if (w.is_canonical()) out.push_back(std::move(w));
      return;
    }
    for (char c : kLetters) {
      if (buf.empty() && c != 'a') continue;
      if (!buf.empty() && buf.back() == inverse_letter(c)) continue;
      buf.push_back(c);
      prefix.push_back(prefix.back() * SurfaceGroup::letter(c));
      self(self, target);
      prefix.pop_back();
      buf.pop_back();
    }
  };
  for (int len = 1; len <= max_len; ++len) dfs(dfs, static_cast<std::size_t>(len));
  return out;
}

}  // namespace geodesics::words
