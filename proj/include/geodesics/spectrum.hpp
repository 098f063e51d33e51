#pragma once

// Bottom of the length spectrum of the thrice-punctured sphere, with
// self-intersection numbers, and its plain-text cache.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "geodesics/errors.hpp"
#include "geodesics/hyp2.hpp"
#include "geodesics/intersections.hpp"
#include "geodesics/words.hpp"

namespace geodesics::spectrum {

enum class CountMethod { doublecoset, tracer, both };

inline const char* to_string(CountMethod m) {
  switch (m) {
    case CountMethod::doublecoset: return "doublecoset";
    case CountMethod::tracer: return "tracer";
    case CountMethod::both: return "both";
  }
  return "?";
}

inline CountMethod parse_method(const std::string& s) {
  if (s == "doublecoset") return CountMethod::doublecoset;
  if (s == "tracer") return CountMethod::tracer;
  if (s == "both") return CountMethod::both;
  throw InvalidWord("unknown count method '" + s + "'");
}

struct SpectrumEntry {
  words::Word word;
  std::int64_t trace;
  double length;
  int self_intersections;
  CountMethod method;
};

/// Length first, then shorter words, then letter order.
inline bool entry_less(const SpectrumEntry& l, const SpectrumEntry& r) {
  if (l.length != r.length) return l.length < r.length;
  if (l.word.size() != r.word.size()) return l.word.size() < r.word.size();
  return l.word < r.word;
}

struct Options {
  int cutoff_extra = 8;
  double tol = intersections::kDefaultTracerTolerance;
  unsigned threads = 0;  // 0: GEODESICS_THREADS, else hardware concurrency
};

inline double length_from_trace(std::int64_t trace) {
  return 2.0 * std::acosh(std::abs(static_cast<double>(trace)) / 2.0);
}

/// Counts one class. Primitive words run both methods, which must agree;
/// the double-coset cutoff is raised by 2 until it converges.
inline SpectrumEntry count_class(const words::Word& w, const Options& opt = {}) {
  const std::int64_t tr = words::word_trace_exact(w);
  if (std::llabs(tr) <= 2) throw NotHyperbolic("cusp class " + w.letters());
  const int traced = intersections::tracer_count(w, opt.tol);
  if (!w.is_primitive()) return {w, tr, length_from_trace(tr), traced, CountMethod::tracer};
  int cutoff = static_cast<int>(w.size()) + opt.cutoff_extra;
  const int ceiling = 2 * static_cast<int>(w.size()) + 2;
  for (;;) {
    try {
      const int dc = intersections::self_intersection_count(w, cutoff);
      if (dc != traced) {
        throw MethodDisagreement("counts disagree for " + w.letters() + ": doublecoset " + std::to_string(dc) +
                                 ", tracer " + std::to_string(traced));
      }
      return {w, tr, length_from_trace(tr), dc, CountMethod::both};
    } catch (const CutoffTooSmall&) {
      if (cutoff >= ceiling) throw;
      cutoff += 2;
    }
  }
}

inline unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GEODESICS_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// All hyperbolic classes of word length <= max_len and geodesic length <=
/// length_cap, counted and sorted by entry_less.
inline std::vector<SpectrumEntry> compute(int max_len, double length_cap, const Options& opt = {}) {
  if (max_len < 1 || max_len > 12) throw DomainError("spectrum needs 1 <= max_len <= 12");
  std::vector<words::Word> todo;
  for (auto& w : words::enumerate_classes(max_len)) {
    if (length_from_trace(words::word_trace_exact(w)) <= length_cap) todo.push_back(std::move(w));
  }
  std::vector<std::optional<SpectrumEntry>> slots(todo.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) {
      try {
        slots[i] = count_class(todo[i], opt);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = todo.size();
      }
    }
  };
  const unsigned n = std::min<std::size_t>(thread_count(opt.threads), std::max<std::size_t>(1, todo.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  std::vector<SpectrumEntry> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  std::sort(out.begin(), out.end(), entry_less);
  return out;
}

/// Entries with at least k_min self-intersections, in spectrum order.
inline std::vector<SpectrumEntry> constrained(const std::vector<SpectrumEntry>& entries, int k_min) {
  std::vector<SpectrumEntry> out;
  for (const auto& e : entries) {
    if (e.self_intersections >= k_min) out.push_back(e);
  }
  return out;
}

/// The shortest entry with at least k_min self-intersections.
inline std::optional<SpectrumEntry> witness(const std::vector<SpectrumEntry>& entries, int k_min) {
  for (const auto& e : entries) {
    if (e.self_intersections >= k_min) return e;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- cache --

struct CacheKey {
  int max_len;
  int cutoff_extra;
  double tol;
};

/// Shortest text that reads back to the same double.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string cache_header(const CacheKey& k, double cap) {
  return "# geodesics-spectrum max_len=" + std::to_string(k.max_len) + " cutoff=+" +
         std::to_string(k.cutoff_extra) + " tol=" + format_double(k.tol) + " cap=" + format_double(cap);
}

inline std::string format_row(const SpectrumEntry& e, char sep = '\t') {
  std::ostringstream os;
  os << e.word.letters() << sep << e.trace << sep << format_double(e.length) << sep << e.self_intersections << sep
     << to_string(e.method);
  return os.str();
}

/// Entries of a cache file whose key matches and whose cap covers
/// `length_cap`, restricted to that cap; nullopt on any mismatch or parse
/// error.
inline std::optional<std::vector<SpectrumEntry>> load_cache(const std::filesystem::path& file, const CacheKey& key,
                                                           double length_cap) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header)) return std::nullopt;
  const std::string expect = cache_header(key, 0.0);
  const std::string prefix = expect.substr(0, expect.rfind(" cap="));
  if (header.rfind(prefix + " cap=", 0) != 0) return std::nullopt;
  double cached_cap = 0.0;
  try {
    cached_cap = std::stod(header.substr(prefix.size() + 5));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (cached_cap < length_cap) return std::nullopt;
  std::vector<SpectrumEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string word, trace, length, count, method;
    if (!std::getline(row, word, '\t') || !std::getline(row, trace, '\t') || !std::getline(row, length, '\t') ||
        !std::getline(row, count, '\t') || !std::getline(row, method)) {
      return std::nullopt;
    }
    try {
      SpectrumEntry e{words::Word::parse(word), std::stoll(trace), std::stod(length), std::stoi(count),
                      parse_method(method)};
      if (e.length <= length_cap) out.push_back(std::move(e));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  std::sort(out.begin(), out.end(), entry_less);
  return out;
}

inline void save_cache(const std::filesystem::path& file, const CacheKey& key, double length_cap,
                       const std::vector<SpectrumEntry>& entries) {
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write spectrum cache " + file.string());
  out << cache_header(key, length_cap) << '\n';
  for (const auto& e : entries) out << format_row(e) << '\n';
}

/// compute() behind an optional cache file; a miss recomputes and rewrites it.
inline std::vector<SpectrumEntry> cached(int max_len, double length_cap, const Options& opt,
                                         const std::optional<std::filesystem::path>& cache_file,
                                         bool* hit = nullptr) {
  const CacheKey key{max_len, opt.cutoff_extra, opt.tol};
  if (hit) *hit = false;
  if (cache_file) {
    if (auto loaded = load_cache(*cache_file, key, length_cap)) {
      if (hit) *hit = true;
      return *loaded;
    }
  }
  auto entries = compute(max_len, length_cap, opt);
  if (cache_file) save_cache(*cache_file, key, length_cap, entries);
  return entries;
}

}  // namespace geodesics::spectrum
