#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with in-memory streams.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "geodesics/geodesics.hpp"

namespace geodesics::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kSuccess = 0, kCheckFailure = 1, kUsage = 2 };

using Json = nlohmann::ordered_json;

inline Json to_json(const Witness& w) {
  Json j = Json::object();
  for (const auto& [k, v] : w) j[k] = v;
  return j;
}

inline Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json jc;
    jc["id"] = c.id;
    jc["pass"] = c.pass;
    jc["margin"] = c.margin;
    jc["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
    checks.push_back(std::move(jc));
  }
  Json j;
  j["suite"] = r.suite;
  j["passed"] = r.passed();
  j["checks"] = std::move(checks);
  j["notes"] = r.notes;
  return j;
}

/// Echo of every option of the active subcommand, in declaration order.
inline Json config_echo(const CLI::App& sub) {
  Json j = Json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string name = opt->get_name(false, true);
    if (name.empty() || name == "--help" || name == "-h") continue;
    const std::string key = name.substr(name.find_first_not_of('-'));
    if (opt->get_expected_max() == 0) {
      j[key] = opt->count() > 0;
    } else {
      const auto& res = opt->results();
      j[key] = res.empty() ? Json(opt->get_default_str()) : Json(res.back());
    }
  }
  return j;
}

/// One self-describing document: values, an optional check report and the
/// artifact version with the effective configuration.
inline Json document(const std::string& command, Json values, const std::optional<Report>& report,
                     const CLI::App& sub) {
  Json j;
  j["command"] = command;
  j["values"] = std::move(values);
  if (report) {
    Json rj = to_json(*report);
    j["passed"] = rj["passed"];
    j["report"] = std::move(rj);
  }
  j["versions"] = {{"artifact", kVersion}, {"config", config_echo(sub)}};
  return j;
}

inline void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed geodesics, collars and the two-self-intersection length bound", "geodesics"};
  app.set_config("--config", "", "key=value file with option defaults; flags win");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto* constants = app.add_subcommand("constants", "M1, M2, their gap and the corkscrew lengths");

  auto* collar_cmd = app.add_subcommand("collar", "collar widths and the hexagon-gap identity");
  double collar_length = 0.0;
  bool collar_scan = false;
  collar_cmd->add_option("--length", collar_length, "core geodesic length")->required();
  collar_cmd->add_flag("--scan", collar_scan, "also scan the width identities on (0, 20]");

  auto* pants_len = app.add_subcommand("pants-length", "length of Gamma_{m,n} in a pair of pants");
  double l1 = 0.0, l2 = 0.0, l3 = 0.0;
  int pm = 1, pn = 1;
  bool oracle = false;
  pants_len->add_option("--l1", l1, "first boundary length (0 = cusp)")->required();
  pants_len->add_option("--l2", l2, "second boundary length")->required();
  pants_len->add_option("--l3", l3, "third boundary length")->required();
  pants_len->add_option("--m", pm, "turns around the first boundary")->required();
  pants_len->add_option("--n", pn, "turns around the second boundary")->required();
  pants_len->add_flag("--oracle", oracle, "compare with the holonomy trace");

  auto* pants_min = app.add_subcommand("pants-min", "minimum of Gamma_{m,n} over a moduli grid");
  int mn_cap = 6, grid = 16;
  double lmax = 3.0;
  pants_min->add_option("--cap", mn_cap, "largest m*n")->capture_default_str();
  pants_min->add_option("--lmax", lmax, "largest boundary length")->capture_default_str();
  pants_min->add_option("--grid", grid, "grid points per boundary length")->capture_default_str();

  auto* winding_cmd = app.add_subcommand("winding", "arc length from a winding number");
  bool use_collar = false, use_cusp = false;
  double wind = 0.0, core = 0.0, width = 0.0;
  auto* collar_flag = winding_cmd->add_flag("--collar", use_collar, "arc in a collar");
  auto* cusp_flag = winding_cmd->add_flag("--cusp", use_cusp, "arc in a cusp neighbourhood");
  collar_flag->excludes(cusp_flag);
  winding_cmd->add_option("--w", wind, "winding number")->required();
  winding_cmd->add_option("--core", core, "core geodesic length (collar)");
  winding_cmd->add_option("--width", width, "distance of the endpoints from the core (collar)");

  auto* verify_cmd = app.add_subcommand("verify", "every analytic check plus the pants oracle comparison");
  std::string verify_out;
  verify_cmd->add_option("--out", verify_out, "write the report here instead of stdout");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "bottom of the length spectrum with self-intersections");
  int max_word_len = 8, k_min = 0;
  double cap = 5.0;
  std::string cache_file, spectrum_out;
  spectrum_cmd->add_option("--max-word-len", max_word_len, "longest word")->capture_default_str();
  spectrum_cmd->add_option("--cap", cap, "largest geodesic length")->capture_default_str();
  spectrum_cmd->add_option("--k", k_min, "least self-intersection number listed")->capture_default_str();
  spectrum_cmd->add_option("--cache", cache_file, "spectrum cache file");
  spectrum_cmd->add_option("--out", spectrum_out, "write the table here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*constants) {
      const auto c = verifier::ConstantsTable::compute();
      Json corkscrews = Json::array();
      for (int k = 1; k <= 6; ++k) corkscrews.push_back({{"k", k}, {"length", verifier::ConstantsTable::corkscrew(k)}});
      Json v{{"M1", c.M1},
             {"M2", c.M2},
             {"gap", c.gap},
             {"case_threshold", verifier::kCaseThreshold},
             {"corkscrew", std::move(corkscrews)}};
      const Report r = verifier::verify_constants();
      out << dump(document("constants", std::move(v), r, *constants));
      return r.passed() ? kSuccess : kCheckFailure;
    }

    if (*collar_cmd) {
      const auto p = collar::CollarProfile::of(collar_length);
      const double gap = collar::hexagon_gap(collar_length);
      Json v{{"core_length", p.core_length},
             {"w", p.w},
             {"w1", p.w1},
             {"w_narrow", p.w_narrow},
             {"narrow_clamped", p.narrow_clamped},
             {"hexagon_gap", gap},
             {"hexagon_gap_residual", std::abs(gap - 2.0 * p.w1)}};
      std::optional<Report> r;
      if (collar_scan) r = suite::collar_identities();
      out << dump(document("collar", std::move(v), r, *collar_cmd));
      return !r || r->passed() ? kSuccess : kCheckFailure;
    }

    if (*pants_len) {
      const pants::PantsBoundary p(l1, l2, l3);
      const pants::CurveClass k(pm, pn);
      const double len = pants::gamma_mn_length(p, k);
      Json v{{"length", len}, {"half_cosh", pants::gamma_mn_half_cosh(p, k)}};
      std::optional<Report> r;
      if (oracle) {
        const double tl = pants::trace_length_oracle(p, k);
        v["trace_length"] = tl;
        v["residual"] = std::abs(len - tl);
        r = Report{"pants_length", {}, {}};
        r->add("formula_matches_trace_oracle", 1e-9 - std::abs(len - tl));
      }
      out << dump(document("pants-length", std::move(v), r, *pants_len));
      return !r || r->passed() ? kSuccess : kCheckFailure;
    }

    if (*pants_min) {
      const auto m = pants::minimize_over_moduli(mn_cap, lmax, grid);
      const double target = verifier::ConstantsTable::compute().M2;
      const bool corkscrew_class = (m.curve.m() == 1 && m.curve.n() == 2) || (m.curve.m() == 2 && m.curve.n() == 1);
      const bool ideal = m.boundary == pants::PantsBoundary::ideal();
      Json v{{"length", m.length},
             {"l1", m.boundary.length(1)},
             {"l2", m.boundary.length(2)},
             {"l3", m.boundary.length(3)},
             {"m", m.curve.m()},
             {"n", m.curve.n()},
             {"min_bound_margin", m.min_bound_margin},
             {"cells", m.cells},
             {"forward_differences", m.forward_differences}};
      Report r{"pants_min", {}, {}};
      r.add("minimum_is_2acosh5", 1e-9 - std::abs(m.length - target), Witness{{"length", m.length}});
      r.add("minimizer_is_ideal_pants", ideal ? 0.0 : -1.0);
      r.add("minimizer_is_corkscrew_class", corkscrew_class ? 0.0 : -1.0);
      r.add("every_cell_meets_2mn_plus_1", m.min_bound_margin + 1e-12, Witness{{"min_margin", m.min_bound_margin}});
      out << dump(document("pants-min", std::move(v), r, *pants_min));
      return r.passed() ? kSuccess : kCheckFailure;
    }

    if (*winding_cmd) {
      if (use_collar == use_cusp) {
        err << "winding: choose exactly one of --collar or --cusp\n";
        return kUsage;
      }
      Json v;
      Report r{"winding", {}, {}};
      if (use_collar) {
        const auto q = winding::CollarArcQuery::make(wind, core, width);
        const double len = winding::collar_arc_length(q);
        const double back = winding::winding_from_length(len, core, width);
        const double oracle_len = winding::saccheri_top_side(q);
        v = {{"arc_length", len},
             {"round_trip_residual", std::abs(back - wind)},
             {"saccheri_length", oracle_len},
             {"oracle_residual", std::abs(len - oracle_len)}};
        r.add("round_trip", 1e-9 - std::abs(back - wind));
        r.add("saccheri_oracle", 1e-9 - std::abs(len - oracle_len));
      } else {
        const auto q = winding::CuspArcQuery::make(wind);
        const double len = winding::cusp_arc_length(q);
        const double back = winding::cusp_winding_from_length(len);
        const double dev = winding::cusp_lemma_deviation(wind);
        v = {{"arc_length", len}, {"round_trip_residual", std::abs(back - wind)}, {"oracle_residual", dev}};
        r.add("round_trip", 1e-9 - std::abs(back - wind));
        r.add("distance_oracle", 1e-12 - dev);
      }
      out << dump(document("winding", std::move(v), r, *winding_cmd));
      return r.passed() ? kSuccess : kCheckFailure;
    }

    if (*verify_cmd) {
      const Report r = suite::run_verify();
      write_text(dump(document("verify", Json::object(), r, *verify_cmd)), verify_out, out);
      return r.passed() ? kSuccess : kCheckFailure;
    }

    if (*spectrum_cmd) {
      std::optional<std::filesystem::path> cache;
      if (!cache_file.empty()) cache = cache_file;
      const auto entries = spectrum::cached(max_word_len, cap, spectrum::Options{}, cache);
      std::ostringstream table;
      table << "word\ttrace\tlength\tcount\tmethod\n";
      for (const auto& e : spectrum::constrained(entries, k_min)) table << spectrum::format_row(e) << '\n';
      write_text(table.str(), spectrum_out, out);
      return kSuccess;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NonPositiveLength& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailure;
  }
  return kUsage;
}

}  // namespace geodesics::cli
