// Copyright 2026 The odorqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "odorqa/analysis.hpp"
#include "odorqa/distmatrix.hpp"
#include "odorqa/errors.hpp"
#include "odorqa/expr.hpp"
#include "odorqa/maps.hpp"
#include "odorqa/rqa.hpp"
#include "output.hpp"

namespace odo::cli {
namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw DomainError("cannot open " + path + " for writing");
  return f;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json approx_json(const ApproxValue& v) {
  return Json{{"value", number(v.exact)},
              {"error_radius", number(v.error_radius)},
              {"k_used", v.k_used}};
}

// ---------------------------------------------------------------------------

struct OrbitOpts {
  std::string alpha;
  std::string word;
  std::optional<double> x0;
  std::optional<int> periodic;
  std::string map = "f";
  std::optional<int> k;
  uint64_t n = 16;
  bool exact = false;
};

int cmd_orbit(const OrbitOpts& o, std::ostream& out) {
  const Alpha a = Alpha::parse(o.alpha);
  const int seeds = !o.word.empty() + o.x0.has_value() + o.periodic.has_value();
  if (seeds != 1) {
    throw DomainError("give exactly one of --word, --x0, --periodic");
  }
  if (o.map != "f" && o.map != "fk") throw DomainError("--map must be f or fk");
  if (o.map == "fk" && !o.k) throw DomainError("--map fk needs --k");
  if (o.k && (*o.k < 0 || *o.k > Alpha::kMaxPower)) {
    throw DomainError("--k out of range");
  }

  RunConfig cfg("orbit");
  cfg.add("alpha", a.str());
  cfg.add("map", o.map);
  if (o.map == "fk") cfg.add("k", std::to_string(*o.k));
  std::optional<Word> word;
  double x0 = 0.0;
  if (!o.word.empty()) {
    word = Word::parse(o.word);
    cfg.add("word", word->str());
    x0 = kappa(*word).to_double(a);
  } else if (o.x0) {
    if (!(*o.x0 >= 0.0 && *o.x0 <= 1.0)) throw DomainError("x0 must lie in [0, 1]");
    x0 = *o.x0;
    cfg.add("x0", decimal(x0));
  } else {
    x0 = periodic_point(a, *o.periodic);
    cfg.add("periodic", std::to_string(*o.periodic));
  }
  cfg.add("n", std::to_string(o.n));
  cfg.add("exact", o.exact ? "true" : "false");

  out << "# " << header_line(cfg) << "\n";
  out << "iter,x\n";
  if (o.exact) {
    if (o.map != "fk" || !word) {
      throw DomainError("--exact needs --map fk and a --word seed");
    }
    const ApproxMap g(a, *o.k);
    Rational x = kappa(*word).to_rational(a);
    for (uint64_t i = 0; i < o.n; ++i) {
      out << i << "," << rational_str(x) << "\n";
      x = g.eval_exact(x);
    }
    return kExitOk;
  }
  std::function<double(double)> g;
  if (o.map == "f") {
    g = DelahayeMap(a);
  } else {
    g = ApproxMap(a, *o.k);
  }
  double x = x0;
  for (uint64_t i = 0; i < o.n; ++i) {
    out << i << "," << decimal(x) << "\n";
    x = g(x);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct MatrixOpts {
  int k = 0;
  std::string alpha;
  std::string ell = "1";
  std::string eps;
  std::string pbm;
  bool naive = false;
};

int cmd_matrix(const MatrixOpts& o, std::ostream& out) {
  const Alpha a = Alpha::parse(o.alpha);
  const Ell ell = Ell::parse(o.ell);
  const ExactDistance eps = parse_eps(o.eps);
  RunConfig cfg("matrix");
  cfg.add("k", std::to_string(o.k));
  cfg.add("alpha", a.str());
  cfg.add("ell", ell.str());
  cfg.add("eps", eps.str());
  cfg.add("method", o.naive ? "naive" : "fast");
  if (!o.pbm.empty()) cfg.add("pbm", o.pbm);
  const DistanceMatrix m =
      o.naive ? build_matrix_naive(o.k, a, ell, eps) : build_matrix(o.k, a, ell, eps);
  if (!o.pbm.empty()) {
    auto f = open_out(o.pbm);
    write_pbm(f, m, header_line(cfg));
  }
  const uint64_t ones = m.ones();
  Json j;
  j["header"] = header_line(cfg);
  j["k"] = o.k;
  j["alpha"] = a.str();
  j["ell"] = ell.str();
  j["eps"] = eps_json(eps, a);
  j["ones_count"] = ones;
  j["density"] = number(Rational(BigInt(ones), BigInt(1) << (2 * o.k)));
  if (!o.pbm.empty()) j["pbm"] = o.pbm;
  emit(out, j);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct IntegralOpts {
  std::string alpha;
  std::string ell = "1";
  std::string eps;
  double tol = 0.01;
  std::string quantity = "c";
  std::optional<int> k;
};

int cmd_integral(const IntegralOpts& o, std::ostream& out) {
  const Alpha a = Alpha::parse(o.alpha);
  const Ell ell = Ell::parse(o.ell);
  const ExactDistance eps = parse_eps(o.eps);
  if (o.quantity != "c" && o.quantity != "det") {
    throw DomainError("--quantity must be c or det");
  }
  if (o.quantity == "det" && !ell.is_inf()) {
    throw DomainError("--quantity det is the infinite horizon; use --ell inf");
  }
  RunConfig cfg("integral");
  cfg.add("alpha", a.str());
  cfg.add("ell", ell.str());
  cfg.add("eps", eps.str());
  cfg.add("quantity", o.quantity);
  if (o.k) {
    cfg.add("k", std::to_string(*o.k));
  } else {
    cfg.add("tol", decimal(o.tol));
  }
  Json j;
  j["header"] = header_line(cfg);
  j["quantity"] = o.quantity;
  j["alpha"] = a.str();
  j["ell"] = ell.str();
  j["eps"] = eps_json(eps, a);
  if (o.k) {
    // The exact value for f_{alpha,k}; no approximation involved.
    const Rational v = o.quantity == "c" ? corr_integral_fk(a, *o.k, ell, eps)
                                         : det_inf_fk(a, *o.k, eps);
    j["map"] = "f_k";
    j["value"] = number(v);
    j["error_radius"] = number(0.0);
    j["k_used"] = *o.k;
  } else {
    const ApproxValue v = o.quantity == "c" ? corr_integral_f(a, ell, eps, o.tol)
                                            : det_inf_f(a, eps, o.tol);
    j["map"] = "f";
    j.update(approx_json(v));
  }
  emit(out, j);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ProfileOpts {
  std::string alpha;
  int points = 512;
  double tol = 0.01;
  std::string svg;
  std::string csv;
};

Json point_json(const ProfilePoint& p, const Alpha& a) {
  Json j{{"eps", eps_json(p.eps, a)}};
  j.update(approx_json(p.det));
  if (!p.label.empty()) j["label"] = p.label;
  return j;
}

int cmd_profile(const ProfileOpts& o, std::ostream& out) {
  const Alpha a = Alpha::parse(o.alpha);
  RunConfig cfg("profile");
  cfg.add("alpha", a.str());
  cfg.add("points", std::to_string(o.points));
  cfg.add("tol", decimal(o.tol));
  if (!o.svg.empty()) cfg.add("svg", o.svg);
  if (!o.csv.empty()) cfg.add("csv", o.csv);
  const DetProfile p = det_profile(a, o.points, o.tol);
  if (!o.csv.empty()) {
    auto f = open_out(o.csv);
    f << "# " << header_line(cfg) << "\n";
    write_profile_csv(f, p);
  }
  if (!o.svg.empty()) {
    auto f = open_out(o.svg);
    f << "<!-- " << header_line(cfg) << " -->\n";
    write_profile_svg(f, p, "det_inf(eps), alpha = " + a.str());
  }
  size_t lo = 0, hi = 0;
  for (size_t i = 0; i < p.points.size(); ++i) {
    if (p.points[i].det.value < p.points[lo].det.value) lo = i;
    if (p.points[i].det.value > p.points[hi].det.value) hi = i;
  }
  Json j;
  j["header"] = header_line(cfg);
  j["alpha"] = a.str();
  j["s"] = p.s;
  j["domain"] = Json{{"lower_exclusive", eps_json(ExactDistance::alpha_power(p.s + 1), a)},
                     {"upper", eps_json(ExactDistance::alpha_power(p.s), a)}};
  j["points"] = p.points.size();
  j["min"] = point_json(p.points[lo], a);
  j["max"] = point_json(p.points[hi], a);
  Json crit = Json::array();
  for (const auto& pt : p.points) {
    if (pt.critical) crit.push_back(point_json(pt, a));
  }
  j["critical"] = crit;
  if (!o.csv.empty()) j["csv"] = o.csv;
  if (!o.svg.empty()) j["svg"] = o.svg;
  emit(out, j);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ExtremesOpts {
  std::string alpha;
  double tol = 0.01;
  int points = 512;
};

int cmd_extremes(const ExtremesOpts& o, std::ostream& out) {
  const Alpha a = Alpha::parse(o.alpha);
  RunConfig cfg("extremes");
  cfg.add("alpha", a.str());
  cfg.add("tol", decimal(o.tol));
  cfg.add("points", std::to_string(o.points));
  const DetExtremes ex = det_extremes(a, o.tol, o.points);
  Json ut{{"eps", eps_json(ex.argmin, a)}};
  ut.update(approx_json(ex.utdet));
  Json ot{{"eps", eps_json(ex.argmax, a)}};
  ot.update(approx_json(ex.otdet));
  ot["grid_estimate"] = ex.otdet_grid_estimate;
  Json j;
  j["header"] = header_line(cfg);
  j["alpha"] = a.str();
  j["s"] = fundamental_index(a);
  j["utdet"] = ut;
  j["otdet"] = ot;
  emit(out, j);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ScanOpts {
  double target = 0.0;
  double tol = 0.005;
};

int cmd_scan(const ScanOpts& o, std::ostream& out) {
  RunConfig cfg("scan-alpha");
  cfg.add("target", decimal(o.target));
  cfg.add("tol", decimal(o.tol));
  const AlphaScan s = find_alpha_for_liminf(o.target, o.tol);
  Json grid = Json::array();
  for (const auto& g : s.grid) {
    grid.push_back(Json{{"alpha", g.alpha.str()},
                        {"utdet", decimal(g.utdet)},
                        {"error_radius", decimal(g.radius)}});
  }
  Json j;
  j["header"] = header_line(cfg);
  j["target"] = number(o.target);
  j["alpha"] = Json{{"decimal", decimal(s.alpha.value())},
                    {"rational", s.alpha.str()}};
  j["utdet"] = approx_json(s.utdet);
  j["utdet"]["eps"] = eps_json(utdet_eps(s.alpha), s.alpha);
  j["bisection_steps"] = s.bisection_steps;
  j["grid"] = grid;
  emit(out, j);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyOpts {
  int k = 0;
  std::string alpha;
  std::string eps;
};

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
  const Alpha a = Alpha::parse(o.alpha);
  const ExactDistance eps = parse_eps(o.eps);
  RunConfig cfg("verify");
  cfg.add("k", std::to_string(o.k));
  cfg.add("alpha", a.str());
  cfg.add("eps", eps.str());
  const DistanceMatrix m = build_matrix(o.k, a, Ell::finite(1), eps);
  const PatternReport r = verify_patterns(m);
  Json pats;
  for (Pattern p : kAllPatterns) {
    Json pj{{"holds", r.ok(p)}};
    const auto& v = r.first_violation[static_cast<int>(p)];
    if (v) {
      pj["first_violation"] = Json{{"i", v->i}, {"j", v->j},
                                   {"bad_i", v->bad_i}, {"bad_j", v->bad_j}};
    }
    pats[std::string(pattern_name(p))] = pj;
  }
  Json j;
  j["header"] = header_line(cfg);
  j["k"] = o.k;
  j["alpha"] = a.str();
  j["eps"] = eps_json(eps, a);
  j["ones_count"] = m.ones();
  j["patterns"] = pats;
  j["all_pass"] = r.all();
  emit(out, j);
  return r.all() ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------

struct BenchOpts {
  int k_min = 4;
  int k_max = 12;
  std::string alpha = "1/3";
  std::string eps = "a";
  std::string ell = "inf";
};

inline constexpr int kNaiveCap = 12;

int cmd_bench(const BenchOpts& o, std::ostream& out) {
  const Alpha a = Alpha::parse(o.alpha);
  const ExactDistance eps = parse_eps(o.eps);
  const Ell ell = Ell::parse(o.ell);
  if (o.k_min < 1 || o.k_max < o.k_min) throw DomainError("need 1 <= k-min <= k-max");
  RunConfig cfg("bench");
  cfg.add("k_min", std::to_string(o.k_min));
  cfg.add("k_max", std::to_string(o.k_max));
  cfg.add("alpha", a.str());
  cfg.add("eps", eps.str());
  cfg.add("ell", ell.str());
  using Clock = std::chrono::steady_clock;
  auto ms = [](Clock::duration d) {
    return std::chrono::duration<double, std::milli>(d).count();
  };
  out << "# " << header_line(cfg) << "\n";
  out << "k,naive_ms,fast_ms,naive_count,fast_count,equal\n";
  bool all_equal = true;
  for (int k = o.k_min; k <= o.k_max; ++k) {
    auto t0 = Clock::now();
    const uint64_t fast = pair_count(k, a, ell, eps);
    const double fast_ms = ms(Clock::now() - t0);
    if (k > kNaiveCap) {
      out << k << ",refused," << decimal(fast_ms) << ",," << fast << ",refused\n";
      continue;
    }
    t0 = Clock::now();
    const uint64_t naive = close_pair_count_brute(k, a, ell, eps);
    const double naive_ms = ms(Clock::now() - t0);
    const bool eq = naive == fast;
    all_equal = all_equal && eq;
    out << k << "," << decimal(naive_ms) << "," << decimal(fast_ms) << ","
        << naive << "," << fast << "," << (eq ? "yes" : "no") << "\n";
  }
  return all_equal ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Correlation integrals and determinism for the maps f_alpha"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  OrbitOpts orbit;
  auto* so = app.add_subcommand("orbit", "Iterate f or f_k; CSV iter,x");
  so->add_option("--alpha", orbit.alpha, "p/q or decimal in (0, 1/2)")->required();
  so->add_option("--word", orbit.word, "seed kappa(u 0^inf) for a binary word u");
  so->add_option("--x0", orbit.x0, "raw seed in [0, 1]");
  so->add_option("--periodic", orbit.periodic, "seed the period-2^k point");
  so->add_option("--map", orbit.map, "f or fk")->capture_default_str();
  so->add_option("--k", orbit.k, "k for --map fk");
  so->add_option("--n", orbit.n, "number of iterates")->capture_default_str();
  so->add_flag("--exact", orbit.exact, "exact rationals (fk with --word)");

  MatrixOpts matrix;
  auto* sm = app.add_subcommand("matrix", "Distance matrix D_k; JSON summary, optional PBM");
  sm->add_option("--k", matrix.k)->required();
  sm->add_option("--alpha", matrix.alpha)->required();
  sm->add_option("--ell", matrix.ell, "positive integer or inf")->capture_default_str();
  sm->add_option("--eps", matrix.eps, "expression in a")->required();
  sm->add_option("--pbm", matrix.pbm, "write the bit image here");
  sm->add_flag("--naive", matrix.naive, "entrywise reference fill");

  IntegralOpts integral;
  auto* si = app.add_subcommand("integral", "Certified c_l or det_inf of f; JSON");
  si->add_option("--alpha", integral.alpha)->required();
  si->add_option("--ell", integral.ell)->capture_default_str();
  si->add_option("--eps", integral.eps)->required();
  si->add_option("--tol", integral.tol)->capture_default_str();
  si->add_option("--quantity", integral.quantity, "c or det")->capture_default_str();
  si->add_option("--k", integral.k, "exact value for f_k instead");

  ProfileOpts profile;
  auto* sp = app.add_subcommand("profile", "det_inf over one fundamental domain");
  sp->add_option("--alpha", profile.alpha)->required();
  sp->add_option("--points", profile.points)->capture_default_str();
  sp->add_option("--tol", profile.tol)->capture_default_str();
  sp->add_option("--svg", profile.svg);
  sp->add_option("--csv", profile.csv);

  ExtremesOpts extremes;
  auto* se = app.add_subcommand("extremes", "utdet and otdet for one alpha");
  se->add_option("--alpha", extremes.alpha)->required();
  se->add_option("--tol", extremes.tol)->capture_default_str();
  se->add_option("--points", extremes.points)->capture_default_str();

  ScanOpts scan;
  auto* ss = app.add_subcommand("scan-alpha", "alpha with utdet(alpha) = target");
  ss->add_option("--target", scan.target)->required();
  ss->add_option("--tol", scan.tol)->capture_default_str();

  VerifyOpts verify;
  auto* sv = app.add_subcommand("verify", "Check the six patterns on D_k(eps)");
  sv->add_option("--k", verify.k)->required();
  sv->add_option("--alpha", verify.alpha)->required();
  sv->add_option("--eps", verify.eps)->required();

  BenchOpts bench;
  auto* sb = app.add_subcommand("bench", "Brute force vs fast pair counts");
  sb->add_option("--k-min", bench.k_min)->capture_default_str();
  sb->add_option("--k-max", bench.k_max)->capture_default_str();
  sb->add_option("--alpha", bench.alpha)->capture_default_str();
  sb->add_option("--eps", bench.eps)->capture_default_str();
  sb->add_option("--ell", bench.ell)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDomain;
  }

  try {
    if (*so) return cmd_orbit(orbit, out);
    if (*sm) return cmd_matrix(matrix, out);
    if (*si) return cmd_integral(integral, out);
    if (*sp) return cmd_profile(profile, out);
    if (*se) return cmd_extremes(extremes, out);
    if (*ss) return cmd_scan(scan, out);
    if (*sv) return cmd_verify(verify, out);
    if (*sb) return cmd_bench(bench, out);
  } catch (const ToleranceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitTolerance;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const CapError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitDomain;
}

int run(int argc, const char* const* argv) {
  return run(argc, argv, std::cout, std::cerr);
}

}  // namespace odo::cli
