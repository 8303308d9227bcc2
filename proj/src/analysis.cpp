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

#include "odorqa/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iomanip>
#include <sstream>

#include "odorqa/errors.hpp"

namespace odo {
namespace {

// alpha^{s+1} + 2 alpha - 1 <= 0, i.e. alpha^s <= (1 - 2 alpha) / alpha.
bool within_self_similar_range(const Alpha& alpha, const ExactDistance& e) {
  // e <= (1 - 2a)/a  <=>  a e <= 1 - 2a.
  return less_equal(e.times_alpha_power(1),
                    ExactDistance(std::vector<int64_t>{1, -2}), alpha);
}

std::vector<ProfilePoint> profile_grid(const Alpha& alpha, int s,
                                       int grid_size) {
  if (grid_size < 2) throw DomainError("grid_size must be >= 2");
  std::vector<ProfilePoint> pts;
  const double lo = std::log(alpha.pow(s + 1));
  const double hi = std::log(alpha.pow(s));
  for (int i = 1; i < grid_size; ++i) {
    ProfilePoint p;
    p.eps = ExactDistance::from_double(
        std::exp(lo + (hi - lo) * static_cast<double>(i) / grid_size));
    pts.push_back(p);
  }
  ProfilePoint top;
  top.eps = ExactDistance::alpha_power(s);
  top.critical = true;
  top.label = "a^s";
  pts.push_back(top);
  ProfilePoint mid;
  mid.eps = utdet_eps(alpha);
  mid.critical = true;
  mid.label = "a^s-a^(s+2)";
  pts.push_back(mid);
  for (auto& p : pts) p.eps_value = p.eps.to_double(alpha);
  std::sort(pts.begin(), pts.end(),
            [](const ProfilePoint& a, const ProfilePoint& b) {
              return a.eps_value < b.eps_value;
            });
  return pts;
}

DetProfile profile_impl(const Alpha& alpha, int grid_size, double tol,
                        int max_k, bool parallel) {
  DetProfile prof;
  prof.alpha = alpha;
  prof.s = fundamental_index(alpha);
  prof.points = profile_grid(alpha, prof.s, grid_size);
  const int64_t n = static_cast<int64_t>(prof.points.size());
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int64_t i = 0; i < n; ++i) {
    try {
      prof.points[i].det = det_inf_f(alpha, prof.points[i].eps, tol, max_k);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return prof;
}

}  // namespace

int fundamental_index(const Alpha& alpha) {
  int s = 0;
  while (!within_self_similar_range(alpha, ExactDistance::alpha_power(s))) {
    ++s;
  }
  return s;
}

ReducedEps reduce_eps(const Alpha& alpha, const ExactDistance& eps) {
  if (eps.sign(alpha) <= 0 ||
      compare(eps, ExactDistance::constant(1), alpha) > 0) {
    throw DomainError("eps must lie in (0, 1]");
  }
  ReducedEps r;
  r.s = fundamental_index(alpha);
  r.eps = eps;
  const ExactDistance top = ExactDistance::alpha_power(r.s);
  const ExactDistance bottom = ExactDistance::alpha_power(r.s + 1);
  while (compare(r.eps, top, alpha) > 0) {
    if (!within_self_similar_range(alpha, r.eps)) r.invariant = false;
    r.eps = r.eps.times_alpha_power(1);
    ++r.shift;
  }
  while (compare(r.eps, bottom, alpha) <= 0) {
    r.eps = r.eps.divided_by_alpha(alpha);
    --r.shift;
  }
  return r;
}

ExactDistance utdet_eps(const Alpha& alpha) {
  const int s = fundamental_index(alpha);
  return ExactDistance::alpha_power(s) - ExactDistance::alpha_power(s + 2);
}

DetProfile det_profile(const Alpha& alpha, int grid_size, double tol,
                       int max_k) {
  return profile_impl(alpha, grid_size, tol, max_k, true);
}

DetProfile det_profile_serial(const Alpha& alpha, int grid_size, double tol,
                              int max_k) {
  return profile_impl(alpha, grid_size, tol, max_k, false);
}

void write_profile_csv(std::ostream& os, const DetProfile& p) {
  os << "eps,det,err\n";
  os << std::setprecision(17);
  for (const auto& pt : p.points) {
    os << pt.eps_value << "," << pt.det.value << "," << pt.det.error_radius
       << "\n";
  }
}

void write_profile_svg(std::ostream& os, const DetProfile& p,
                       std::string_view title) {
  constexpr double kW = 640, kH = 400, kL = 70, kR = 20, kT = 40, kB = 50;
  const double y_lo = 0.3, y_hi = 1.05;
  const double x_lo = std::log10(p.points.front().eps_value);
  const double x_hi = std::log10(p.points.back().eps_value);
  auto X = [&](double eps) {
    return kL + (std::log10(eps) - x_lo) / (x_hi - x_lo) * (kW - kL - kR);
  };
  auto Y = [&](double v) {
    v = std::clamp(v, y_lo, y_hi);
    return kT + (y_hi - v) / (y_hi - y_lo) * (kH - kT - kB);
  };
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW
     << "\" height=\"" << kH << "\" font-family=\"sans-serif\" "
     << "font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kW / 2 << "\" y=\"22\" text-anchor=\"middle\">"
     << title << "</text>\n";
  // Axes.
  os << "<line x1=\"" << kL << "\" y1=\"" << kH - kB << "\" x2=\"" << kW - kR
     << "\" y2=\"" << kH - kB << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << kL << "\" y1=\"" << kT << "\" x2=\"" << kL
     << "\" y2=\"" << kH - kB << "\" stroke=\"black\"/>\n";
  for (double v : {1.0 / 3.0, 0.5, 8.0 / 15.0, 0.75, 1.0}) {
    os << "<line x1=\"" << kL - 4 << "\" y1=\"" << Y(v) << "\" x2=\"" << kL
       << "\" y2=\"" << Y(v) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << kL - 8 << "\" y=\"" << Y(v) + 4
       << "\" text-anchor=\"end\">" << std::setprecision(3) << v
       << std::setprecision(2) << "</text>\n";
  }
  for (const auto& pt : {p.points.front(), p.points.back()}) {
    os << "<text x=\"" << X(pt.eps_value) << "\" y=\"" << kH - kB + 18
       << "\" text-anchor=\"middle\">" << std::setprecision(4) << pt.eps_value
       << std::setprecision(2) << "</text>\n";
  }
  os << "<text x=\"" << (kL + kW - kR) / 2 << "\" y=\"" << kH - 12
     << "\" text-anchor=\"middle\">eps (log scale)</text>\n";
  os << "<text x=\"18\" y=\"" << (kT + kH - kB) / 2
     << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
     << (kT + kH - kB) / 2 << ")\">det_inf</text>\n";
  // Certified band, then the curve.
  os << "<polygon fill=\"#cfe0f5\" stroke=\"none\" points=\"";
  for (const auto& pt : p.points) {
    os << X(pt.eps_value) << "," << Y(pt.det.value + pt.det.error_radius)
       << " ";
  }
  for (auto it = p.points.rbegin(); it != p.points.rend(); ++it) {
    os << X(it->eps_value) << "," << Y(it->det.value - it->det.error_radius)
       << " ";
  }
  os << "\"/>\n";
  os << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" "
        "points=\"";
  for (const auto& pt : p.points) {
    os << X(pt.eps_value) << "," << Y(pt.det.value) << " ";
  }
  os << "\"/>\n";
  for (const auto& pt : p.points) {
    if (!pt.critical) continue;
    os << "<circle cx=\"" << X(pt.eps_value) << "\" cy=\"" << Y(pt.det.value)
       << "\" r=\"3\" fill=\"#c0392b\"/>\n";
  }
  os << "</svg>\n";
}

ApproxValue utdet(const Alpha& alpha, double tol, int max_k) {
  return det_inf_f(alpha, utdet_eps(alpha), tol, max_k);
}

DetExtremes det_extremes(const Alpha& alpha, double tol, int grid_size,
                         int max_k) {
  DetExtremes ex;
  const int s = fundamental_index(alpha);
  ex.argmin = utdet_eps(alpha);
  ex.utdet = det_inf_f(alpha, ex.argmin, tol, max_k);
  if (3 * alpha.num() <= alpha.den()) {
    ex.argmax = ExactDistance::alpha_power(s);
    ex.otdet = det_inf_f(alpha, ex.argmax, tol, max_k);
    return ex;
  }
  ex.otdet_grid_estimate = true;
  DetProfile prof = det_profile(alpha, grid_size, tol, max_k);
  size_t best = 0;
  for (size_t i = 1; i < prof.points.size(); ++i) {
    if (prof.points[i].det.value > prof.points[best].det.value) best = i;
  }
  ex.otdet = prof.points[best].det;
  ex.argmax = prof.points[best].eps;
  // Refine between the neighbours of the best grid point.
  const double lo = prof.points[best == 0 ? 0 : best - 1].eps_value;
  const double hi =
      prof.points[std::min(best + 1, prof.points.size() - 1)].eps_value;
  constexpr int kRefine = 32;
  std::vector<ExactDistance> eps(kRefine);
  std::vector<ApproxValue> val(kRefine);
  for (int i = 0; i < kRefine; ++i) {
    eps[i] = ExactDistance::from_double(
        lo * std::pow(hi / lo, (i + 0.5) / kRefine));
  }
  std::vector<std::exception_ptr> errors(kRefine);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < kRefine; ++i) {
    try {
      val[i] = det_inf_f(alpha, eps[i], tol, max_k);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (int i = 0; i < kRefine; ++i) {
    if (val[i].value > ex.otdet.value) {
      ex.otdet = val[i];
      ex.argmax = eps[i];
    }
  }
  return ex;
}

AlphaScan find_alpha_for_liminf(double target, double tol, int max_k) {
  if (!(target > 1.0 / 3.0 && target <= 8.0 / 15.0 + tol)) {
    throw DomainError("target must lie in (1/3, 8/15]");
  }
  if (!(tol > 0.0)) throw DomainError("tol must be positive");
  // Inner evaluations carry radius tol/8 and stop within tol/4 of the
  // target, so an independent recomputation at tol/2 stays within tol.
  const double inner = tol / 8.0;
  const double accept = tol / 4.0;

  // Numerators over a common denominator that doubles with each bisection.
  std::vector<int64_t> nums;
  for (int64_t a = 300; a <= 495; a += 5) nums.push_back(a * 2);
  for (int64_t a : {994, 996, 997, 998, 999}) nums.push_back(a);
  int64_t den = 2000;

  AlphaScan scan;
  scan.grid.resize(nums.size());
  std::vector<ApproxValue> vals(nums.size());
  std::vector<std::exception_ptr> errors(nums.size());
#pragma omp parallel for schedule(dynamic)
  for (int64_t i = 0; i < static_cast<int64_t>(nums.size()); ++i) {
    try {
      Alpha a(nums[i], den);
      vals[i] = utdet(a, inner, max_k);
      scan.grid[i] = AlphaScanSample{a, vals[i].value, vals[i].error_radius};
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (size_t i = 0; i < nums.size(); ++i) {
    if (std::fabs(vals[i].value - target) <= accept) {
      scan.alpha = Alpha(nums[i], den);
      scan.utdet = vals[i];
      return scan;
    }
  }
  size_t bracket = nums.size();
  for (size_t i = 0; i + 1 < nums.size(); ++i) {
    if ((vals[i].value - target) * (vals[i + 1].value - target) < 0.0) {
      bracket = i;
      break;
    }
  }
  if (bracket == nums.size()) {
    std::ostringstream os;
    os << "no sign change of utdet - " << target << " on the alpha grid:";
    for (const auto& g : scan.grid) {
      os << " " << g.alpha.str() << "=" << g.utdet;
    }
    throw ToleranceError(os.str(), INFINITY, max_k);
  }

  int64_t lo = nums[bracket];
  int64_t hi = nums[bracket + 1];
  double f_lo = vals[bracket].value - target;
  for (int step = 0; step < 36; ++step) {
    lo *= 2;
    hi *= 2;
    den *= 2;
    const int64_t mid = (lo + hi) / 2;
    Alpha a(mid, den);
    ApproxValue v = utdet(a, inner, max_k);
    scan.bisection_steps = step + 1;
    scan.alpha = a;
    scan.utdet = v;
    const double f_mid = v.value - target;
    if (std::fabs(f_mid) <= accept) return scan;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return scan;
}

}  // namespace odo
