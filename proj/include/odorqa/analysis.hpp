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

// det_inf as a function of eps over one fundamental domain, its extremes,
// and inversion of the liminf over alpha.

#ifndef ODORQA_ANALYSIS_HPP_
#define ODORQA_ANALYSIS_HPP_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "odorqa/exact.hpp"
#include "odorqa/rqa.hpp"

namespace odo {

// Smallest s >= 0 with alpha^s <= (1 - 2 alpha) / alpha.
int fundamental_index(const Alpha& alpha);

struct ReducedEps {
  ExactDistance eps;  // in (alpha^{s+1}, alpha^s]
  int shift = 0;      // eps_in = eps * alpha^shift
  int s = 0;
  // False if some step multiplied an eps above (1 - 2 alpha) / alpha, where
  // only det_inf(alpha eps) <= det_inf(eps) is guaranteed.
  bool invariant = true;
};

// Requires 0 < eps <= 1.
ReducedEps reduce_eps(const Alpha& alpha, const ExactDistance& eps);

// alpha^s - alpha^{s+2}, where the minimum of each fundamental domain sits.
ExactDistance utdet_eps(const Alpha& alpha);

struct ProfilePoint {
  ExactDistance eps;
  double eps_value = 0.0;
  ApproxValue det;
  bool critical = false;
  std::string label;  // "min", "max" or empty
};

struct DetProfile {
  Alpha alpha{1, 3};
  int s = 0;
  std::vector<ProfilePoint> points;  // ascending in eps
};

// grid_size log-spaced points in (alpha^{s+1}, alpha^s] plus the two
// critical points. Points are evaluated in parallel.
DetProfile det_profile(const Alpha& alpha, int grid_size, double tol,
                       int max_k = default_max_k());
// Same grid evaluated on one thread; reference for det_profile.
DetProfile det_profile_serial(const Alpha& alpha, int grid_size, double tol,
                              int max_k = default_max_k());

// eps,det,err rows.
void write_profile_csv(std::ostream& os, const DetProfile& p);
// One polyline over log eps with axis labels and the certified band.
void write_profile_svg(std::ostream& os, const DetProfile& p,
                       std::string_view title);

struct DetExtremes {
  ApproxValue utdet;
  ApproxValue otdet;
  ExactDistance argmin;
  ExactDistance argmax;
  bool otdet_grid_estimate = false;  // alpha > 1/3: maximum of a grid
};

ApproxValue utdet(const Alpha& alpha, double tol, int max_k = default_max_k());
DetExtremes det_extremes(const Alpha& alpha, double tol, int grid_size = 512,
                         int max_k = default_max_k());

struct AlphaScanSample {
  Alpha alpha{1, 3};
  double utdet = 0.0;
  double radius = 0.0;
};

struct AlphaScan {
  Alpha alpha{1, 3};
  ApproxValue utdet;
  std::vector<AlphaScanSample> grid;
  int bisection_steps = 0;
};

// Grid scan of utdet(alpha) - target for a sign change, then bisection.
// Only continuity of utdet is used. Throws ToleranceError (carrying the
// grid in the message) when no bracket exists.
AlphaScan find_alpha_for_liminf(double target, double tol,
                                int max_k = default_max_k());

}  // namespace odo

#endif  // ODORQA_ANALYSIS_HPP_
