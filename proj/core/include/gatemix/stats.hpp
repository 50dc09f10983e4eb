// Copyright 2026 The gatemix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GATEMIX_STATS_HPP_
#define GATEMIX_STATS_HPP_

#include <span>
#include <vector>

namespace gatemix {

double mean(std::span<const double> xs);
double rms(std::span<const double> xs);

// Standard error of the sample mean (unbiased sample variance / n).
double stderr_of_mean(std::span<const double> xs);

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;      // log10 scale
  double slope_stderr = 0.0;
  double slope_ci95 = 0.0;     // half-width, Student-t
  int points_used = 0;
};

// Least squares on log10(x) vs log10(y).  Points with y below `noise_floor`
// are excluded from the fit window.
LogLogFit fit_loglog(std::span<const double> xs, std::span<const double> ys,
                     double noise_floor = 1e-12);

}  // namespace gatemix

#endif  // GATEMIX_STATS_HPP_
