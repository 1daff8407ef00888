/*
 * Copyright 2026 the ruinkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RUINKIT_ESTIMATE_HPP
#define RUINKIT_ESTIMATE_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace ruinkit {

/// Point estimate of a probability with its uncertainty. Monte Carlo
/// producers always fill stderr and the confidence interval; analytic
/// producers report stderr 0.
struct RuinEstimate {
  double value = 0.0;
  double std_error = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double ci_level = 0.95;
  std::string method = "analytic";  // analytic | mc | hybrid
  std::uint64_t paths = 0;
  std::optional<double> truncation_bound;
  /// Value before clamping to [0, 1] when a combined estimator can drift
  /// slightly outside.
  std::optional<double> raw_value;
};

/// Two-sided normal quantile for a confidence level in (0, 1).
double normal_quantile_two_sided(double level);

/// Builds an estimate from a mean, a standard error and a path count,
/// clamping value and interval to [0, 1].
RuinEstimate make_probability_estimate(double mean, double std_error,
                                       std::uint64_t paths, double ci_level,
                                       const std::string& method);

}  // namespace ruinkit

#endif
