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

#ifndef RUINKIT_ERRORS_HPP
#define RUINKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ruinkit {

/// Structured error codes. Every failure raised by the library carries one
/// of these so callers (and the CLI exit-code mapping) can branch on the
/// violated contract rather than on message text.
enum class errc {
  // phase-type validation
  non_stochastic_alpha,
  not_sub_generator,
  not_transient,
  negative_argument,
  singular_resolvent,
  non_finite,
  bad_weights,
  bad_rate,
  // one-dimensional ruin
  net_profit_violated,
  ill_conditioned,
  incomplete_spectral_data,
  root_residual_too_large,
  // two-dimensional model
  degenerate_share,
  regime_one_dimensional,
  not_exponential,
  bad_sample_size,
  // monte carlo
  horizon_not_converged,
  negative_intensity,
  insufficient_data,
  // fitting
  empty_data,
  degenerate_u,
  optimizer_failed,
  empty_component,
  ill_posed,
  bad_data,
  // cli / io
  missing_artifact,
  bad_config,
  io_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace ruinkit

#endif
