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

#include "ruinkit/errors.hpp"

namespace ruinkit {

const char* errc_name(errc code) {
  switch (code) {
    case errc::non_stochastic_alpha: return "NonStochasticAlpha";
    case errc::not_sub_generator: return "NotSubGenerator";
    case errc::not_transient: return "NotTransient";
    case errc::negative_argument: return "NegativeArgument";
    case errc::singular_resolvent: return "SingularResolvent";
    case errc::non_finite: return "NonFinite";
    case errc::bad_weights: return "BadWeights";
    case errc::bad_rate: return "BadRate";
    case errc::net_profit_violated: return "NetProfitViolated";
    case errc::ill_conditioned: return "IllConditioned";
    case errc::incomplete_spectral_data: return "IncompleteSpectralData";
    case errc::root_residual_too_large: return "RootResidualTooLarge";
    case errc::degenerate_share: return "DegenerateShare";
    case errc::regime_one_dimensional: return "RegimeOneDimensional";
    case errc::not_exponential: return "NotExponential";
    case errc::bad_sample_size: return "BadSampleSize";
    case errc::horizon_not_converged: return "HorizonNotConverged";
    case errc::negative_intensity: return "NegativeIntensity";
    case errc::insufficient_data: return "InsufficientData";
    case errc::empty_data: return "EmptyData";
    case errc::degenerate_u: return "DegenerateU";
    case errc::optimizer_failed: return "OptimizerFailed";
    case errc::empty_component: return "EmptyComponent";
    case errc::ill_posed: return "IllPosed";
    case errc::bad_data: return "BadData";
    case errc::missing_artifact: return "MissingArtifact";
    case errc::bad_config: return "BadConfig";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace ruinkit
