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

#ifndef RUINKIT_PHASE_TYPE_HPP
#define RUINKIT_PHASE_TYPE_HPP

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "ruinkit/rng.hpp"

namespace ruinkit {

struct TiltedClaim;

/// Distribution of the absorption time of a transient continuous-time Markov
/// chain with m phases: initial row vector alpha, sub-generator Q, exit
/// vector t = -Q 1.
///
/// Instances are immutable after construction and safe to share read-only
/// across threads. All constructors validate:
///   - alpha >= 0 entrywise, sum(alpha) = 1 within 1e-12,
///   - Q: off-diagonal >= 0, diagonal < 0, row sums <= 0 (sign checks exact),
///   - exit vector >= 0 with at least one strictly positive entry,
///   - spectral abscissa of Q strictly negative (transience).
class PhaseType {
 public:
  /// Distributions built by a named constructor remember their structure so
  /// that sampling can use the exact mixture/convolution representation
  /// instead of simulating the chain.
  enum class Family {
    generic,
    exponential,
    hyperexponential,
    erlang,
    sum_of_exponentials,
    erlang_mixture,
  };

  /// Validates (alpha, Q) and returns the distribution, or throws an Error
  /// naming the violated invariant (NonStochasticAlpha, NotSubGenerator,
  /// NotTransient).
  static PhaseType validate(Eigen::RowVectorXd alpha, Eigen::MatrixXd Q);

  static PhaseType exponential(double rate);
  static PhaseType hyperexponential(std::vector<double> weights,
                                    std::vector<double> rates);
  static PhaseType erlang(int shape, double rate);
  static PhaseType sum_of_exponentials(std::vector<double> rates);
  /// Mixture of Erlang blocks; `components` lists (shape, rate) pairs and
  /// `weights` the mass alpha assigns to each chain head.
  static PhaseType erlang_mixture(
      std::vector<double> weights,
      std::vector<std::pair<int, double>> components);

  int num_phases() const { return static_cast<int>(Q_.rows()); }
  const Eigen::RowVectorXd& alpha() const { return alpha_; }
  const Eigen::MatrixXd& Q() const { return Q_; }
  const Eigen::VectorXd& exit() const { return exit_; }
  /// Largest real part among the eigenvalues of Q (always < 0).
  double spectral_abscissa() const { return abscissa_; }
  Family family() const { return family_; }

  /// Density alpha e^{Qx} t. Throws NegativeArgument for x < 0.
  double pdf(double x) const;
  /// Distribution function 1 - alpha e^{Qx} 1. Throws NegativeArgument.
  double cdf(double x) const;
  /// k-th raw moment, (-1)^k k! alpha Q^{-k} 1, for k >= 1.
  double moment(int k) const;
  double mean() const { return moment(1); }

  /// alpha (sI - Q)^{-1} t, the rational extension of E e^{-sX}. Defined for
  /// every s that is not an eigenvalue of Q (SingularResolvent otherwise).
  std::complex<double> resolvent(std::complex<double> s) const;
  double resolvent(double s) const;

  /// One draw of the absorption time. Named-constructor instances sample
  /// their structural representation; generic instances simulate the chain.
  double sample(RngStream& rng) const;

  /// Exponential tilt with exponent kappa, Re(kappa) < 0: tilted density
  /// e^{-kappa x} f(x) / normalizer with normalizer = resolvent(kappa).
  /// Tilts past the convergence abscissa come back flagged invalid rather
  /// than raising.
  TiltedClaim tilt(std::complex<double> kappa) const;

  /// Drops states unreachable from the support of alpha. The distribution
  /// is unchanged; representations read from files may carry dead states.
  PhaseType canonicalize() const;

 private:
  PhaseType() = default;

  Eigen::RowVectorXd alpha_;
  Eigen::MatrixXd Q_;
  Eigen::VectorXd exit_;
  double abscissa_ = 0.0;
  Family family_ = Family::generic;

  // structural sampling data (set by named constructors)
  std::vector<double> component_cdf_;
  std::vector<std::pair<int, double>> components_;  // (shape, rate)

  double sample_chain(RngStream& rng) const;
};

/// Result of exponentially tilting a phase-type claim at exponent kappa.
///
/// `valid` is true exactly when Q - kappa I still has negative spectral
/// abscissa, i.e. when the tilted density integrates to one and the tilted
/// law is again phase-type. Invalid tilts are ordinary values (the
/// two-dimensional solver falls back to direct weighted Monte Carlo for
/// such roots), never errors.
struct TiltedClaim {
  PhaseType base;
  std::complex<double> kappa;
  Eigen::MatrixXcd Q_tilted;            // Q - kappa I
  std::complex<double> normalizer;      // alpha (kappa I - Q)^{-1} t
  bool valid = false;

  bool is_real() const { return kappa.imag() == 0.0; }

  /// Tilted density e^{-kappa x} f(x) / normalizer; real kappa only.
  double pdf(double x) const;

  /// Canonical phase-type representation of the tilted law (valid real
  /// tilts only), suitable for exact sampling under the tilted measure.
  PhaseType as_phase_type() const;
};

}  // namespace ruinkit

#endif
