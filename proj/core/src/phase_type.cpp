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

#include "ruinkit/phase_type.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ruinkit/errors.hpp"
#include "ruinkit/matrix_exp.hpp"

namespace ruinkit {

namespace {

constexpr double kAlphaTol = 1e-12;

double spectral_abscissa_of(const Eigen::MatrixXd& Q) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(Q, /*computeEigenvectors=*/false);
  return es.eigenvalues().real().maxCoeff();
}

}  // namespace

PhaseType PhaseType::validate(Eigen::RowVectorXd alpha, Eigen::MatrixXd Q) {
  const auto m = Q.rows();
  if (m == 0 || Q.cols() != m || alpha.size() != m)
    raise(errc::non_stochastic_alpha, "alpha and Q dimensions disagree");
  if (!alpha.allFinite() || !Q.allFinite())
    raise(errc::non_finite, "non-finite parameter entry");

  if (alpha.minCoeff() < 0.0)
    raise(errc::non_stochastic_alpha, "alpha has a negative entry");
  if (std::abs(alpha.sum() - 1.0) > kAlphaTol)
    raise(errc::non_stochastic_alpha, "alpha does not sum to 1");

  for (Eigen::Index i = 0; i < m; ++i) {
    if (!(Q(i, i) < 0.0))
      raise(errc::not_sub_generator, "diagonal entry must be negative");
    for (Eigen::Index j = 0; j < m; ++j) {
      if (j != i && Q(i, j) < 0.0)
        raise(errc::not_sub_generator, "negative off-diagonal entry");
    }
  }

  Eigen::VectorXd exit = -Q * Eigen::VectorXd::Ones(m);
  // Row sums of exactly representable matrices are exact; allow only a
  // rounding-level slack for file-ingested values.
  const double scale = Q.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < m; ++i) {
    if (exit(i) < -kAlphaTol * scale)
      raise(errc::not_sub_generator, "positive row sum");
    if (exit(i) < 0.0) exit(i) = 0.0;
  }
  if (!(exit.maxCoeff() > 0.0))
    raise(errc::not_transient, "exit vector is identically zero");

  const double abscissa = spectral_abscissa_of(Q);
  if (!(abscissa < 0.0))
    raise(errc::not_transient, "nonnegative spectral abscissa");

  PhaseType ph;
  ph.alpha_ = std::move(alpha);
  ph.Q_ = std::move(Q);
  ph.exit_ = std::move(exit);
  ph.abscissa_ = abscissa;
  return ph;
}

PhaseType PhaseType::exponential(double rate) {
  if (!(rate > 0.0)) raise(errc::bad_rate, "rate must be > 0");
  Eigen::RowVectorXd a(1);
  a << 1.0;
  Eigen::MatrixXd Q(1, 1);
  Q << -rate;
  PhaseType ph = validate(std::move(a), std::move(Q));
  ph.family_ = Family::exponential;
  ph.components_ = {{1, rate}};
  ph.component_cdf_ = {1.0};
  return ph;
}

PhaseType PhaseType::hyperexponential(std::vector<double> weights,
                                      std::vector<double> rates) {
  std::vector<std::pair<int, double>> comps;
  comps.reserve(rates.size());
  for (double r : rates) comps.emplace_back(1, r);
  PhaseType ph = erlang_mixture(std::move(weights), std::move(comps));
  ph.family_ = Family::hyperexponential;
  return ph;
}

PhaseType PhaseType::erlang(int shape, double rate) {
  if (shape < 1) raise(errc::bad_rate, "shape must be >= 1");
  PhaseType ph = erlang_mixture({1.0}, {{shape, rate}});
  ph.family_ = Family::erlang;
  return ph;
}

PhaseType PhaseType::sum_of_exponentials(std::vector<double> rates) {
  if (rates.empty()) raise(errc::bad_rate, "need at least one rate");
  for (double r : rates)
    if (!(r > 0.0)) raise(errc::bad_rate, "rates must be > 0");
  const auto m = static_cast<Eigen::Index>(rates.size());
  Eigen::RowVectorXd a = Eigen::RowVectorXd::Zero(m);
  a(0) = 1.0;
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    Q(i, i) = -rates[i];
    if (i + 1 < m) Q(i, i + 1) = rates[i];
  }
  PhaseType ph = validate(std::move(a), std::move(Q));
  ph.family_ = Family::sum_of_exponentials;
  ph.component_cdf_ = {1.0};
  for (double r : rates) ph.components_.emplace_back(1, r);
  return ph;
}

PhaseType PhaseType::erlang_mixture(
    std::vector<double> weights,
    std::vector<std::pair<int, double>> components) {
  if (weights.size() != components.size() || weights.empty())
    raise(errc::bad_weights, "weights and components must match and be nonempty");
  double wsum = 0.0;
  for (double w : weights) {
    if (w < 0.0) raise(errc::bad_weights, "negative weight");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > kAlphaTol)
    raise(errc::bad_weights, "weights must sum to 1");
  Eigen::Index m = 0;
  for (auto& [shape, rate] : components) {
    if (shape < 1) raise(errc::bad_rate, "shape must be >= 1");
    if (!(rate > 0.0)) raise(errc::bad_rate, "rate must be > 0");
    m += shape;
  }

  Eigen::RowVectorXd a = Eigen::RowVectorXd::Zero(m);
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(m, m);
  Eigen::Index head = 0;
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto [shape, rate] = components[c];
    a(head) = weights[c];
    for (int i = 0; i < shape; ++i) {
      Q(head + i, head + i) = -rate;
      if (i + 1 < shape) Q(head + i, head + i + 1) = rate;
    }
    head += shape;
  }

  PhaseType ph = validate(std::move(a), std::move(Q));
  ph.family_ = Family::erlang_mixture;
  ph.components_ = std::move(components);
  ph.component_cdf_.resize(weights.size());
  std::partial_sum(weights.begin(), weights.end(), ph.component_cdf_.begin());
  ph.component_cdf_.back() = 1.0;
  return ph;
}

double PhaseType::pdf(double x) const {
  if (x < 0.0) raise(errc::negative_argument, "pdf needs x >= 0");
  return alpha_ * matrix_exp<double>(Q_, x) * exit_;
}

double PhaseType::cdf(double x) const {
  if (x < 0.0) raise(errc::negative_argument, "cdf needs x >= 0");
  const double survival =
      alpha_ * matrix_exp<double>(Q_, x) * Eigen::VectorXd::Ones(Q_.rows());
  return 1.0 - survival;
}

double PhaseType::moment(int k) const {
  if (k < 1) raise(errc::negative_argument, "moment order must be >= 1");
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(Q_);
  Eigen::VectorXd w = Eigen::VectorXd::Ones(Q_.rows());
  for (int i = 0; i < k; ++i) w = lu.solve(w);
  double sign = (k % 2 == 0) ? 1.0 : -1.0;
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  return sign * factorial * (alpha_ * w).value();
}

std::complex<double> PhaseType::resolvent(std::complex<double> s) const {
  const auto m = Q_.rows();
  Eigen::MatrixXcd A =
      s * Eigen::MatrixXcd::Identity(m, m) - Q_.cast<std::complex<double>>();
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(A);
  if (!lu.isInvertible())
    raise(errc::singular_resolvent, "s is an eigenvalue of Q");
  Eigen::VectorXcd w = lu.solve(exit_.cast<std::complex<double>>());
  return (alpha_.cast<std::complex<double>>() * w).value();
}

double PhaseType::resolvent(double s) const {
  return resolvent(std::complex<double>(s, 0.0)).real();
}

double PhaseType::sample(RngStream& rng) const {
  switch (family_) {
    case Family::generic:
      return sample_chain(rng);
    case Family::exponential:
      return rng.exponential(components_[0].second);
    case Family::sum_of_exponentials: {
      double x = 0.0;
      for (const auto& [shape, rate] : components_) x += rng.exponential(rate);
      return x;
    }
    default: {  // hyperexponential, erlang, erlang_mixture
      const std::size_t c = rng.categorical(component_cdf_);
      const auto [shape, rate] = components_[c];
      double x = 0.0;
      for (int i = 0; i < shape; ++i) x += rng.exponential(rate);
      return x;
    }
  }
}

double PhaseType::sample_chain(RngStream& rng) const {
  const auto m = Q_.rows();
  // initial phase
  std::vector<double> cdf(m);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    acc += alpha_(i);
    cdf[i] = acc;
  }
  cdf.back() = 1.0;
  Eigen::Index state = static_cast<Eigen::Index>(rng.categorical(cdf));

  double time = 0.0;
  while (true) {
    const double rate = -Q_(state, state);
    time += rng.exponential(rate);
    const double u = rng.uniform01() * rate;
    double mass = exit_(state);
    if (u <= mass) return time;  // absorbed
    Eigen::Index next = state;
    for (Eigen::Index j = 0; j < m; ++j) {
      if (j == state) continue;
      mass += Q_(state, j);
      if (u <= mass) {
        next = j;
        break;
      }
    }
    state = next;
  }
}

TiltedClaim PhaseType::tilt(std::complex<double> kappa) const {
  TiltedClaim tc;
  tc.base = *this;
  tc.kappa = kappa;
  const auto m = Q_.rows();
  tc.Q_tilted = Q_.cast<std::complex<double>>() -
                kappa * Eigen::MatrixXcd::Identity(m, m);
  // eigenvalues shift by -kappa, so only the real part of kappa matters
  tc.valid = (abscissa_ - kappa.real()) < 0.0;
  tc.normalizer = resolvent(kappa);
  return tc;
}

double TiltedClaim::pdf(double x) const {
  if (!is_real()) raise(errc::negative_argument, "complex tilt has no real density");
  if (x < 0.0) raise(errc::negative_argument, "pdf needs x >= 0");
  return std::exp(-kappa.real() * x) * base.pdf(x) / normalizer.real();
}

PhaseType TiltedClaim::as_phase_type() const {
  if (!valid || !is_real())
    raise(errc::not_transient, "tilt is not a proper phase-type law");
  const double k = kappa.real();
  const auto m = base.Q().rows();
  // h_i = E_i e^{-kappa X}; the similarity transform by diag(h) restores a
  // proper sub-generator with exit vector t_i / h_i.
  Eigen::MatrixXd A = k * Eigen::MatrixXd::Identity(m, m) - base.Q();
  Eigen::VectorXd h = A.partialPivLu().solve(base.exit());
  Eigen::RowVectorXd alpha_t(m);
  for (Eigen::Index i = 0; i < m; ++i) alpha_t(i) = base.alpha()(i) * h(i);
  alpha_t /= alpha_t.sum();
  Eigen::MatrixXd Qt(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      Qt(i, j) = (base.Q()(i, j) - (i == j ? k : 0.0)) * h(j) / h(i);
  return PhaseType::validate(std::move(alpha_t), std::move(Qt));
}

PhaseType PhaseType::canonicalize() const {
  const auto m = Q_.rows();
  std::vector<bool> reached(m, false);
  std::vector<Eigen::Index> queue;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (alpha_(i) > 0.0) {
      reached[i] = true;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    const Eigen::Index i = queue.back();
    queue.pop_back();
    for (Eigen::Index j = 0; j < m; ++j) {
      if (j != i && Q_(i, j) > 0.0 && !reached[j]) {
        reached[j] = true;
        queue.push_back(j);
      }
    }
  }
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < m; ++i)
    if (reached[i]) keep.push_back(i);
  if (keep.size() == static_cast<std::size_t>(m)) return *this;

  const auto mm = static_cast<Eigen::Index>(keep.size());
  Eigen::RowVectorXd a(mm);
  Eigen::MatrixXd Q(mm, mm);
  for (Eigen::Index i = 0; i < mm; ++i) {
    a(i) = alpha_(keep[i]);
    for (Eigen::Index j = 0; j < mm; ++j) Q(i, j) = Q_(keep[i], keep[j]);
  }
  return validate(std::move(a), std::move(Q));
}

}  // namespace ruinkit
