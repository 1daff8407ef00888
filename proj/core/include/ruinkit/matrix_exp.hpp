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

#ifndef RUINKIT_MATRIX_EXP_HPP
#define RUINKIT_MATRIX_EXP_HPP

#include <Eigen/Dense>
#include <cmath>

#include "ruinkit/errors.hpp"

namespace ruinkit {

namespace detail {

/// Diagonal Pade approximants to exp(A) around A = 0. After each helper,
/// (V + U)(V - U)^{-1} approximates exp(A).
template <typename Mat>
void exp_pade3(const Mat& A, Mat& U, Mat& V) {
  const double b[] = {120., 60., 12., 1.};
  const Mat A2 = A * A;
  const Mat I = Mat::Identity(A.rows(), A.cols());
  U.noalias() = A * (b[3] * A2 + b[1] * I);
  V = b[2] * A2 + b[0] * I;
}

template <typename Mat>
void exp_pade5(const Mat& A, Mat& U, Mat& V) {
  const double b[] = {30240., 15120., 3360., 420., 30., 1.};
  const Mat A2 = A * A;
  const Mat A4 = A2 * A2;
  const Mat I = Mat::Identity(A.rows(), A.cols());
  U.noalias() = A * (b[5] * A4 + b[3] * A2 + b[1] * I);
  V = b[4] * A4 + b[2] * A2 + b[0] * I;
}

template <typename Mat>
void exp_pade7(const Mat& A, Mat& U, Mat& V) {
  const double b[] = {17297280., 8648640., 1995840., 277200.,
                      25200.,    1512.,    56.,      1.};
  const Mat A2 = A * A;
  const Mat A4 = A2 * A2;
  const Mat A6 = A4 * A2;
  const Mat I = Mat::Identity(A.rows(), A.cols());
  U.noalias() = A * (b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I);
  V = b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
}

template <typename Mat>
void exp_pade9(const Mat& A, Mat& U, Mat& V) {
  const double b[] = {17643225600., 8821612800., 2075673600., 302702400.,
                      30270240.,    2162160.,    110880.,     3960.,
                      90.,          1.};
  const Mat A2 = A * A;
  const Mat A4 = A2 * A2;
  const Mat A6 = A4 * A2;
  const Mat A8 = A6 * A2;
  const Mat I = Mat::Identity(A.rows(), A.cols());
  U.noalias() =
      A * (b[9] * A8 + b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I);
  V = b[8] * A8 + b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
}

template <typename Mat>
void exp_pade13(const Mat& A, Mat& U, Mat& V) {
  const double b[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                      1187353796428800.,  129060195264000.,   10559470521600.,
                      670442572800.,      33522128640.,       1323241920.,
                      40840800.,          960960.,            16380.,
                      182.,               1.};
  const Mat A2 = A * A;
  const Mat A4 = A2 * A2;
  const Mat A6 = A4 * A2;
  const Mat I = Mat::Identity(A.rows(), A.cols());
  Mat tmp = A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2);
  tmp += b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I;
  U.noalias() = A * tmp;
  V = A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2);
  V += b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
}

}  // namespace detail

/// exp(A) by scaling-and-squaring with a diagonal Pade core.
///
/// Order selection and the scaling threshold follow the standard
/// double-precision theta values; for the small, stiff sub-generators this
/// library works with, the relative accuracy is at the 1e-13 level or better.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> matrix_exp(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& A) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (!A.allFinite()) raise(errc::non_finite, "matrix_exp: non-finite entry");
  if (A.rows() != A.cols()) raise(errc::non_finite, "matrix_exp: not square");

  const double norm = A.cwiseAbs().colwise().sum().maxCoeff();  // 1-norm
  Mat U(A.rows(), A.cols()), V(A.rows(), A.cols());
  int squarings = 0;

  if (norm < 1.495585217958292e-2) {
    detail::exp_pade3(A, U, V);
  } else if (norm < 2.539398330063230e-1) {
    detail::exp_pade5(A, U, V);
  } else if (norm < 9.504178996162932e-1) {
    detail::exp_pade7(A, U, V);
  } else if (norm < 2.097847961257068e0) {
    detail::exp_pade9(A, U, V);
  } else {
    const double theta13 = 5.371920351148152e0;
    squarings = std::max(0, static_cast<int>(
                                std::ceil(std::log2(norm / theta13))));
    const Mat scaled = A * (Scalar(1) / Scalar(std::pow(2.0, squarings)));
    detail::exp_pade13(scaled, U, V);
  }

  Mat numer = V + U;
  Mat denom = V - U;
  Mat result = denom.partialPivLu().solve(numer);
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

/// exp(A x).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> matrix_exp(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& A,
    double x) {
  if (!std::isfinite(x)) raise(errc::non_finite, "matrix_exp: non-finite x");
  return matrix_exp<Scalar>((A * Scalar(x)).eval());
}

}  // namespace ruinkit

#endif
