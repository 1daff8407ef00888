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

#ifndef RUINKIT_RNG_HPP
#define RUINKIT_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace ruinkit {

/// Bit-mixing finalizer used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic random stream.
///
/// All sampling goes through explicit inversion formulas on top of
/// std::mt19937_64 (whose output sequence is fixed by the standard), so a
/// given (seed, stream index) pair reproduces the same draws on any platform
/// with IEEE doubles. No global state; one stream per worker.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(splitmix64(seed)) {}

  /// Independent stream for worker or replicate `index` under a user seed.
  static RngStream derive(std::uint64_t seed, std::uint64_t index) {
    return RngStream(splitmix64(seed + 0x9e3779b97f4a7c15ULL * (index + 1)));
  }

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform on the open interval (0, 1); never returns an endpoint.
  double uniform01() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double exponential(double rate);

  /// Index drawn according to a nondecreasing cdf vector with back() == 1.
  std::size_t categorical(const std::vector<double>& cdf);

 private:
  std::mt19937_64 gen_;
};

}  // namespace ruinkit

#endif
