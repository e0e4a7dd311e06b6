// Copyright 2026 The labeldp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LABELDP_RANDOM_H_
#define LABELDP_RANDOM_H_

#include <cstdint>
#include <random>

namespace labeldp {

// A seeded, counted stream of random variates. One stream belongs to one
// execution context; parallel work derives independent streams with
// DeriveSeed().
//
// Uniform() and OpenUniform() are built from the raw 64-bit engine output so
// that a given seed yields the same sequence with any standard library.
// Normal() goes through std::normal_distribution and is only reproducible on
// a fixed standard library.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed) : seed_(seed), engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double Uniform();
  // Uniform on (0, 1); never returns exactly 0 or 1.
  double OpenUniform();
  double Normal();
  // Raw engine output, for shuffles and index draws.
  uint64_t NextBits();

  // Number of variates drawn so far (each call above counts once).
  uint64_t draws() const { return draws_; }
  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  uint64_t draws_ = 0;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

// SplitMix64 finalizer; a bijective bit mixer.
uint64_t MixBits(uint64_t x);

// Seed for sub-stream `index` of purpose `tag` under `base`. Sub-streams with
// the same (base, tag) differ by XOR with the index.
uint64_t DeriveSeed(uint64_t base, uint64_t tag, uint64_t index);

}  // namespace labeldp

#endif  // LABELDP_RANDOM_H_
