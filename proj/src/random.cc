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

#include "labeldp/random.h"

namespace labeldp {

namespace {
constexpr double kTwoPowMinus53 = 1.0 / 9007199254740992.0;
}  // namespace

double RandomStream::Uniform() {
  ++draws_;
  return static_cast<double>(engine_() >> 11) * kTwoPowMinus53;
}

double RandomStream::OpenUniform() {
  ++draws_;
  return (static_cast<double>(engine_() >> 11) + 0.5) * kTwoPowMinus53;
}

double RandomStream::Normal() {
  ++draws_;
  return normal_(engine_);
}

uint64_t RandomStream::NextBits() {
  ++draws_;
  return engine_();
}

uint64_t MixBits(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t DeriveSeed(uint64_t base, uint64_t tag, uint64_t index) {
  return MixBits(base ^ MixBits(tag)) ^ index;
}

}  // namespace labeldp
