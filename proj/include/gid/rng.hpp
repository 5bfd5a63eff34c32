// Copyright 2026 The GID Authors
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
//
#pragma once

#include <cstdint>
#include <limits>

namespace gid {

// Counter-based random stream: the state is a pure function of a key tuple,
// so draws for one (person, year) never depend on how many other persons
// were generated before it. Satisfies UniformRandomBitGenerator.
class KeyedStream {
 public:
  using result_type = std::uint64_t;

  KeyedStream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0)
      : state_(Mix(Mix(Mix(seed ^ 0x243F6A8885A308D3ull) ^ a) ^ (b * 0x9E3779B97F4A7C15ull)) ^
               (c + 0x13198A2E03707344ull)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ull;
    return Mix(state_);
  }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  static std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Purpose tags keep independent streams apart when keyed by the same ids.
enum StreamTag : std::uint64_t {
  kTagPerson = 1,
  kTagYear = 2,
  kTagFirm = 3,
  kTagActivity = 4,
  kTagImpute = 5,
  kTagSimulation = 6,
  kTagDeath = 7,
};

}  // namespace gid
