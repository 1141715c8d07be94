// Copyright 2026 The diamsieve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIAMSIEVE_PHILOX_H_
#define DIAMSIEVE_PHILOX_H_

#include <array>
#include <cstdint>

namespace diamsieve {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Output is a
// pure function of (counter, key), so any draw can be recomputed from its
// coordinates without touching shared state.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr Counter Generate(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const auto lo0 = static_cast<std::uint32_t>(p0);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const auto lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53U;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57U;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9U;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85U;
};

// 64-bit uniform draws indexed by an arbitrary 64-bit position, keyed by a
// seed and a stream id. Two consecutive positions share one Philox block.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_lo_(static_cast<std::uint32_t>(stream)),
        stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

  std::uint64_t Draw(std::uint64_t position) {
    const std::uint64_t block = position >> 1;
    if (block != cached_block_ || !cache_valid_) {
      cached_ = Philox4x32::Generate(
          {static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32), stream_lo_,
           stream_hi_},
          key_);
      cached_block_ = block;
      cache_valid_ = true;
    }
    const int half = static_cast<int>(position & 1U) * 2;
    return (static_cast<std::uint64_t>(cached_[half]) << 32) | cached_[half + 1];
  }

 private:
  Philox4x32::Key key_;
  std::uint32_t stream_lo_;
  std::uint32_t stream_hi_;
  Philox4x32::Counter cached_{};
  std::uint64_t cached_block_ = 0;
  bool cache_valid_ = false;
};

}  // namespace diamsieve

#endif  // DIAMSIEVE_PHILOX_H_
