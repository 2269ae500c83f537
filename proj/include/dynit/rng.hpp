#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace dynit {

// Philox4x32-10 counter-based generator.  Outputs are a pure function of
// (key, counter), so any partitioning of the sample index space draws the
// same values; streams never overlap because they own disjoint counters.
struct Philox4x32 {
    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 2> key,
                                              std::array<std::uint32_t, 4> ctr) {
        constexpr std::uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
        constexpr std::uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;
        for (int round = 0;; ++round) {
            const std::uint64_t p0 = static_cast<std::uint64_t>(M0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(M1) * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(p0)};
            if (round == 9) return ctr;
            key[0] += W0;
            key[1] += W1;
        }
    }
};

// Uniform draws addressed by (seed, global sample index, slot).  Each sample
// owns slots 0..7; two Philox blocks cover them lazily.
class SampleRng {
  public:
    SampleRng(std::uint64_t seed, std::uint64_t index)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          index_(index) {}

    // Open-interval uniform in (0,1): never returns 0 or 1.
    double uniform(unsigned slot) const {
        const std::uint64_t bits = raw64(slot);
        return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
    }

    // Exponential with the given rate via inverse transform; the open
    // interval keeps log away from 0.
    double exponential(unsigned slot, double rate) const {
        return -std::log(uniform(slot)) / rate;
    }

    std::uint64_t raw64(unsigned slot) const {
        const std::array<std::uint32_t, 4> ctr{
            static_cast<std::uint32_t>(index_), static_cast<std::uint32_t>(index_ >> 32),
            slot >> 1, 0x64796E69u};
        const auto out = Philox4x32::block(key_, ctr);
        const unsigned half = 2 * (slot & 1);
        return (static_cast<std::uint64_t>(out[half + 1]) << 32) | out[half];
    }

  private:
    std::array<std::uint32_t, 2> key_;
    std::uint64_t index_;
};

}  // namespace dynit
