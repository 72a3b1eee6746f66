#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

// Counter-based deterministic random draws. Every stochastic element of the
// simulator (sensor noise, pixel noise, message loss, scenario generation)
// derives its randomness from a key built out of the run seed plus the
// identifiers of the draw site (car id, step index, channel, ...). Draws are
// therefore independent of evaluation order and reproducible per query.

namespace icar::rng {

// Stream tags keep the key spaces of unrelated draw sites disjoint.
enum : std::uint64_t {
  kTagSense = 0x53454e53,     // directional range sensors
  kTagVision = 0x56495a4e,    // camera pixel noise
  kTagLoss = 0x4c4f5353,      // beacon delivery loss
  kTagScenario = 0x5343454e,  // generated placements
  kTagSeedVec = 0x53454544,   // per-run seed vectors for sweeps
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  return splitmix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

inline std::uint64_t key(std::uint64_t seed, std::uint64_t tag,
                         std::uint64_t a = 0, std::uint64_t b = 0,
                         std::uint64_t c = 0, std::uint64_t d = 0) {
  std::uint64_t h = splitmix64(seed);
  h = mix(h, tag);
  h = mix(h, a);
  h = mix(h, b);
  h = mix(h, c);
  h = mix(h, d);
  return h;
}

// Uniform double in [0, 1), 53 bits of mantissa.
inline double unit(std::uint64_t k) {
  return static_cast<double>(splitmix64(k) >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller; two independent uniforms from the key.
inline double gaussian(std::uint64_t k) {
  // u1 in (0, 1] so the log is finite.
  double u1 = (static_cast<double>(splitmix64(k) >> 11) + 1.0) * 0x1.0p-53;
  double u2 = static_cast<double>(splitmix64(k ^ 0xda3e39cb94b95bdbULL) >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace icar::rng
