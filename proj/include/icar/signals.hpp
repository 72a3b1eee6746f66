#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icar/types.hpp"

namespace icar {

// Phase cycles Green -> Yellow -> Red -> Green. `remaining` is the time left
// in the current phase, in (0, duration(phase)].
struct TrafficLight {
  std::uint64_t light_id = 0;
  int lane = 0;
  double position = 0.0;
  LightColor phase = LightColor::Green;
  double remaining = 0.0;
};

double phase_duration(const LightDurations& durations, LightColor phase);
LightColor next_phase(LightColor phase);

// Advances the light by dt, rolling through as many phases as the overshoot
// covers. Pure; dt must be > 0.
TrafficLight light_step(TrafficLight light, double dt, const LightDurations& durations);

// Synthetic camera view of one traffic light: three vertically stacked lamp
// regions of equal height, top = red lamp, middle = yellow, bottom = green.
struct ImagePatch {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major RGB triples

  std::uint8_t at(int x, int y, int channel) const {
    return pixels[static_cast<std::size_t>(3 * (y * width + x) + channel)];
  }
};

inline constexpr int kPatchWidth = 24;
inline constexpr int kPatchHeight = 72;
inline constexpr std::uint8_t kLitLevel = 230;
inline constexpr std::uint8_t kDarkLevel = 20;

// Renders the lamp matching `phase` lit (dominant channels 230, everything
// else 20; the yellow lamp drives red+green), then adds per-pixel Gaussian
// noise with std sigma*255 per channel, clamped to [0, 255]. Deterministic in
// noise_key: the same key always yields the same unit-normal draws, so a
// sigma sweep over one key is a paired comparison.
ImagePatch render_patch(LightColor phase, double sigma, std::uint64_t noise_key,
                        int width = kPatchWidth, int height = kPatchHeight);

// Debug dump format: "<width> <height>\n255\n" followed by raw RGB bytes.
std::vector<std::uint8_t> encode_patch_file(const ImagePatch& patch);
void write_patch(const ImagePatch& patch, const std::string& path);

}  // namespace icar
