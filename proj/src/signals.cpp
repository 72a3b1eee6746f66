#include "icar/signals.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <stdexcept>

#include "icar/rng.hpp"

namespace icar {

double phase_duration(const LightDurations& durations, LightColor phase) {
  switch (phase) {
    case LightColor::Green: return durations.green;
    case LightColor::Yellow: return durations.yellow;
    case LightColor::Red: return durations.red;
  }
  return 0.0;
}

LightColor next_phase(LightColor phase) {
  switch (phase) {
    case LightColor::Green: return LightColor::Yellow;
    case LightColor::Yellow: return LightColor::Red;
    case LightColor::Red: return LightColor::Green;
  }
  return LightColor::Green;
}

TrafficLight light_step(TrafficLight light, double dt, const LightDurations& durations) {
  assert(dt > 0);
  light.remaining -= dt;
  // Overshoot carries into the next phase, so one long dt rolls through as
  // many phases as it covers.
  while (light.remaining <= 0.0) {
    light.phase = next_phase(light.phase);
    light.remaining += phase_duration(durations, light.phase);
  }
  return light;
}

ImagePatch render_patch(LightColor phase, double sigma, std::uint64_t noise_key,
                        int width, int height) {
  if (width <= 0 || height <= 0 || height % 3 != 0)
    throw std::invalid_argument("render_patch: height must be positive and divisible by 3");

  ImagePatch patch;
  patch.width = width;
  patch.height = height;
  patch.pixels.resize(static_cast<std::size_t>(width) * height * 3);

  const int region_height = height / 3;
  for (int y = 0; y < height; ++y) {
    const int region = y / region_height;  // 0 = red lamp, 1 = yellow, 2 = green
    const bool lit = static_cast<int>(phase) == region;
    std::uint8_t base[3] = {kDarkLevel, kDarkLevel, kDarkLevel};
    if (lit) {
      switch (phase) {
        case LightColor::Red: base[0] = kLitLevel; break;
        case LightColor::Yellow: base[0] = base[1] = kLitLevel; break;  // red+green
        case LightColor::Green: base[1] = kLitLevel; break;
      }
    }
    for (int x = 0; x < width; ++x) {
      const std::size_t pixel = static_cast<std::size_t>(y) * width + x;
      for (int ch = 0; ch < 3; ++ch) {
        double value = base[ch];
        if (sigma > 0.0) {
          value += sigma * 255.0 * rng::gaussian(rng::mix(rng::mix(noise_key, pixel), ch));
        }
        value = std::clamp(value, 0.0, 255.0);
        patch.pixels[pixel * 3 + ch] = static_cast<std::uint8_t>(value + 0.5);
      }
    }
  }
  return patch;
}

std::vector<std::uint8_t> encode_patch_file(const ImagePatch& patch) {
  std::string header = std::to_string(patch.width) + " " + std::to_string(patch.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), patch.pixels.begin(), patch.pixels.end());
  return out;
}

void write_patch(const ImagePatch& patch, const std::string& path) {
  auto bytes = encode_patch_file(patch);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("write_patch: cannot open " + path);
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace icar
