#include "icar/vision.hpp"

#include <algorithm>
#include <stdexcept>

namespace icar::vision {

std::array<double, 3> region_scores(const ImagePatch& patch) {
  if (patch.width <= 0 || patch.height % 3 != 0 ||
      patch.pixels.size() != static_cast<std::size_t>(patch.width) * patch.height * 3)
    throw std::invalid_argument("region_scores: malformed patch");

  const int region_height = patch.height / 3;
  std::array<double, 3> scores{};
  for (int region = 0; region < 3; ++region) {
    double sum = 0.0;
    for (int y = region * region_height; y < (region + 1) * region_height; ++y) {
      for (int x = 0; x < patch.width; ++x) {
        switch (region) {
          case 0: sum += patch.at(x, y, 0); break;                                // red lamp
          case 1: sum += 0.5 * (patch.at(x, y, 0) + patch.at(x, y, 1)); break;    // yellow = r+g
          case 2: sum += patch.at(x, y, 1); break;                                // green lamp
        }
      }
    }
    scores[static_cast<std::size_t>(region)] = sum / (region_height * patch.width);
  }
  return scores;
}

std::optional<LightColor> classify(const ImagePatch& patch) {
  const auto scores = region_scores(patch);
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (scores[static_cast<std::size_t>(i)] > scores[static_cast<std::size_t>(best)]) best = i;
  double runner_up = -1.0;
  for (int i = 0; i < 3; ++i)
    if (i != best) runner_up = std::max(runner_up, scores[static_cast<std::size_t>(i)]);

  const double winner = scores[static_cast<std::size_t>(best)];
  if (winner < kScoreFloor || winner - runner_up < kMarginDelta) return std::nullopt;
  return static_cast<LightColor>(best);
}

EngineCommand color_to_command(LightColor color) {
  switch (color) {
    case LightColor::Red: return EngineCommand::StopEngine;
    case LightColor::Yellow: return EngineCommand::ActivateEngine;
    case LightColor::Green: return EngineCommand::MoveEngine;
  }
  return EngineCommand::StopEngine;
}

}  // namespace icar::vision
