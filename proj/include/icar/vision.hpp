#pragma once

#include <array>
#include <optional>

#include "icar/signals.hpp"
#include "icar/types.hpp"

namespace icar::vision {

// Winner must beat the runner-up by this many intensity units...
inline constexpr double kMarginDelta = 10.0;
// ...and clear this absolute floor, else no lamp is considered glowing.
inline constexpr double kScoreFloor = 60.0;

// Region scores: top region mean red, middle region mean of (red+green)/2,
// bottom region mean green. Indexed by LightColor value (Red=0, Yellow=1,
// Green=2).
std::array<double, 3> region_scores(const ImagePatch& patch);

// Which lamp is glowing. nullopt = NoGlowingLamp (dark, washed-out or
// ambiguous patch); the caller holds its previous engine command.
std::optional<LightColor> classify(const ImagePatch& patch);

EngineCommand color_to_command(LightColor color);

}  // namespace icar::vision
