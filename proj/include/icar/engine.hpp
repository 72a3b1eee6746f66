#pragma once

#include "icar/types.hpp"

namespace icar {

// The full transition table (state x command):
//
//                 StopEngine  ActivateEngine  MoveEngine
//   from Stop     Stop        Active          Active      <- ignition step
//   from Active   Stop        Active          Moving
//   from Moving   Stop        Active          Moving
//
// MoveEngine from Stop only reaches Active: an off engine cannot jump
// straight to driving.
EngineState engine_transition(EngineState state, EngineCommand command);

// Cruise target for a Moving car: v_max scaled linearly with how much of the
// required gap the fused front gap covers, saturating at v_max once the gap
// reaches required_gap(speed). front_gap may be +infinity (open road).
double target_speed(double speed, double front_gap, const WorldConfig& cfg);

// One speed integration step. `car.engine` must already reflect this step's
// engine transition. Non-Moving engines decay toward 0 at a_max; Moving cars
// move toward the cruise target capped at a_max (EmergencyBrake doubles the
// braking cap). Result is clamped to [0, v_max].
double speed_update(const CarState& car, Decision decision, const FusedView& view,
                    const WorldConfig& cfg, double dt);

}  // namespace icar
