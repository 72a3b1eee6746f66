#include "icar/engine.hpp"

#include <algorithm>
#include <cassert>

#include "icar/avoidance.hpp"

namespace icar {

EngineState engine_transition(EngineState state, EngineCommand command) {
  switch (command) {
    case EngineCommand::StopEngine:
      return EngineState::Stop;
    case EngineCommand::ActivateEngine:
      return EngineState::Active;
    case EngineCommand::MoveEngine:
      return state == EngineState::Stop ? EngineState::Active : EngineState::Moving;
  }
  return state;
}

double target_speed(double speed, double front_gap, const WorldConfig& cfg) {
  const double req = required_gap(speed, cfg);
  const double denom = req - cfg.d_min;  // zero only at speed 0
  double ratio;
  if (denom > 0.0) {
    ratio = std::clamp((front_gap - cfg.d_min) / denom, 0.0, 1.0);
  } else {
    ratio = front_gap >= req ? 1.0 : 0.0;
  }
  return cfg.v_max * ratio;
}

double speed_update(const CarState& car, Decision decision, const FusedView& view,
                    const WorldConfig& cfg, double dt) {
  assert(dt > 0);
  if (car.engine != EngineState::Moving) {
    return std::max(0.0, car.speed - cfg.a_max * dt);
  }

  double target;
  double brake_cap = cfg.a_max;
  switch (decision) {
    case Decision::EmergencyBrake:
      target = 0.0;
      brake_cap = 2.0 * cfg.a_max;
      break;
    case Decision::Brake:
      target = 0.0;
      break;
    default:
      target = target_speed(car.speed, view.front_gap, cfg);
      break;
  }

  const double delta = std::clamp(target - car.speed, -brake_cap * dt, cfg.a_max * dt);
  return std::clamp(car.speed + delta, 0.0, cfg.v_max);
}

}  // namespace icar
