#include "icar/types.hpp"

#include <stdexcept>

namespace icar {

const char* to_string(EngineState s) {
  switch (s) {
    case EngineState::Stop: return "Stop";
    case EngineState::Active: return "Active";
    case EngineState::Moving: return "Moving";
  }
  return "?";
}

const char* to_string(EngineCommand c) {
  switch (c) {
    case EngineCommand::StopEngine: return "StopEngine";
    case EngineCommand::ActivateEngine: return "ActivateEngine";
    case EngineCommand::MoveEngine: return "MoveEngine";
  }
  return "?";
}

const char* to_string(Direction d) {
  switch (d) {
    case Direction::Forward: return "Forward";
    case Direction::LateralLeft: return "LateralLeft";
    case Direction::LateralRight: return "LateralRight";
    case Direction::Stopped: return "Stopped";
  }
  return "?";
}

const char* to_string(Decision d) {
  switch (d) {
    case Decision::KeepLane: return "KeepLane";
    case Decision::Accelerate: return "Accelerate";
    case Decision::Brake: return "Brake";
    case Decision::EmergencyBrake: return "EmergencyBrake";
    case Decision::MoveLeft: return "MoveLeft";
    case Decision::MoveRight: return "MoveRight";
    case Decision::Hold: return "Hold";
  }
  return "?";
}

const char* to_string(LightColor c) {
  switch (c) {
    case LightColor::Red: return "Red";
    case LightColor::Yellow: return "Yellow";
    case LightColor::Green: return "Green";
  }
  return "?";
}

void WorldConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("config: ") + what);
  };
  require(lane_count >= 1, "lane_count must be a positive integer");
  require(lane_length > 0, "lane_length must be > 0");
  require(time_step > 0, "time_step must be > 0");
  require(sensor_range > 0, "sensor_range must be > 0");
  require(sensor_noise_sigma >= 0, "sensor_noise_sigma must be >= 0");
  require(comms_radius > 0, "comms_radius must be > 0");
  require(car_length > 0, "car_length must be > 0");
  require(v_max > 0, "v_max must be > 0");
  require(a_max > 0, "a_max must be > 0");
  require(t_react >= 0, "t_react must be >= 0");
  require(d_min > 0, "d_min must be > 0");
  require(light_durations.green > 0 && light_durations.yellow > 0 && light_durations.red > 0,
          "all light durations must be > 0");
  require(beacon_ttl > 0, "beacon_ttl must be > 0");
  require(decision_rounds >= 1, "decision_rounds must be a positive integer");
  require(p_loss >= 0 && p_loss < 1, "p_loss must be in [0, 1)");
  require(vision_noise_sigma >= 0, "vision_noise_sigma must be >= 0");
}

}  // namespace icar
