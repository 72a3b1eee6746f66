#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace icar {

using CarId = std::uint64_t;

// Engine states, wire values fixed by the beacon layout (0/1/2).
enum class EngineState : std::uint8_t { Stop = 0, Active = 1, Moving = 2 };

enum class EngineCommand : std::uint8_t { StopEngine = 0, ActivateEngine = 1, MoveEngine = 2 };

enum class Direction : std::uint8_t { Forward = 0, LateralLeft = 1, LateralRight = 2, Stopped = 3 };

enum class Decision : std::uint8_t {
  KeepLane = 0,
  Accelerate = 1,
  Brake = 2,
  EmergencyBrake = 3,
  MoveLeft = 4,
  MoveRight = 5,
  Hold = 6,
};

enum class LightColor : std::uint8_t { Red = 0, Yellow = 1, Green = 2 };

const char* to_string(EngineState s);
const char* to_string(EngineCommand c);
const char* to_string(Direction d);
const char* to_string(Decision d);
const char* to_string(LightColor c);

struct LightDurations {
  double green = 30.0;
  double yellow = 3.0;
  double red = 27.0;
};

struct WorldConfig {
  int lane_count = 3;
  double lane_length = 1000.0;          // m
  double time_step = 0.1;               // s
  double sensor_range = 50.0;           // m
  double sensor_noise_sigma = 0.0;      // m
  double comms_radius = 100.0;          // m
  double car_length = 5.0;              // m
  double v_max = 20.0;                  // m/s
  double a_max = 4.0;                   // m/s^2, braking magnitude
  double t_react = 1.0;                 // s
  double d_min = 2.0;                   // m, standstill gap
  LightDurations light_durations;
  double beacon_ttl = 1.0;              // s
  int decision_rounds = 1;              // comms rounds per step
  std::uint64_t rng_seed = 42;

  double p_loss = 0.0;                  // per-delivery beacon loss probability
  double vision_noise_sigma = 0.0;      // camera noise, fraction of full scale
  bool oracle_mode = false;             // cars act on perfect-information decisions

  // Throws std::invalid_argument on any violated invariant.
  void validate() const;
};

// A single vehicle. `direction == Stopped` iff speed == 0; engine Stop forces
// speed 0 at the end of every step.
struct CarState {
  CarId car_id = 0;
  int lane = 0;
  double position = 0.0;     // m along the lane
  double speed = 0.0;        // m/s, >= 0
  EngineState engine = EngineState::Moving;
  Direction direction = Direction::Forward;
  double destination = 0.0;  // m along the lane
};

struct RangeReading {
  double gap = 0.0;        // m, in [0, sensor_range]
  bool saturated = false;  // true when nothing was detected within range
};

// Bumper-to-bumper gaps in the four directions. A missing adjacent lane reads
// as gap 0 with saturated = false (a wall).
struct SensorReading {
  RangeReading front;
  RangeReading back;
  RangeReading left;
  RangeReading right;
};

// Gap picture after fusing the sensor reading with network-table rows.
// Unconstrained directions are +infinity, so these are not SensorReadings:
// they may exceed sensor_range when a beacon reports a car beyond it.
struct FusedView {
  double front_gap = 0.0;
  double back_gap = 0.0;
  double left_gap = 0.0;
  double right_gap = 0.0;
  std::optional<double> follower_speed;  // beaconed speed of nearest car behind
};

}  // namespace icar
