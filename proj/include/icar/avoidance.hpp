#pragma once

#include "icar/beacon.hpp"
#include "icar/types.hpp"

namespace icar {

class World;

// Minimum safe headway: standstill gap + reaction distance + braking distance.
// Strictly increasing in speed.
double required_gap(double speed, const WorldConfig& cfg);

// Clearance needed beside the car before a lane change.
inline double lateral_clearance(const WorldConfig& cfg) { return cfg.car_length + cfg.d_min; }

// Bumper-to-bumper gap for a center-to-center longitudinal distance.
inline double bumper_gap(double distance, const WorldConfig& cfg) {
  double g = distance - cfg.car_length;
  return g > 0.0 ? g : 0.0;
}

// Fuses the sensor reading with the network table: per direction, the minimum
// of the measured gap and every gap implied by a table row in that direction,
// with beacon positions dead-reckoned forward by speed x age. A saturated
// sensor channel contributes nothing (it means "clear as far as I can see"),
// which is how beacons extend perception beyond sensor range. Rows about the
// car itself are ignored so shared snapshots can be fused safely.
FusedView fuse_gaps(const SensorReading& reading, const NetworkTable& table,
                    const CarState& car, const WorldConfig& cfg, double now);

// The rule cascade, first match wins:
//   1. engine not Moving                      -> Hold
//   2. front clear (>= required_gap)          -> Accelerate if >= 2x, else KeepLane
//   3. front short, back clear for follower   -> Brake
//   4. both short, side clear                 -> MoveLeft, else MoveRight
//   5. everything blocked                     -> EmergencyBrake
Decision decide(const FusedView& view, const CarState& car, const WorldConfig& cfg);

Decision decide(const SensorReading& reading, const NetworkTable& table,
                const CarState& car, const WorldConfig& cfg, double now);

// Same cascade fed with perfect inputs: a noise-free reading and a network
// table holding every other car at zero age. The referee for accuracy.
Decision oracle_decide(const World& world, CarId car_id);

// The perfect inputs themselves, shared with the closed-loop oracle mode.
FusedView oracle_view(const World& world, CarId car_id);

}  // namespace icar
