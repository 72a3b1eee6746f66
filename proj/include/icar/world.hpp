#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "icar/beacon.hpp"
#include "icar/signals.hpp"
#include "icar/types.hpp"

namespace icar {

struct ScenarioSpec {
  struct CarSpec {
    CarId id = 0;
    int lane = 0;
    double position = 0.0;
    double speed = 0.0;
    double destination = 0.0;
    EngineState engine = EngineState::Moving;
  };
  struct LightSpec {
    std::uint64_t id = 0;
    int lane = 0;
    double position = 0.0;
    LightColor initial_phase = LightColor::Green;
  };

  std::vector<CarSpec> cars;
  std::vector<LightSpec> lights;
};

struct CollisionEvent {
  std::int64_t step_index = 0;
  CarId car_a = 0;  // car_a < car_b
  CarId car_b = 0;
  int lane = 0;

  bool operator==(const CollisionEvent&) const = default;
};

struct StepReport {
  std::int64_t step_index = 0;
  double clock_after = 0.0;
  int rounds_run = 0;
  int beacons_delivered = 0;                         // total across rounds
  std::vector<std::pair<CarId, Decision>> decisions;  // sorted by car id
  std::vector<CollisionEvent> collisions;
};

// Lateral separation between adjacent lane centers, used for the comms radius.
inline constexpr double kLaneWidth = 3.5;

// The world model: straight parallel lanes, cars, lights, a fixed-step
// synchronous loop. All mutation happens inside step(); everything else is a
// read-only query, safe between steps. Worlds are plain values and copyable.
class World {
 public:
  // Validates the config and the scenario (lane bounds, same-lane overlap);
  // throws std::invalid_argument with the offending entity on rejection.
  World(WorldConfig config, ScenarioSpec scenario);

  // One simulation step, fixed phase order: lights advance, cars sense, vision
  // runs, `decision_rounds` comms rounds, decisions, engine/speed/lane
  // updates, position integration, collision detection. Every car's decision
  // is a pure function of the state at entry.
  StepReport step();

  // Directional gaps for one car, noise drawn from the per-query substream
  // keyed by (seed, car, step, channel). Re-querying is idempotent.
  SensorReading sense(CarId car_id) const;

  // Noise-free reading with the same geometry and saturation as sense().
  SensorReading perfect_reading(CarId car_id) const;

  // Simulated satellite: exact position and scenario destination.
  std::pair<double, double> route_hint(CarId car_id) const;

  // Same-lane pairs whose bumpers overlap, sorted by (car_a, car_b).
  std::vector<CollisionEvent> detect_collisions() const;

  // Deliveries for one sender's beacon this round: every other car within
  // comms_radius (Euclidean over lane offset x kLaneWidth and position delta),
  // minus seeded per-delivery loss.
  std::vector<std::pair<CarId, Beacon>> broadcast(CarId sender_id, int round_index = 0) const;

  // One simultaneous beacon exchange: all broadcasts read the pre-round
  // snapshot, then every car folds its deliveries into its table. Returns the
  // number of delivered beacons.
  int comms_round(int round_index = 0);

  const WorldConfig& config() const { return cfg_; }
  double clock() const { return clock_; }
  std::int64_t step_index() const { return step_index_; }
  std::size_t car_count() const { return cars_.size(); }
  std::vector<CarId> car_ids() const;
  const CarState& car(CarId car_id) const;
  const std::vector<TrafficLight>& lights() const { return lights_; }
  const NetworkTable& network_table(CarId car_id) const;
  const DecisionRecord& decision_record(CarId car_id) const;
  Decision last_decision(CarId car_id) const;

  // True bumper gap to the nearest same-lane car ahead; nullopt on open road.
  std::optional<double> true_front_gap(CarId car_id) const;

 private:
  struct Car {
    CarState state;
    NetworkTable table;
    std::optional<EngineCommand> last_command;
    Decision last_decision = Decision::KeepLane;
    DecisionRecord record;
  };

  const Car& find(CarId car_id) const;
  Car& find(CarId car_id);
  SensorReading reading_for(const Car& car, bool with_noise) const;
  const TrafficLight* nearest_facing_light(const CarState& car) const;

  WorldConfig cfg_;
  std::vector<Car> cars_;  // sorted by car id
  std::vector<TrafficLight> lights_;
  double clock_ = 0.0;
  std::int64_t step_index_ = 0;
};

}  // namespace icar
