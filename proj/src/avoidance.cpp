#include "icar/avoidance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "icar/world.hpp"

namespace icar {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double required_gap(double speed, const WorldConfig& cfg) {
  return cfg.d_min + speed * cfg.t_react + speed * speed / (2.0 * cfg.a_max);
}

FusedView fuse_gaps(const SensorReading& reading, const NetworkTable& table,
                    const CarState& car, const WorldConfig& cfg, double now) {
  FusedView view;
  view.front_gap = reading.front.saturated ? kInf : reading.front.gap;
  view.back_gap = reading.back.saturated ? kInf : reading.back.gap;
  view.left_gap = reading.left.saturated ? kInf : reading.left.gap;
  view.right_gap = reading.right.saturated ? kInf : reading.right.gap;

  double follower_distance = kInf;
  for (const NetworkRow& row : table.rows) {
    const Beacon& b = row.beacon;
    if (b.sender_id == car.car_id) continue;
    const double age = now - b.sent_at;
    const double pos = b.position + b.speed * age;  // constant-velocity dead reckoning
    const double delta = pos - car.position;
    if (b.lane == car.lane) {
      if (delta >= 0.0) {
        view.front_gap = std::min(view.front_gap, bumper_gap(delta, cfg));
      } else {
        view.back_gap = std::min(view.back_gap, bumper_gap(-delta, cfg));
        if (-delta < follower_distance) {
          follower_distance = -delta;
          view.follower_speed = b.speed;
        }
      }
    } else if (b.lane == car.lane - 1 && std::abs(delta) <= cfg.car_length) {
      view.left_gap = std::min(view.left_gap, bumper_gap(std::abs(delta), cfg));
    } else if (b.lane == car.lane + 1 && std::abs(delta) <= cfg.car_length) {
      view.right_gap = std::min(view.right_gap, bumper_gap(std::abs(delta), cfg));
    }
  }
  return view;
}

Decision decide(const FusedView& view, const CarState& car, const WorldConfig& cfg) {
  if (car.engine != EngineState::Moving) return Decision::Hold;

  const double req = required_gap(car.speed, cfg);
  if (view.front_gap >= req)
    return view.front_gap >= 2.0 * req ? Decision::Accelerate : Decision::KeepLane;

  // Front too short: braking is safe if the car behind has room to react,
  // judged at the follower's own speed when a beacon told us what it is.
  const double follower_speed = view.follower_speed.value_or(car.speed);
  if (view.back_gap >= required_gap(follower_speed, cfg)) return Decision::Brake;

  const double clearance = lateral_clearance(cfg);
  if (view.left_gap >= clearance) return Decision::MoveLeft;
  if (view.right_gap >= clearance) return Decision::MoveRight;
  return Decision::EmergencyBrake;
}

Decision decide(const SensorReading& reading, const NetworkTable& table,
                const CarState& car, const WorldConfig& cfg, double now) {
  return decide(fuse_gaps(reading, table, car, cfg, now), car, cfg);
}

namespace {

// Every other car as a zero-age table row, as if a lossless beacon from each
// had just arrived.
NetworkTable full_table(const World& world, CarId owner) {
  NetworkTable table;
  table.owner_id = owner;
  const double now = world.clock();
  for (CarId id : world.car_ids()) {
    if (id == owner) continue;
    const CarState& s = world.car(id);
    Beacon b;
    b.sender_id = s.car_id;
    b.sent_at = now;
    b.lane = s.lane;
    b.position = s.position;
    b.speed = s.speed;
    b.engine = s.engine;
    b.direction = s.direction;
    b.intended_decision = world.last_decision(id);
    table.rows.push_back(NetworkRow{b, now});
  }
  return table;
}

}  // namespace

FusedView oracle_view(const World& world, CarId car_id) {
  return fuse_gaps(world.perfect_reading(car_id), full_table(world, car_id),
                   world.car(car_id), world.config(), world.clock());
}

Decision oracle_decide(const World& world, CarId car_id) {
  return decide(oracle_view(world, car_id), world.car(car_id), world.config());
}

}  // namespace icar
