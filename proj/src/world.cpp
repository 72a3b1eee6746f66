#include "icar/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "icar/avoidance.hpp"
#include "icar/engine.hpp"
#include "icar/rng.hpp"
#include "icar/vision.hpp"

namespace icar {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// Noise channel ids for the per-query sensor substreams.
enum Channel : std::uint64_t { kFront = 0, kBack = 1, kLeft = 2, kRight = 3 };
}  // namespace

World::World(WorldConfig config, ScenarioSpec scenario) : cfg_(config) {
  cfg_.validate();

  cars_.reserve(scenario.cars.size());
  for (const auto& spec : scenario.cars) {
    Car car;
    car.state.car_id = spec.id;
    car.state.lane = spec.lane;
    car.state.position = spec.position;
    car.state.speed = spec.speed;
    car.state.engine = spec.engine;
    car.state.direction = spec.speed > 0.0 ? Direction::Forward : Direction::Stopped;
    car.state.destination = spec.destination;
    car.table.owner_id = spec.id;
    car.last_decision = spec.engine == EngineState::Moving ? Decision::KeepLane : Decision::Hold;
    car.record.next_decision = car.last_decision;
    car.record.next_direction = car.state.direction;

    if (spec.lane < 0 || spec.lane >= cfg_.lane_count)
      throw std::invalid_argument("scenario: car " + std::to_string(spec.id) +
                                  " lane " + std::to_string(spec.lane) + " out of range");
    if (spec.position < 0.0 || spec.position > cfg_.lane_length)
      throw std::invalid_argument("scenario: car " + std::to_string(spec.id) +
                                  " position outside the lane");
    if (spec.speed < 0.0 || spec.speed > cfg_.v_max)
      throw std::invalid_argument("scenario: car " + std::to_string(spec.id) +
                                  " speed outside [0, v_max]");
    if (spec.destination < 0.0 || spec.destination > cfg_.lane_length)
      throw std::invalid_argument("scenario: car " + std::to_string(spec.id) +
                                  " destination outside the lane");
    if (spec.engine != EngineState::Moving && spec.speed > 0.0)
      throw std::invalid_argument("scenario: car " + std::to_string(spec.id) +
                                  " has speed > 0 with a non-Moving engine");
    cars_.push_back(std::move(car));
  }

  std::sort(cars_.begin(), cars_.end(),
            [](const Car& a, const Car& b) { return a.state.car_id < b.state.car_id; });
  for (std::size_t i = 1; i < cars_.size(); ++i)
    if (cars_[i].state.car_id == cars_[i - 1].state.car_id)
      throw std::invalid_argument("scenario: duplicate car id " +
                                  std::to_string(cars_[i].state.car_id));

  // Same-lane placements must be separated by more than a car length.
  for (std::size_t i = 0; i < cars_.size(); ++i) {
    for (std::size_t j = i + 1; j < cars_.size(); ++j) {
      const CarState& a = cars_[i].state;
      const CarState& b = cars_[j].state;
      if (a.lane == b.lane && std::abs(a.position - b.position) <= cfg_.car_length)
        throw std::invalid_argument("scenario: cars " + std::to_string(a.car_id) + " and " +
                                    std::to_string(b.car_id) + " overlap in lane " +
                                    std::to_string(a.lane));
    }
  }

  lights_.reserve(scenario.lights.size());
  for (const auto& spec : scenario.lights) {
    if (spec.lane < 0 || spec.lane >= cfg_.lane_count)
      throw std::invalid_argument("scenario: light " + std::to_string(spec.id) +
                                  " lane out of range");
    if (spec.position < 0.0 || spec.position > cfg_.lane_length)
      throw std::invalid_argument("scenario: light " + std::to_string(spec.id) +
                                  " position outside the lane");
    TrafficLight light;
    light.light_id = spec.id;
    light.lane = spec.lane;
    light.position = spec.position;
    light.phase = spec.initial_phase;
    light.remaining = phase_duration(cfg_.light_durations, spec.initial_phase);
    lights_.push_back(light);
  }
}

std::vector<CarId> World::car_ids() const {
  std::vector<CarId> ids;
  ids.reserve(cars_.size());
  for (const Car& c : cars_) ids.push_back(c.state.car_id);
  return ids;
}

const World::Car& World::find(CarId car_id) const {
  auto it = std::lower_bound(cars_.begin(), cars_.end(), car_id,
                             [](const Car& c, CarId id) { return c.state.car_id < id; });
  if (it == cars_.end() || it->state.car_id != car_id)
    throw std::invalid_argument("unknown car id " + std::to_string(car_id));
  return *it;
}

World::Car& World::find(CarId car_id) {
  return const_cast<Car&>(std::as_const(*this).find(car_id));
}

const CarState& World::car(CarId car_id) const { return find(car_id).state; }
const NetworkTable& World::network_table(CarId car_id) const { return find(car_id).table; }
const DecisionRecord& World::decision_record(CarId car_id) const { return find(car_id).record; }
Decision World::last_decision(CarId car_id) const { return find(car_id).last_decision; }

std::pair<double, double> World::route_hint(CarId car_id) const {
  const CarState& s = car(car_id);
  return {s.position, s.destination};
}

std::optional<double> World::true_front_gap(CarId car_id) const {
  const CarState& me = car(car_id);
  double nearest = kInf;
  for (const Car& other : cars_) {
    if (other.state.car_id == car_id || other.state.lane != me.lane) continue;
    const double delta = other.state.position - me.position;
    if (delta >= 0.0) nearest = std::min(nearest, delta);
  }
  if (nearest == kInf) return std::nullopt;
  return bumper_gap(nearest, cfg_);
}

SensorReading World::reading_for(const Car& car, bool with_noise) const {
  const CarState& me = car.state;
  double front_d = kInf, back_d = kInf, left_d = kInf, right_d = kInf;
  for (const Car& other : cars_) {
    if (other.state.car_id == me.car_id) continue;
    const double delta = other.state.position - me.position;
    if (other.state.lane == me.lane) {
      if (delta >= 0.0)
        front_d = std::min(front_d, delta);
      else
        back_d = std::min(back_d, -delta);
    } else if (std::abs(delta) <= cfg_.car_length) {
      // Lateral channels only see cars alongside: within one car length.
      if (other.state.lane == me.lane - 1)
        left_d = std::min(left_d, std::abs(delta));
      else if (other.state.lane == me.lane + 1)
        right_d = std::min(right_d, std::abs(delta));
    }
  }

  auto channel = [&](double distance, std::uint64_t ch) -> RangeReading {
    double gap = distance == kInf ? kInf : bumper_gap(distance, cfg_);
    if (gap >= cfg_.sensor_range) return {cfg_.sensor_range, true};
    if (with_noise && cfg_.sensor_noise_sigma > 0.0) {
      gap += cfg_.sensor_noise_sigma *
             rng::gaussian(rng::key(cfg_.rng_seed, rng::kTagSense, me.car_id,
                                    static_cast<std::uint64_t>(step_index_), ch));
      gap = std::clamp(gap, 0.0, cfg_.sensor_range);
    }
    return {gap, false};
  };

  SensorReading reading;
  reading.front = channel(front_d, kFront);
  reading.back = channel(back_d, kBack);
  // A missing adjacent lane is a wall: gap 0, not saturated, no noise.
  reading.left = me.lane - 1 < 0 ? RangeReading{0.0, false} : channel(left_d, kLeft);
  reading.right = me.lane + 1 >= cfg_.lane_count ? RangeReading{0.0, false} : channel(right_d, kRight);
  return reading;
}

SensorReading World::sense(CarId car_id) const { return reading_for(find(car_id), true); }
SensorReading World::perfect_reading(CarId car_id) const { return reading_for(find(car_id), false); }

std::vector<CollisionEvent> World::detect_collisions() const {
  // Sort by (lane, position) and slide a window: positions are ascending, so
  // once a pair is separated by more than a car length, later ones are too.
  std::vector<const Car*> order;
  order.reserve(cars_.size());
  for (const Car& c : cars_) order.push_back(&c);
  std::sort(order.begin(), order.end(), [](const Car* a, const Car* b) {
    if (a->state.lane != b->state.lane) return a->state.lane < b->state.lane;
    return a->state.position < b->state.position;
  });

  std::vector<CollisionEvent> events;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const CarState& a = order[i]->state;
      const CarState& b = order[j]->state;
      if (a.lane != b.lane || b.position - a.position >= cfg_.car_length) break;
      CollisionEvent ev;
      ev.step_index = step_index_;
      ev.car_a = std::min(a.car_id, b.car_id);
      ev.car_b = std::max(a.car_id, b.car_id);
      ev.lane = a.lane;
      events.push_back(ev);
    }
  }
  std::sort(events.begin(), events.end(), [](const CollisionEvent& a, const CollisionEvent& b) {
    return std::tie(a.car_a, a.car_b) < std::tie(b.car_a, b.car_b);
  });
  return events;
}

std::vector<std::pair<CarId, Beacon>> World::broadcast(CarId sender_id, int round_index) const {
  const CarState& sender = car(sender_id);

  Beacon beacon;
  beacon.sender_id = sender.car_id;
  beacon.sent_at = clock_;
  beacon.lane = sender.lane;
  beacon.position = sender.position;
  beacon.speed = sender.speed;
  beacon.engine = sender.engine;
  beacon.direction = sender.direction;
  beacon.intended_decision = find(sender_id).last_decision;

  std::vector<std::pair<CarId, Beacon>> deliveries;
  const double radius_sq = cfg_.comms_radius * cfg_.comms_radius;
  for (const Car& other : cars_) {
    if (other.state.car_id == sender_id) continue;
    const double dx = other.state.position - sender.position;
    const double dy = (other.state.lane - sender.lane) * kLaneWidth;
    if (dx * dx + dy * dy > radius_sq) continue;
    if (cfg_.p_loss > 0.0) {
      const double u = rng::unit(rng::key(cfg_.rng_seed, rng::kTagLoss,
                                          static_cast<std::uint64_t>(step_index_),
                                          static_cast<std::uint64_t>(round_index), sender_id,
                                          other.state.car_id));
      if (u < cfg_.p_loss) continue;
    }
    deliveries.emplace_back(other.state.car_id, beacon);
  }
  return deliveries;
}

int World::comms_round(int round_index) {
  // All broadcasts read the same pre-round snapshot; merges apply afterward,
  // so iteration order cannot matter.
  std::vector<std::vector<Beacon>> inboxes(cars_.size());
  int delivered = 0;
  for (const Car& sender : cars_) {
    for (auto& [receiver, beacon] : broadcast(sender.state.car_id, round_index)) {
      const std::size_t idx = static_cast<std::size_t>(
          std::lower_bound(cars_.begin(), cars_.end(), receiver,
                           [](const Car& c, CarId id) { return c.state.car_id < id; }) -
          cars_.begin());
      inboxes[idx].push_back(beacon);
      ++delivered;
    }
  }
  for (std::size_t i = 0; i < cars_.size(); ++i)
    update_network_table(cars_[i].table, inboxes[i], clock_, cfg_.beacon_ttl);
  return delivered;
}

const TrafficLight* World::nearest_facing_light(const CarState& car) const {
  const TrafficLight* best = nullptr;
  double best_distance = kInf;
  for (const TrafficLight& light : lights_) {
    if (light.lane != car.lane) continue;
    const double distance = light.position - car.position;
    if (distance < 0.0 || distance > cfg_.sensor_range) continue;
    if (distance < best_distance) {
      best_distance = distance;
      best = &light;
    }
  }
  return best;
}

StepReport World::step() {
  StepReport report;
  report.step_index = step_index_;

  // 1. lights advance
  for (TrafficLight& light : lights_)
    light = light_step(light, cfg_.time_step, cfg_.light_durations);

  // 2. every car senses
  std::vector<SensorReading> readings(cars_.size());
  for (std::size_t i = 0; i < cars_.size(); ++i) readings[i] = reading_for(cars_[i], true);

  // 3. vision on the nearest facing light
  std::vector<std::optional<EngineCommand>> commands(cars_.size());
  for (std::size_t i = 0; i < cars_.size(); ++i) {
    const Car& car = cars_[i];
    if (const TrafficLight* light = nearest_facing_light(car.state)) {
      const std::uint64_t key = rng::key(cfg_.rng_seed, rng::kTagVision, car.state.car_id,
                                         static_cast<std::uint64_t>(step_index_));
      const auto color = vision::classify(render_patch(light->phase, cfg_.vision_noise_sigma, key));
      // No glowing lamp: hold the previous command.
      commands[i] = color ? vision::color_to_command(*color) : car.last_command;
    }
  }

  // 4. comms rounds
  for (int round = 0; round < cfg_.decision_rounds; ++round)
    report.beacons_delivered += comms_round(round);
  report.rounds_run = cfg_.decision_rounds;

  // 5. decisions, all from the step-entry snapshot
  std::vector<FusedView> views(cars_.size());
  std::vector<Decision> decisions(cars_.size());
  for (std::size_t i = 0; i < cars_.size(); ++i) {
    Car& car = cars_[i];
    views[i] = cfg_.oracle_mode
                   ? oracle_view(*this, car.state.car_id)
                   : fuse_gaps(readings[i], car.table, car.state, cfg_, clock_);
    decisions[i] = decide(views[i], car.state, cfg_);
    car.record = build_decision_record(PresentRecord{car.state, clock_}, car.table,
                                       car.state.destination, decisions[i], cfg_, clock_);
    report.decisions.emplace_back(car.state.car_id, decisions[i]);
  }

  // 6. engines transition, speeds update, lane changes apply
  for (std::size_t i = 0; i < cars_.size(); ++i) {
    Car& car = cars_[i];
    if (commands[i]) {
      car.state.engine = engine_transition(car.state.engine, *commands[i]);
      car.last_command = commands[i];
    }
    car.state.speed = speed_update(car.state, decisions[i], views[i], cfg_, cfg_.time_step);
    if (car.state.engine == EngineState::Stop) car.state.speed = 0.0;  // off means parked
    if (decisions[i] == Decision::MoveLeft && car.state.lane > 0)
      car.state.lane -= 1;
    else if (decisions[i] == Decision::MoveRight && car.state.lane < cfg_.lane_count - 1)
      car.state.lane += 1;
  }

  // 7. positions integrate, clamped at the lane end
  for (std::size_t i = 0; i < cars_.size(); ++i) {
    CarState& s = cars_[i].state;
    s.position += s.speed * cfg_.time_step;
    if (s.position >= cfg_.lane_length) {
      s.position = cfg_.lane_length;
      s.speed = 0.0;
    }
    if (s.speed == 0.0)
      s.direction = Direction::Stopped;
    else if (decisions[i] == Decision::MoveLeft)
      s.direction = Direction::LateralLeft;
    else if (decisions[i] == Decision::MoveRight)
      s.direction = Direction::LateralRight;
    else
      s.direction = Direction::Forward;
    cars_[i].last_decision = decisions[i];
  }

  // 8. collisions
  clock_ += cfg_.time_step;
  step_index_ += 1;
  report.collisions = detect_collisions();
  for (CollisionEvent& ev : report.collisions) ev.step_index = report.step_index;
  report.clock_after = clock_;
  return report;
}

}  // namespace icar
