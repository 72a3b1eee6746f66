#include "icar/beacon.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "icar/avoidance.hpp"

namespace icar {

namespace {

void put_u64(std::uint8_t* out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

void put_u16(std::uint8_t* out, std::uint16_t v) {
  out[0] = static_cast<std::uint8_t>(v);
  out[1] = static_cast<std::uint8_t>(v >> 8);
}

void put_f64(std::uint8_t* out, double v) {
  put_u64(out, std::bit_cast<std::uint64_t>(v));
}

std::uint64_t get_u64(const std::uint8_t* in) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(in[i]) << (8 * i);
  return v;
}

std::uint16_t get_u16(const std::uint8_t* in) {
  return static_cast<std::uint16_t>(in[0] | (in[1] << 8));
}

double get_f64(const std::uint8_t* in) {
  return std::bit_cast<double>(get_u64(in));
}

}  // namespace

std::array<std::uint8_t, kBeaconWireSize> encode_beacon(const Beacon& beacon) {
  std::array<std::uint8_t, kBeaconWireSize> out{};
  put_u64(&out[0], beacon.sender_id);
  put_f64(&out[8], beacon.sent_at);
  put_u16(&out[16], static_cast<std::uint16_t>(beacon.lane));
  put_f64(&out[18], beacon.position);
  put_f64(&out[26], beacon.speed);
  out[34] = static_cast<std::uint8_t>(beacon.engine);
  out[35] = static_cast<std::uint8_t>(beacon.direction);
  out[36] = static_cast<std::uint8_t>(beacon.intended_decision);
  return out;
}

Beacon decode_beacon(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kBeaconWireSize)
    throw std::invalid_argument("decode_beacon: short record");
  Beacon b;
  b.sender_id = get_u64(&bytes[0]);
  b.sent_at = get_f64(&bytes[8]);
  b.lane = get_u16(&bytes[16]);
  b.position = get_f64(&bytes[18]);
  b.speed = get_f64(&bytes[26]);
  if (bytes[34] > 2) throw std::invalid_argument("decode_beacon: bad engine byte");
  if (bytes[35] > 3) throw std::invalid_argument("decode_beacon: bad direction byte");
  if (bytes[36] > 6) throw std::invalid_argument("decode_beacon: bad decision byte");
  b.engine = static_cast<EngineState>(bytes[34]);
  b.direction = static_cast<Direction>(bytes[35]);
  b.intended_decision = static_cast<Decision>(bytes[36]);
  return b;
}

const NetworkRow* NetworkTable::find(CarId sender) const {
  auto it = std::lower_bound(rows.begin(), rows.end(), sender,
                             [](const NetworkRow& r, CarId id) { return r.beacon.sender_id < id; });
  if (it == rows.end() || it->beacon.sender_id != sender) return nullptr;
  return &*it;
}

void update_network_table(NetworkTable& table, std::span<const Beacon> incoming,
                          double now, double ttl) {
  for (const Beacon& b : incoming) {
    if (b.sender_id == table.owner_id) continue;
    auto it = std::lower_bound(
        table.rows.begin(), table.rows.end(), b.sender_id,
        [](const NetworkRow& r, CarId id) { return r.beacon.sender_id < id; });
    if (it != table.rows.end() && it->beacon.sender_id == b.sender_id) {
      if (b.sent_at > it->beacon.sent_at) *it = NetworkRow{b, now};  // newer wins, ties keep old
    } else {
      table.rows.insert(it, NetworkRow{b, now});
    }
  }
  std::erase_if(table.rows,
                [&](const NetworkRow& r) { return now - r.receive_time > ttl; });
}

DecisionRecord build_decision_record(const PresentRecord& present, const NetworkTable& table,
                                     double destination, Decision decision,
                                     const WorldConfig& cfg, double now) {
  DecisionRecord record;
  record.next_decision = decision;

  const bool arrived = present.car.position >= destination;
  switch (decision) {
    case Decision::MoveLeft: record.next_direction = Direction::LateralLeft; break;
    case Decision::MoveRight: record.next_direction = Direction::LateralRight; break;
    case Decision::Hold: record.next_direction = Direction::Stopped; break;
    default:
      record.next_direction = arrived ? Direction::Stopped : Direction::Forward;
      break;
  }

  // Neighbors close enough to have influenced the decision: within twice the
  // required gap longitudinally, positions dead-reckoned to now.
  const double window = 2.0 * required_gap(present.car.speed, cfg);
  for (const NetworkRow& row : table.rows) {
    const double age = now - row.beacon.sent_at;
    const double pos = row.beacon.position + row.beacon.speed * age;
    if (std::abs(pos - present.car.position) <= window)
      record.basis.push_back(row.beacon.sender_id);
  }
  return record;
}

}  // namespace icar
