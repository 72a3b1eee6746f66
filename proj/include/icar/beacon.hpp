#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "icar/types.hpp"

namespace icar {

// Single-hop V2V broadcast message: the sender's present state plus the
// decision it committed most recently.
struct Beacon {
  CarId sender_id = 0;
  double sent_at = 0.0;  // simulation seconds
  int lane = 0;
  double position = 0.0;
  double speed = 0.0;
  EngineState engine = EngineState::Moving;
  Direction direction = Direction::Forward;
  Decision intended_decision = Decision::KeepLane;

  bool operator==(const Beacon&) const = default;
};

// Wire layout, all integers little-endian, doubles as little-endian IEEE-754:
//   sender_id u64 | sent_at f64 | lane u16 | position f64 | speed f64 |
//   engine u8 (0=Stop,1=Active,2=Moving) | direction u8 | decision u8
inline constexpr std::size_t kBeaconWireSize = 37;

std::array<std::uint8_t, kBeaconWireSize> encode_beacon(const Beacon& beacon);

// Throws std::invalid_argument on short input or out-of-range enum bytes.
Beacon decode_beacon(std::span<const std::uint8_t> bytes);

struct NetworkRow {
  Beacon beacon;
  double receive_time = 0.0;
};

// Latest beacon per neighbor, at most one row per sender, never the owner.
struct NetworkTable {
  CarId owner_id = 0;
  std::vector<NetworkRow> rows;  // sorted by sender_id

  const NetworkRow* find(CarId sender) const;
  bool contains(CarId sender) const { return find(sender) != nullptr; }
};

// Merges incoming beacons (newer sent_at wins, equal sent_at keeps the
// existing row, the owner's own id is ignored), then evicts every row with
// now - receive_time > ttl.
void update_network_table(NetworkTable& table, std::span<const Beacon> incoming,
                          double now, double ttl);

// Owner's own state snapshot for the current step.
struct PresentRecord {
  CarState car;
  double recorded_at = 0.0;
};

// The committed next decision, the direction it implies, and which neighbors
// were close enough to matter for it.
struct DecisionRecord {
  Decision next_decision = Decision::Hold;
  Direction next_direction = Direction::Stopped;
  std::vector<CarId> basis;  // subset of the network table keys, sorted
};

DecisionRecord build_decision_record(const PresentRecord& present, const NetworkTable& table,
                                     double destination, Decision decision,
                                     const WorldConfig& cfg, double now);

}  // namespace icar
