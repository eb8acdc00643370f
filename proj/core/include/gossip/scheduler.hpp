#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gossip/channel.hpp"
#include "gossip/opinion.hpp"
#include "gossip/random_stream.hpp"

namespace gossip {

enum class ModelKind {
  UniformPull,
  UniformPush,
  UniformGossip,
  GeneralPull,
  GeneralPush,
  PopulationUniform,
};

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

// One directed delivery. For pull-style communication the sender is the
// pulled target and the receiver is the puller.
struct DeliveryEvent {
  std::uint32_t sender;
  std::uint32_t receiver;
  std::uint8_t bit_sent;
  std::uint8_t bit_received;

  bool operator==(const DeliveryEvent&) const = default;
};

struct RoundTranscript {
  ModelKind model;
  std::vector<DeliveryEvent> events;

  bool operator==(const RoundTranscript&) const = default;
};

// One synchronous k-pull round: every node draws k uniform targets
// (self included, with replacement) and receives each target's displayed
// bit through the channel. zero_counts[u] is how many of node u's k
// observations showed opinion 0.
struct PullRoundResult {
  std::vector<std::uint32_t> zero_counts;
  RoundTranscript transcript;
};
PullRoundResult pull_round(const OpinionVector& displayed, const NoiseChannel& ch,
                           int pulls_per_node, RandomStream& rng);

// One uniform PUSH round for content-free dynamics: every node sends one
// message to a uniformly random other node. (Protocols may decline to
// send; the infection experiments never do.)
RoundTranscript push_round(std::size_t n, RandomStream& rng);

// One uniform GOSSIP round: every node calls one uniformly random other
// node; a call delivers a message in both directions. Events appear as
// caller->callee, callee->caller pairs.
RoundTranscript gossip_round(std::size_t n, RandomStream& rng);

// Calls placed per node in a gossip transcript (balls-into-bins profile).
std::vector<std::uint32_t> received_calls_per_node(const RoundTranscript& transcript,
                                                   std::size_t n);

// Per-node infected flags with multi-source support. Sources stay
// infected forever and the infected set only grows.
class InfectionState {
 public:
  InfectionState(std::size_t n, std::vector<std::uint32_t> sources);

  std::size_t size() const { return infected_.size(); }
  bool infected(std::size_t node) const { return infected_[node] != 0; }
  std::int64_t infected_count() const { return infected_count_; }
  const std::vector<std::uint32_t>& sources() const { return sources_; }

  void infect(std::size_t node);

  bool operator==(const InfectionState&) const = default;

 private:
  std::vector<std::uint8_t> infected_;
  std::vector<std::uint32_t> sources_;
  std::int64_t infected_count_;
};

// Applies one round of deliveries: every receiver of a message whose
// sender was infected at the start of the round becomes infected.
// Message content and channel noise are irrelevant.
InfectionState infection_round(ModelKind model, const InfectionState& state,
                               const RoundTranscript& transcript);

// One population-protocol step: a uniformly random ordered pair of
// distinct nodes interacts. One step is one pairwise interaction;
// parallel time is steps / n.
struct PopulationStep {
  std::uint32_t activator;
  std::uint32_t responder;
};
PopulationStep population_step(std::size_t n, RandomStream& rng);

// Interaction is bidirectional: infection crosses the activated edge
// either way.
void apply_population_step(InfectionState& state, const PopulationStep& step);

}  // namespace gossip
