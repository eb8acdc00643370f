#include "gossip/scheduler.hpp"

#include <stdexcept>

namespace gossip {

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::UniformPull: return "uniform-pull";
    case ModelKind::UniformPush: return "uniform-push";
    case ModelKind::UniformGossip: return "uniform-gossip";
    case ModelKind::GeneralPull: return "general-pull";
    case ModelKind::GeneralPush: return "general-push";
    case ModelKind::PopulationUniform: return "population";
  }
  return "unknown";
}

ModelKind model_kind_from_string(const std::string& name) {
  if (name == "uniform-pull" || name == "pull") return ModelKind::UniformPull;
  if (name == "uniform-push" || name == "push") return ModelKind::UniformPush;
  if (name == "uniform-gossip" || name == "gossip") return ModelKind::UniformGossip;
  if (name == "general-pull") return ModelKind::GeneralPull;
  if (name == "general-push") return ModelKind::GeneralPush;
  if (name == "population") return ModelKind::PopulationUniform;
  throw std::invalid_argument("unknown communication model: " + name);
}

PullRoundResult pull_round(const OpinionVector& displayed, const NoiseChannel& ch,
                           int pulls_per_node, RandomStream& rng) {
  if (pulls_per_node < 1) throw std::invalid_argument("pull_round: need pulls_per_node >= 1");
  const std::size_t n = displayed.size();
  PullRoundResult result;
  result.zero_counts.assign(n, 0);
  result.transcript.model = ModelKind::UniformPull;
  result.transcript.events.reserve(n * static_cast<std::size_t>(pulls_per_node));
  for (std::uint32_t u = 0; u < n; ++u) {
    for (int s = 0; s < pulls_per_node; ++s) {
      const auto target = static_cast<std::uint32_t>(rng.uniform_below(n));
      const int sent = displayed[target];
      const int received = ch.transmit(sent, rng);
      result.zero_counts[u] += (received == 0);
      result.transcript.events.push_back({target, u, static_cast<std::uint8_t>(sent),
                                          static_cast<std::uint8_t>(received)});
    }
  }
  return result;
}

RoundTranscript push_round(std::size_t n, RandomStream& rng) {
  RoundTranscript transcript;
  transcript.model = ModelKind::UniformPush;
  transcript.events.reserve(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    auto target = static_cast<std::uint32_t>(rng.uniform_below(n - 1));
    if (target >= u) ++target;  // uniform over the other n-1 nodes
    transcript.events.push_back({u, target, 0, 0});
  }
  return transcript;
}

RoundTranscript gossip_round(std::size_t n, RandomStream& rng) {
  RoundTranscript transcript;
  transcript.model = ModelKind::UniformGossip;
  transcript.events.reserve(2 * n);
  for (std::uint32_t u = 0; u < n; ++u) {
    auto callee = static_cast<std::uint32_t>(rng.uniform_below(n - 1));
    if (callee >= u) ++callee;
    transcript.events.push_back({u, callee, 0, 0});
    transcript.events.push_back({callee, u, 0, 0});
  }
  return transcript;
}

std::vector<std::uint32_t> received_calls_per_node(const RoundTranscript& transcript,
                                                   std::size_t n) {
  std::vector<std::uint32_t> calls(n, 0);
  // In a gossip transcript every call produces the event pair
  // (caller->callee, callee->caller); count the forward direction only.
  for (std::size_t i = 0; i < transcript.events.size(); i += 2) {
    ++calls[transcript.events[i].receiver];
  }
  return calls;
}

InfectionState::InfectionState(std::size_t n, std::vector<std::uint32_t> sources)
    : infected_(n, 0), sources_(std::move(sources)), infected_count_(0) {
  for (auto s : sources_) {
    if (s >= n) throw std::invalid_argument("InfectionState: source index out of range");
    if (!infected_[s]) {
      infected_[s] = 1;
      ++infected_count_;
    }
  }
}

void InfectionState::infect(std::size_t node) {
  if (!infected_[node]) {
    infected_[node] = 1;
    ++infected_count_;
  }
}

InfectionState infection_round(ModelKind /*model*/, const InfectionState& state,
                               const RoundTranscript& transcript) {
  // Sender status is read from the state at the start of the round:
  // messages within one synchronous round are simultaneous.
  InfectionState next = state;
  for (const auto& event : transcript.events) {
    if (state.infected(event.sender)) next.infect(event.receiver);
  }
  return next;
}

PopulationStep population_step(std::size_t n, RandomStream& rng) {
  const auto activator = static_cast<std::uint32_t>(rng.uniform_below(n));
  auto responder = static_cast<std::uint32_t>(rng.uniform_below(n - 1));
  if (responder >= activator) ++responder;
  return {activator, responder};
}

void apply_population_step(InfectionState& state, const PopulationStep& step) {
  if (state.infected(step.activator)) state.infect(step.responder);
  if (state.infected(step.responder)) state.infect(step.activator);
}

}  // namespace gossip
