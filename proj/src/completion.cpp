#include "mia/completion.hpp"

namespace mia {

Mia angelic_completion(const Mia& m) {
  std::vector<Transition> must = m.must_transitions();
  std::vector<Transition> may = m.may_transitions();
  for (std::uint32_t s = 0; s < m.state_count(); ++s) {
    for (std::uint32_t i = 0; i < m.alphabet().input_count(); ++i) {
      if (m.has_transition(s, i, Modality::kMust)) continue;
      Transition loop{m.state_name(s), m.alphabet().action_name(i),
                      m.state_name(s)};
      must.push_back(loop);
      may.push_back(std::move(loop));
    }
  }
  return Mia(m.name() + "_ac", m.alphabet(), m.states(), m.initial(),
             std::move(must), std::move(may));
}

std::string chaotic_sink_name(const Mia& m) {
  std::string name = "__chaos";
  int suffix = 0;
  while (m.state_id(name)) name = "__chaos" + std::to_string(++suffix);
  return name;
}

Mia chaotic_completion(const Mia& m) {
  std::string sink = chaotic_sink_name(m);
  std::vector<std::string> states = m.states();
  states.push_back(sink);
  std::vector<Transition> must = m.must_transitions();
  std::vector<Transition> may = m.may_transitions();
  auto add = [&](std::string src, const std::string& action,
                 const std::string& dst) {
    Transition t{std::move(src), action, dst};
    must.push_back(t);
    may.push_back(std::move(t));
  };
  for (std::uint32_t s = 0; s < m.state_count(); ++s) {
    for (std::uint32_t i = 0; i < m.alphabet().input_count(); ++i) {
      if (m.has_transition(s, i, Modality::kMust)) continue;
      add(m.state_name(s), m.alphabet().action_name(i), sink);
    }
  }
  for (const std::string& input : m.alphabet().inputs()) add(sink, input, sink);
  return Mia(m.name() + "_cc", m.alphabet(), std::move(states), m.initial(),
             std::move(must), std::move(may));
}

}  // namespace mia
