#include "mia/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace mia {

namespace {

const std::vector<std::string> kReservedActionNames = {"delta", "delta_may",
                                                       "delta_must"};

std::string triple_str(const Transition& t) {
  return t.source + " " + t.action + " " + t.target;
}

std::vector<Transition> sorted_unique(std::vector<Transition> ts) {
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

// Canonical order for reports and serialization: declaration order of
// states and actions, not lexicographic.
void sort_canonical(std::vector<Transition>& ts,
                    const std::vector<std::string>& states,
                    const Alphabet& alphabet) {
  std::unordered_map<std::string, std::size_t> state_pos;
  for (std::size_t i = 0; i < states.size(); ++i) state_pos[states[i]] = i;
  auto action_pos = [&](const std::string& a) -> std::size_t {
    auto id = alphabet.action_id(a);
    return id ? *id : alphabet.size();
  };
  std::stable_sort(ts.begin(), ts.end(),
                   [&](const Transition& x, const Transition& y) {
                     auto kx = std::tuple(state_pos[x.source],
                                          action_pos(x.action),
                                          state_pos[x.target]);
                     auto ky = std::tuple(state_pos[y.source],
                                          action_pos(y.action),
                                          state_pos[y.target]);
                     return kx < ky;
                   });
}

void check_report(const RawModel& raw) {
  ValidationReport report = validate(raw);
  if (!report.ok) {
    std::ostringstream os;
    os << "invalid model '" << raw.name << "':";
    for (const Violation& v : report.violations)
      os << "\n  [" << v.rule << "] " << v.message;
    throw Error(ErrorCode::kInvalidModel, os.str());
  }
}

}  // namespace

std::string_view modality_name(Modality m) {
  return m == Modality::kMust ? "must" : "may";
}

Alphabet::Alphabet(std::vector<std::string> inputs,
                   std::vector<std::string> outputs)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
  RawModel probe;
  probe.kind = RawModel::Kind::kIolts;
  probe.name = "alphabet";
  probe.inputs = inputs_;
  probe.outputs = outputs_;
  probe.states = {"q"};
  probe.initial = "q";
  ValidationReport report = validate(probe);
  if (!report.ok) {
    std::ostringstream os;
    os << "invalid alphabet:";
    for (const Violation& v : report.violations) os << " " << v.message;
    throw Error(ErrorCode::kInvalidModel, os.str());
  }
}

const std::string& Alphabet::action_name(std::uint32_t id) const {
  return id < inputs_.size() ? inputs_[id] : outputs_[id - inputs_.size()];
}

std::optional<std::uint32_t> Alphabet::action_id(std::string_view name) const {
  for (std::size_t i = 0; i < inputs_.size(); ++i)
    if (inputs_[i] == name) return static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < outputs_.size(); ++i)
    if (outputs_[i] == name)
      return static_cast<std::uint32_t>(inputs_.size() + i);
  return std::nullopt;
}

bool Alphabet::is_input(std::string_view name) const {
  auto id = action_id(name);
  return id && is_input_id(*id);
}

bool Alphabet::is_output(std::string_view name) const {
  auto id = action_id(name);
  return id && !is_input_id(*id);
}

bool Alphabet::same_actions(const Alphabet& other) const {
  auto as_set = [](const std::vector<std::string>& v) {
    return std::set<std::string>(v.begin(), v.end());
  };
  return as_set(inputs_) == as_set(other.inputs_) &&
         as_set(outputs_) == as_set(other.outputs_);
}

namespace detail {

TransitionIndex::TransitionIndex(std::size_t n_states, std::size_t n_actions)
    : n_actions_(n_actions), slots_(n_states * n_actions) {}

void TransitionIndex::add(std::uint32_t src, std::uint32_t action,
                          std::uint32_t dst) {
  slots_[src * n_actions_ + action].push_back(dst);
}

std::span<const std::uint32_t> TransitionIndex::targets(
    std::uint32_t src, std::uint32_t action) const {
  const auto& v = slots_[src * n_actions_ + action];
  return {v.data(), v.size()};
}

void TransitionIndex::finalize() {
  for (auto& v : slots_) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
}

}  // namespace detail

ValidationReport validate(const RawModel& raw) {
  ValidationReport report;
  auto violate = [&](std::string rule, std::string subject,
                     std::string message) {
    report.violations.push_back(
        {std::move(rule), std::move(subject), std::move(message)});
  };

  // Alphabet rules.
  std::unordered_set<std::string> inputs(raw.inputs.begin(), raw.inputs.end());
  std::unordered_set<std::string> outputs(raw.outputs.begin(),
                                          raw.outputs.end());
  for (const std::string& a : raw.inputs)
    if (outputs.count(a))
      violate("alphabet-disjoint", a,
              "action '" + a + "' declared both input and output");
  for (const std::string& r : kReservedActionNames) {
    if (inputs.count(r) || outputs.count(r))
      violate("reserved-name", r, "action name '" + r + "' is reserved");
  }
  auto check_dup = [&](const std::vector<std::string>& v, const char* what) {
    std::unordered_set<std::string> seen;
    for (const std::string& x : v)
      if (!seen.insert(x).second)
        violate(std::string("duplicate-") + what, x,
                std::string(what) + " '" + x + "' declared twice");
  };
  check_dup(raw.inputs, "input");
  check_dup(raw.outputs, "output");
  check_dup(raw.states, "state");

  std::unordered_set<std::string> states(raw.states.begin(), raw.states.end());
  if (raw.states.empty())
    violate("states-empty", raw.name, "model declares no states");
  if (!states.count(raw.initial))
    violate("initial-unknown", raw.initial,
            "initial state '" + raw.initial + "' is not a declared state");

  auto known_action = [&](const std::string& a) {
    return inputs.count(a) || outputs.count(a);
  };

  // Per-transition endpoint and label rules.
  for (const auto& rt : raw.transitions) {
    const Transition& t = rt.transition;
    std::string where =
        rt.line > 0 ? " (line " + std::to_string(rt.line) + ")" : "";
    if (!states.count(t.source))
      violate("unknown-state", triple_str(t),
              "transition source '" + t.source + "' is not a declared state" +
                  where);
    if (!states.count(t.target))
      violate("unknown-state", triple_str(t),
              "transition target '" + t.target + "' is not a declared state" +
                  where);
    if (!known_action(t.action))
      violate("unknown-action", triple_str(t),
              "transition label '" + t.action + "' is not a declared action" +
                  where);
  }

  if (raw.kind == RawModel::Kind::kMia) {
    std::set<Transition> must;
    std::set<Transition> may;
    for (const auto& rt : raw.transitions) {
      if (rt.modality == Modality::kMust) must.insert(rt.transition);
      may.insert(rt.transition);  // must implies may at load time
    }
    // Syntactic consistency can only be broken by hand-built raw data where
    // the caller split the relations explicitly; the parser closes over it.
    for (const auto& rt : raw.transitions) {
      if (rt.modality == Modality::kMust && !may.count(rt.transition)) {
        violate("syntactic-consistency", triple_str(rt.transition),
                "must transition missing from may relation");
      }
    }
    // Inputs mandatory: a may transition labeled with an input needs the
    // identical must transition.
    for (const Transition& t : may) {
      if (inputs.count(t.action) && !must.count(t)) {
        violate("inputs-mandatory", triple_str(t),
                "input transition '" + triple_str(t) +
                    "' is allowed but not mandatory");
      }
    }
    // Input-determinism on the must relation.
    std::set<std::pair<std::string, std::string>> seen_pair;
    for (const Transition& t : must) {
      if (!inputs.count(t.action)) continue;
      auto key = std::pair(t.source, t.action);
      if (!seen_pair.insert(key).second) {
        violate("input-determinism", t.source + " " + t.action,
                "state '" + t.source + "' has two must transitions for input '" +
                    t.action + "'");
      }
    }
  }

  // Reachability warning over the widest relation available.
  if (states.count(raw.initial) && !raw.states.empty()) {
    std::unordered_map<std::string, std::vector<std::string>> succ;
    for (const auto& rt : raw.transitions)
      succ[rt.transition.source].push_back(rt.transition.target);
    std::unordered_set<std::string> reached = {raw.initial};
    std::vector<std::string> frontier = {raw.initial};
    while (!frontier.empty()) {
      std::string s = std::move(frontier.back());
      frontier.pop_back();
      for (const std::string& n : succ[s])
        if (reached.insert(n).second) frontier.push_back(n);
    }
    for (const std::string& s : raw.states)
      if (!reached.count(s))
        report.warnings.push_back("state '" + s +
                                  "' is unreachable from the initial state");
  }

  report.ok = report.violations.empty();
  return report;
}

Mia::Mia(std::string name, Alphabet alphabet, std::vector<std::string> states,
         const std::string& initial, std::vector<Transition> must,
         std::vector<Transition> may)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      states_(std::move(states)) {
  RawModel raw;
  raw.kind = RawModel::Kind::kMia;
  raw.name = name_;
  raw.inputs = alphabet_.inputs();
  raw.outputs = alphabet_.outputs();
  raw.states = states_;
  raw.initial = initial;
  for (Transition& t : must)
    raw.transitions.push_back({Modality::kMust, std::move(t), 0});
  for (Transition& t : may)
    raw.transitions.push_back({Modality::kMay, std::move(t), 0});
  check_report(raw);

  std::vector<Transition> must_v;
  std::vector<Transition> may_v;
  for (auto& rt : raw.transitions) {
    if (rt.modality == Modality::kMust) must_v.push_back(rt.transition);
    may_v.push_back(rt.transition);
  }
  must_ = sorted_unique(std::move(must_v));
  may_ = sorted_unique(std::move(may_v));
  sort_canonical(must_, states_, alphabet_);
  sort_canonical(may_, states_, alphabet_);

  initial_ = *state_id(initial);
  must_index_ = detail::TransitionIndex(states_.size(), alphabet_.size());
  may_index_ = detail::TransitionIndex(states_.size(), alphabet_.size());
  for (const Transition& t : must_)
    must_index_.add(*state_id(t.source), *alphabet_.action_id(t.action),
                    *state_id(t.target));
  for (const Transition& t : may_)
    may_index_.add(*state_id(t.source), *alphabet_.action_id(t.action),
                   *state_id(t.target));
  must_index_.finalize();
  may_index_.finalize();
}

Mia Mia::from_raw(const RawModel& raw) {
  if (raw.kind != RawModel::Kind::kMia)
    throw Error(ErrorCode::kInvalidModel,
                "model '" + raw.name + "' is not declared as a mia");
  std::vector<Transition> must;
  std::vector<Transition> may;
  for (const auto& rt : raw.transitions) {
    if (rt.modality == Modality::kMust) must.push_back(rt.transition);
    may.push_back(rt.transition);
  }
  return Mia(raw.name, Alphabet(raw.inputs, raw.outputs), raw.states,
             raw.initial, std::move(must), std::move(may));
}

RawModel Mia::to_raw() const {
  RawModel raw;
  raw.kind = RawModel::Kind::kMia;
  raw.name = name_;
  raw.inputs = alphabet_.inputs();
  raw.outputs = alphabet_.outputs();
  raw.states = states_;
  raw.initial = initial();
  for (const Transition& t : must_)
    raw.transitions.push_back({Modality::kMust, t, 0});
  for (const Transition& t : optional_transitions())
    raw.transitions.push_back({Modality::kMay, t, 0});
  return raw;
}

std::vector<Transition> Mia::optional_transitions() const {
  std::set<Transition> must(must_.begin(), must_.end());
  std::vector<Transition> out;
  for (const Transition& t : may_)
    if (!must.count(t)) out.push_back(t);
  return out;
}

std::optional<std::uint32_t> Mia::state_id(std::string_view name) const {
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (states_[i] == name) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

std::span<const std::uint32_t> Mia::targets(std::uint32_t state,
                                            std::uint32_t action,
                                            Modality m) const {
  return m == Modality::kMust ? must_index_.targets(state, action)
                              : may_index_.targets(state, action);
}

bool Mia::has_transition(std::uint32_t state, std::uint32_t action,
                         Modality m) const {
  return !targets(state, action, m).empty();
}

bool Mia::operator==(const Mia& other) const {
  auto set_of = [](const std::vector<Transition>& v) {
    return std::set<Transition>(v.begin(), v.end());
  };
  return alphabet_.same_actions(other.alphabet_) &&
         std::set<std::string>(states_.begin(), states_.end()) ==
             std::set<std::string>(other.states_.begin(),
                                   other.states_.end()) &&
         initial() == other.initial() && set_of(must_) == set_of(other.must_) &&
         set_of(may_) == set_of(other.may_);
}

Iolts::Iolts(std::string name, Alphabet alphabet,
             std::vector<std::string> states, const std::string& initial,
             std::vector<Transition> transitions)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      states_(std::move(states)) {
  RawModel raw;
  raw.kind = RawModel::Kind::kIolts;
  raw.name = name_;
  raw.inputs = alphabet_.inputs();
  raw.outputs = alphabet_.outputs();
  raw.states = states_;
  raw.initial = initial;
  for (Transition& t : transitions)
    raw.transitions.push_back({Modality::kMust, std::move(t), 0});
  check_report(raw);

  std::vector<Transition> v;
  v.reserve(raw.transitions.size());
  for (auto& rt : raw.transitions) v.push_back(rt.transition);
  transitions_ = sorted_unique(std::move(v));
  sort_canonical(transitions_, states_, alphabet_);

  initial_ = *state_id(initial);
  index_ = detail::TransitionIndex(states_.size(), alphabet_.size());
  for (const Transition& t : transitions_)
    index_.add(*state_id(t.source), *alphabet_.action_id(t.action),
               *state_id(t.target));
  index_.finalize();
}

Iolts Iolts::from_raw(const RawModel& raw) {
  if (raw.kind != RawModel::Kind::kIolts)
    throw Error(ErrorCode::kInvalidModel,
                "model '" + raw.name + "' is not declared as an iolts");
  std::vector<Transition> ts;
  for (const auto& rt : raw.transitions) ts.push_back(rt.transition);
  return Iolts(raw.name, Alphabet(raw.inputs, raw.outputs), raw.states,
               raw.initial, std::move(ts));
}

RawModel Iolts::to_raw() const {
  RawModel raw;
  raw.kind = RawModel::Kind::kIolts;
  raw.name = name_;
  raw.inputs = alphabet_.inputs();
  raw.outputs = alphabet_.outputs();
  raw.states = states_;
  raw.initial = initial();
  for (const Transition& t : transitions_)
    raw.transitions.push_back({Modality::kMust, t, 0});
  return raw;
}

std::optional<std::uint32_t> Iolts::state_id(std::string_view name) const {
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (states_[i] == name) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

std::span<const std::uint32_t> Iolts::targets(std::uint32_t state,
                                              std::uint32_t action) const {
  return index_.targets(state, action);
}

bool Iolts::operator==(const Iolts& other) const {
  return alphabet_.same_actions(other.alphabet_) &&
         std::set<std::string>(states_.begin(), states_.end()) ==
             std::set<std::string>(other.states_.begin(),
                                   other.states_.end()) &&
         initial() == other.initial() &&
         std::set<Transition>(transitions_.begin(), transitions_.end()) ==
             std::set<Transition>(other.transitions_.begin(),
                                  other.transitions_.end());
}

Mia embed_iolts(const Iolts& p) {
  // Input-determinism is the one MIA obligation an IOLTS can break.
  for (std::uint32_t s = 0; s < p.state_count(); ++s) {
    for (std::uint32_t a = 0; a < p.alphabet().size(); ++a) {
      if (!p.alphabet().is_input_id(a)) continue;
      if (p.targets(s, a).size() > 1)
        throw Error(ErrorCode::kInputNondeterministic,
                    "state '" + p.state_name(s) +
                        "' has multiple transitions for input '" +
                        p.alphabet().action_name(a) + "'");
    }
  }
  return Mia(p.name(), p.alphabet(), p.states(), p.initial(), p.transitions(),
             p.transitions());
}

Iolts famlts(const Mia& q) {
  return Iolts(q.name() + "_famlts", q.alphabet(), q.states(), q.initial(),
               q.may_transitions());
}

namespace {

template <typename HasFn>
InputEnabledness input_enabledness(const std::vector<std::string>& states,
                                   const std::vector<std::string>& inputs,
                                   HasFn has) {
  InputEnabledness result;
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (!has(static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(i)))
        result.missing.emplace_back(states[s], inputs[i]);
    }
  }
  result.enabled = result.missing.empty();
  return result;
}

}  // namespace

InputEnabledness is_input_enabled(const Mia& m) {
  return input_enabledness(
      m.states(), m.alphabet().inputs(), [&](std::uint32_t s, std::uint32_t i) {
        return m.has_transition(s, i, Modality::kMust);
      });
}

InputEnabledness is_input_enabled(const Iolts& m) {
  return input_enabledness(
      m.states(), m.alphabet().inputs(),
      [&](std::uint32_t s, std::uint32_t i) { return !m.targets(s, i).empty(); });
}

}  // namespace mia
