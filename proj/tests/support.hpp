#pragma once

// Test-only oracles. Everything here works directly on raw transition
// triples and string tokens, independent of the subset-product engines and
// the SuspensionView indexing in the library, so the two routes can
// cross-check each other.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mia/format.hpp"
#include "mia/model.hpp"
#include "mia/semantics.hpp"

namespace testsupport {

inline std::string fixture(const std::string& name) {
  return std::string(MIA_FIXTURE_DIR) + "/" + name;
}

inline mia::Mia fixture_mia(const std::string& name) {
  return mia::load_mia(fixture(name));
}

inline mia::Iolts fixture_iolts(const std::string& name) {
  return mia::load_iolts(fixture(name));
}

// A model view reduced to plain string data: successor map per (state,
// action), output set, and the transition relation quiescence inspects.
struct RawView {
  std::map<std::pair<std::string, std::string>, std::set<std::string>> succ;
  std::set<std::string> probe_outputs_of_state_helper;  // unused marker
  std::map<std::string, std::set<std::string>> probe_actions;  // per state
  std::set<std::string> outputs;
  std::set<std::string> states;
  std::string initial;
  bool with_delta = true;
};

inline void add_probe(RawView& view, const std::string& state,
                      const std::string& action) {
  view.probe_actions[state].insert(action);
}

inline RawView raw_view(const mia::Mia& m, mia::Modality gamma,
                        bool with_delta = true) {
  RawView view;
  view.initial = m.initial();
  view.with_delta = with_delta;
  view.outputs.insert(m.alphabet().outputs().begin(),
                      m.alphabet().outputs().end());
  view.states.insert(m.states().begin(), m.states().end());
  const auto& trans = gamma == mia::Modality::kMust ? m.must_transitions()
                                                    : m.may_transitions();
  for (const mia::Transition& t : trans)
    view.succ[{t.source, t.action}].insert(t.target);
  // Cross-paired quiescence: delta_may looks at must arrows, delta_must at
  // may arrows.
  const auto& probe = gamma == mia::Modality::kMay ? m.must_transitions()
                                                   : m.may_transitions();
  for (const mia::Transition& t : probe) add_probe(view, t.source, t.action);
  return view;
}

inline RawView raw_view(const mia::Iolts& m, bool with_delta = true) {
  RawView view;
  view.initial = m.initial();
  view.with_delta = with_delta;
  view.outputs.insert(m.alphabet().outputs().begin(),
                      m.alphabet().outputs().end());
  view.states.insert(m.states().begin(), m.states().end());
  for (const mia::Transition& t : m.transitions()) {
    view.succ[{t.source, t.action}].insert(t.target);
    add_probe(view, t.source, t.action);
  }
  return view;
}

inline bool raw_quiescent(const RawView& view, const std::string& state) {
  auto it = view.probe_actions.find(state);
  if (it == view.probe_actions.end()) return true;
  for (const std::string& action : it->second)
    if (view.outputs.count(action)) return false;
  return true;
}

inline std::set<std::string> raw_step(const RawView& view,
                                      const std::set<std::string>& from,
                                      const std::string& token) {
  std::set<std::string> next;
  if (view.with_delta && token == mia::kDeltaToken) {
    for (const std::string& s : from)
      if (raw_quiescent(view, s)) next.insert(s);
    return next;
  }
  for (const std::string& s : from) {
    auto it = view.succ.find({s, token});
    if (it != view.succ.end()) next.insert(it->second.begin(), it->second.end());
  }
  return next;
}

inline std::set<std::string> raw_after(const RawView& view,
                                       const mia::Trace& sigma) {
  std::set<std::string> current{view.initial};
  for (const std::string& token : sigma) {
    current = raw_step(view, current, token);
    if (current.empty()) break;
  }
  return current;
}

inline std::set<std::string> raw_out(const RawView& view,
                                     const std::set<std::string>& states) {
  std::set<std::string> result;
  for (const std::string& s : states) {
    for (const std::string& o : view.outputs) {
      auto it = view.succ.find({s, o});
      if (it != view.succ.end() && !it->second.empty()) result.insert(o);
    }
    if (view.with_delta && raw_quiescent(view, s))
      result.insert(std::string(mia::kDeltaToken));
  }
  return result;
}

// All exploration tokens, lexicographically sorted (delta included when the
// views use it) -- matching the engine's tie-break order.
inline std::vector<std::string> raw_tokens(const RawView& view,
                                           const mia::Alphabet& alphabet) {
  std::vector<std::string> tokens = alphabet.inputs();
  tokens.insert(tokens.end(), alphabet.outputs().begin(),
                alphabet.outputs().end());
  if (view.with_delta) tokens.push_back(std::string(mia::kDeltaToken));
  std::sort(tokens.begin(), tokens.end());
  return tokens;
}

struct OracleViolation {
  mia::Trace trace;
  std::string symbol;
};

// Brute-force route for the out-inclusion checks: enumerate every token
// sequence up to the depth in (length, lexicographic) order, keep those in
// the quantifier's suspension language, and compare the out-sets computed
// by raw_after/raw_out. Returns the first (minimal) violation.
inline std::optional<OracleViolation> oracle_out_inclusion(
    const RawView& quant, const RawView& other,
    const std::vector<std::string>& tokens, int depth) {
  struct Level {
    mia::Trace trace;
    std::set<std::string> quant_states;
    std::set<std::string> other_states;
  };
  std::vector<Level> level{{{}, {quant.initial}, {other.initial}}};
  for (int d = 0; d <= depth; ++d) {
    for (const Level& node : level) {
      std::set<std::string> out_other = raw_out(other, node.other_states);
      std::set<std::string> out_quant = raw_out(quant, node.quant_states);
      for (const std::string& sym : out_other) {
        if (!out_quant.count(sym)) return OracleViolation{node.trace, sym};
      }
    }
    if (d == depth) break;
    std::vector<Level> next;
    for (const Level& node : level) {
      for (const std::string& token : tokens) {
        std::set<std::string> q2 = raw_step(quant, node.quant_states, token);
        if (q2.empty()) continue;
        mia::Trace trace = node.trace;
        trace.push_back(token);
        next.push_back(
            {std::move(trace), std::move(q2),
             raw_step(other, node.other_states, token)});
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

// Brute-force trace-language inclusion (quiescence-free views for mior).
inline std::optional<mia::Trace> oracle_language_inclusion(
    const RawView& impl, const RawView& spec,
    const std::vector<std::string>& tokens, int depth) {
  struct Level {
    mia::Trace trace;
    std::set<std::string> impl_states;
    std::set<std::string> spec_states;
  };
  std::vector<Level> level{{{}, {impl.initial}, {spec.initial}}};
  for (int d = 0; d < depth; ++d) {
    std::vector<Level> next;
    for (const Level& node : level) {
      for (const std::string& token : tokens) {
        std::set<std::string> i2 = raw_step(impl, node.impl_states, token);
        if (i2.empty()) continue;
        std::set<std::string> s2 = raw_step(spec, node.spec_states, token);
        mia::Trace trace = node.trace;
        trace.push_back(token);
        if (s2.empty()) return trace;
        next.push_back({std::move(trace), std::move(i2), std::move(s2)});
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

// All gamma suspension traces up to the depth, computed the slow way.
inline std::set<mia::Trace> oracle_straces(const RawView& view,
                                           const std::vector<std::string>& tokens,
                                           int depth) {
  std::set<mia::Trace> result;
  struct Level {
    mia::Trace trace;
    std::set<std::string> states;
  };
  std::vector<Level> level{{{}, {view.initial}}};
  result.insert({});
  for (int d = 0; d < depth; ++d) {
    std::vector<Level> next;
    for (const Level& node : level) {
      for (const std::string& token : tokens) {
        std::set<std::string> n2 = raw_step(view, node.states, token);
        if (n2.empty()) continue;
        mia::Trace trace = node.trace;
        trace.push_back(token);
        result.insert(trace);
        next.push_back({std::move(trace), std::move(n2)});
      }
    }
    level = std::move(next);
  }
  return result;
}

inline mia::Mia rename_state(const mia::Mia& m, const std::string& from,
                             const std::string& to) {
  mia::RawModel raw = m.to_raw();
  auto fix = [&](std::string& s) {
    if (s == from) s = to;
  };
  for (std::string& s : raw.states) fix(s);
  fix(raw.initial);
  for (auto& rt : raw.transitions) {
    fix(rt.transition.source);
    fix(rt.transition.target);
  }
  return mia::Mia::from_raw(raw);
}

inline mia::Iolts rename_all_states(const mia::Iolts& m,
                                    const std::string& prefix) {
  mia::RawModel raw = m.to_raw();
  auto fix = [&](std::string& s) { s = prefix + s; };
  for (std::string& s : raw.states) fix(s);
  fix(raw.initial);
  for (auto& rt : raw.transitions) {
    fix(rt.transition.source);
    fix(rt.transition.target);
  }
  return mia::Iolts::from_raw(raw);
}

}  // namespace testsupport
