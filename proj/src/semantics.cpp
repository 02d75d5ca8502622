#include "mia/semantics.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace mia {

Trace parse_trace(std::string_view text) {
  std::istringstream is{std::string(text)};
  Trace trace;
  std::string tok;
  while (is >> tok) trace.push_back(tok);
  return trace;
}

std::string trace_to_string(const Trace& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i) out += ' ';
    out += trace[i];
  }
  return out;
}

SymbolTable::SymbolTable(const Alphabet& alphabet, bool with_delta) {
  struct Entry {
    std::string name;
    bool output;
    bool delta;
  };
  std::vector<Entry> entries;
  for (const std::string& a : alphabet.inputs())
    entries.push_back({a, false, false});
  for (const std::string& a : alphabet.outputs())
    entries.push_back({a, true, false});
  if (with_delta) entries.push_back({std::string(kDeltaToken), false, true});
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.name < b.name; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    names_.push_back(entries[i].name);
    output_.push_back(entries[i].output);
    if (entries[i].delta) delta_ = static_cast<std::uint32_t>(i);
  }
}

std::optional<std::uint32_t> SymbolTable::index_of(
    std::string_view token) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), token);
  if (it != names_.end() && *it == token)
    return static_cast<std::uint32_t>(it - names_.begin());
  return std::nullopt;
}

namespace {

// delta_may inspects must-init, delta_must inspects may-init (Modality is
// the gamma of the delta being asked about).
Modality quiescence_probe(Modality gamma) {
  return gamma == Modality::kMay ? Modality::kMust : Modality::kMay;
}

bool mia_state_quiescent(const Mia& m, std::uint32_t state, Modality gamma) {
  Modality probe = quiescence_probe(gamma);
  for (std::uint32_t a = 0; a < m.alphabet().size(); ++a) {
    if (m.alphabet().is_input_id(a)) continue;
    if (m.has_transition(state, a, probe)) return false;
  }
  return true;
}

bool iolts_state_quiescent(const Iolts& m, std::uint32_t state) {
  for (std::uint32_t a = 0; a < m.alphabet().size(); ++a) {
    if (m.alphabet().is_input_id(a)) continue;
    if (!m.targets(state, a).empty()) return false;
  }
  return true;
}

}  // namespace

void SuspensionView::index_transitions(
    const std::function<std::span<const std::uint32_t>(std::uint32_t,
                                                       std::uint32_t)>&
        targets_of,
    const Alphabet& alphabet) {
  const std::size_t n_syms = symbols_->size();
  succ_.assign(n_states_ * n_syms, {});
  for (std::uint32_t s = 0; s < n_states_; ++s) {
    for (std::uint32_t a = 0; a < alphabet.size(); ++a) {
      auto targets = targets_of(s, a);
      if (targets.empty()) continue;
      std::uint32_t sym = *symbols_->index_of(alphabet.action_name(a));
      auto& slot = succ_[s * n_syms + sym];
      slot.assign(targets.begin(), targets.end());
    }
    if (symbols_->has_delta() && quiescent_[s]) {
      std::uint32_t sym = *symbols_->index_of(kDeltaToken);
      succ_[s * n_syms + sym].push_back(s);
    }
  }
}

SuspensionView::SuspensionView(const Mia& m, Modality gamma,
                               const SymbolTable& symbols)
    : symbols_(&symbols),
      n_states_(m.state_count()),
      initial_(m.initial_id()),
      state_names_(&m.states()) {
  quiescent_.resize(n_states_);
  for (std::uint32_t s = 0; s < n_states_; ++s)
    quiescent_[s] = mia_state_quiescent(m, s, gamma);
  index_transitions(
      [&m, gamma](std::uint32_t s, std::uint32_t a) {
        return m.targets(s, a, gamma);
      },
      m.alphabet());
}

SuspensionView::SuspensionView(const Iolts& m, const SymbolTable& symbols)
    : symbols_(&symbols),
      n_states_(m.state_count()),
      initial_(m.initial_id()),
      state_names_(&m.states()) {
  quiescent_.resize(n_states_);
  for (std::uint32_t s = 0; s < n_states_; ++s)
    quiescent_[s] = iolts_state_quiescent(m, s);
  index_transitions(
      [&m](std::uint32_t s, std::uint32_t a) { return m.targets(s, a); },
      m.alphabet());
}

detail::StateBits SuspensionView::initial_set() const {
  detail::StateBits bits(n_states_);
  bits.set(initial_);
  return bits;
}

detail::StateBits SuspensionView::step(const detail::StateBits& from,
                                       std::uint32_t sym) const {
  detail::StateBits next(n_states_);
  const std::size_t n_syms = symbols_->size();
  from.for_each([&](std::uint32_t s) {
    for (std::uint32_t t : succ_[s * n_syms + sym]) next.set(t);
  });
  return next;
}

std::vector<std::uint32_t> SuspensionView::out(
    const detail::StateBits& states) const {
  std::vector<bool> seen(symbols_->size(), false);
  const std::size_t n_syms = symbols_->size();
  states.for_each([&](std::uint32_t s) {
    for (std::uint32_t sym = 0; sym < n_syms; ++sym) {
      if (symbols_->is_output(sym) && !succ_[s * n_syms + sym].empty())
        seen[sym] = true;
    }
    if (symbols_->has_delta() && quiescent_[s])
      seen[*symbols_->index_of(kDeltaToken)] = true;
  });
  std::vector<std::uint32_t> result;
  for (std::uint32_t sym = 0; sym < seen.size(); ++sym)
    if (seen[sym]) result.push_back(sym);
  return result;
}

const std::string& SuspensionView::state_name(std::uint32_t id) const {
  return (*state_names_)[id];
}

namespace {

std::uint32_t require_state_id(std::optional<std::uint32_t> id,
                               std::string_view name) {
  if (!id)
    throw Error(ErrorCode::kUnknownState,
                "unknown state '" + std::string(name) + "'");
  return *id;
}

std::vector<std::string> ordered_actions(const Alphabet& alphabet,
                                         const std::vector<bool>& present) {
  std::vector<std::string> result;
  for (std::uint32_t a = 0; a < alphabet.size(); ++a)
    if (present[a]) result.push_back(alphabet.action_name(a));
  return result;
}

detail::StateBits bits_of(const SuspensionView& view,
                          const std::vector<std::string>& names,
                          const std::function<std::optional<std::uint32_t>(
                              std::string_view)>& state_id) {
  detail::StateBits bits(view.state_count());
  for (const std::string& s : names) bits.set(require_state_id(state_id(s), s));
  return bits;
}

std::vector<std::string> run_after(const SuspensionView& view,
                                   detail::StateBits current,
                                   const Trace& sigma) {
  for (const std::string& token : sigma) {
    auto sym = view.symbols().index_of(token);
    if (!sym)
      throw Error(ErrorCode::kUnknownAction,
                  "trace token '" + token + "' is not an action or 'delta'");
    current = view.step(current, *sym);
    if (current.none()) break;
  }
  std::vector<std::string> names;
  current.for_each(
      [&](std::uint32_t s) { names.push_back(view.state_name(s)); });
  return names;
}

std::vector<std::string> view_out(const SuspensionView& view,
                                  const detail::StateBits& bits) {
  std::vector<std::string> tokens;
  for (std::uint32_t sym : view.out(bits))
    tokens.push_back(view.symbols().name(sym));
  return tokens;
}

std::vector<Trace> run_enumerate(const SuspensionView& view, int depth,
                                 StraceLimits limits) {
  std::vector<Trace> traces;
  traces.push_back({});  // epsilon is always a trace
  struct Node {
    detail::StateBits states;
    std::size_t trace_idx;
    bool ends_in_delta;
    int depth;
  };
  std::deque<Node> queue;
  queue.push_back({view.initial_set(), 0, false, 0});
  const auto delta_sym = view.symbols().index_of(kDeltaToken);
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (node.depth >= depth) continue;
    for (std::uint32_t sym = 0; sym < view.symbols().size(); ++sym) {
      bool is_delta = delta_sym && *delta_sym == sym;
      if (is_delta && node.ends_in_delta) continue;  // delta self-loop
      detail::StateBits next = view.step(node.states, sym);
      if (next.none()) continue;
      Trace extended = traces[node.trace_idx];
      extended.push_back(view.symbols().name(sym));
      traces.push_back(std::move(extended));
      if (traces.size() > limits.max_traces)
        throw Error(ErrorCode::kLimitExceeded,
                    "suspension trace enumeration exceeded " +
                        std::to_string(limits.max_traces) + " traces");
      queue.push_back(
          {std::move(next), traces.size() - 1, is_delta, node.depth + 1});
    }
  }
  return traces;
}

}  // namespace

std::vector<std::string> init_actions(const Mia& m, std::string_view state,
                                      Modality gamma) {
  std::uint32_t s = require_state_id(m.state_id(state), state);
  std::vector<bool> present(m.alphabet().size(), false);
  for (std::uint32_t a = 0; a < m.alphabet().size(); ++a)
    present[a] = m.has_transition(s, a, gamma);
  return ordered_actions(m.alphabet(), present);
}

std::vector<std::string> init_actions(const Iolts& m, std::string_view state) {
  std::uint32_t s = require_state_id(m.state_id(state), state);
  std::vector<bool> present(m.alphabet().size(), false);
  for (std::uint32_t a = 0; a < m.alphabet().size(); ++a)
    present[a] = !m.targets(s, a).empty();
  return ordered_actions(m.alphabet(), present);
}

bool is_quiescent(const Mia& m, std::string_view state, Modality gamma) {
  std::uint32_t s = require_state_id(m.state_id(state), state);
  return mia_state_quiescent(m, s, gamma);
}

bool is_quiescent(const Iolts& m, std::string_view state) {
  std::uint32_t s = require_state_id(m.state_id(state), state);
  return iolts_state_quiescent(m, s);
}

std::vector<std::string> after(const Mia& m,
                               const std::vector<std::string>& sources,
                               const Trace& sigma, Modality gamma) {
  SymbolTable symbols(m.alphabet());
  SuspensionView view(m, gamma, symbols);
  auto bits = bits_of(view, sources,
                      [&](std::string_view s) { return m.state_id(s); });
  return run_after(view, std::move(bits), sigma);
}

std::vector<std::string> after(const Mia& m, std::string_view source,
                               const Trace& sigma, Modality gamma) {
  return after(m, std::vector<std::string>{std::string(source)}, sigma, gamma);
}

std::vector<std::string> after_initial(const Mia& m, const Trace& sigma,
                                       Modality gamma) {
  return after(m, m.initial(), sigma, gamma);
}

std::vector<std::string> after(const Iolts& m,
                               const std::vector<std::string>& sources,
                               const Trace& sigma) {
  SymbolTable symbols(m.alphabet());
  SuspensionView view(m, symbols);
  auto bits = bits_of(view, sources,
                      [&](std::string_view s) { return m.state_id(s); });
  return run_after(view, std::move(bits), sigma);
}

std::vector<std::string> after(const Iolts& m, std::string_view source,
                               const Trace& sigma) {
  return after(m, std::vector<std::string>{std::string(source)}, sigma);
}

std::vector<std::string> after_initial(const Iolts& m, const Trace& sigma) {
  return after(m, m.initial(), sigma);
}

std::vector<std::string> out_set(const Mia& m,
                                 const std::vector<std::string>& states,
                                 Modality gamma) {
  SymbolTable symbols(m.alphabet());
  SuspensionView view(m, gamma, symbols);
  auto bits = bits_of(view, states,
                      [&](std::string_view s) { return m.state_id(s); });
  return view_out(view, bits);
}

std::vector<std::string> out_set(const Iolts& m,
                                 const std::vector<std::string>& states) {
  SymbolTable symbols(m.alphabet());
  SuspensionView view(m, symbols);
  auto bits = bits_of(view, states,
                      [&](std::string_view s) { return m.state_id(s); });
  return view_out(view, bits);
}

std::vector<Trace> enumerate_straces(const Mia& m, Modality gamma, int depth,
                                     StraceLimits limits) {
  if (depth < 0) depth = 2 * static_cast<int>(m.state_count()) + 2;
  SymbolTable symbols(m.alphabet());
  SuspensionView view(m, gamma, symbols);
  return run_enumerate(view, depth, limits);
}

std::vector<Trace> enumerate_straces(const Iolts& m, int depth,
                                     StraceLimits limits) {
  if (depth < 0) depth = 2 * static_cast<int>(m.state_count()) + 2;
  SymbolTable symbols(m.alphabet());
  SuspensionView view(m, symbols);
  return run_enumerate(view, depth, limits);
}

bool is_strace(const Mia& m, const Trace& sigma, Modality gamma) {
  return !after_initial(m, sigma, gamma).empty();
}

bool is_strace(const Iolts& m, const Trace& sigma) {
  return !after_initial(m, sigma).empty();
}

}  // namespace mia
