#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mia {

/// Token used for quiescence observations in traces and reports.
inline constexpr std::string_view kDeltaToken = "delta";

enum class ErrorCode {
  kParse,
  kInvalidModel,
  kAlphabetMismatch,
  kUnknownState,
  kUnknownAction,
  kInputNondeterministic,
  kStateSpaceMismatch,
  kNotInputEnabled,
  kPreconditionViolated,
  kInfeasibleConfig,
  kLimitExceeded,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Transition modality: mandatory (box) or allowed (diamond).
enum class Modality { kMust, kMay };

std::string_view modality_name(Modality m);

/// Disjoint input/output action sets. Declaration order is the canonical
/// iteration order; actions are addressed internally by dense ids with
/// inputs first.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::vector<std::string> inputs, std::vector<std::string> outputs);

  const std::vector<std::string>& inputs() const { return inputs_; }
  const std::vector<std::string>& outputs() const { return outputs_; }
  std::size_t size() const { return inputs_.size() + outputs_.size(); }
  std::size_t input_count() const { return inputs_.size(); }

  bool is_input_id(std::uint32_t id) const { return id < inputs_.size(); }
  const std::string& action_name(std::uint32_t id) const;
  std::optional<std::uint32_t> action_id(std::string_view name) const;
  bool is_input(std::string_view name) const;
  bool is_output(std::string_view name) const;

  /// Set equality; declaration order is not significant.
  bool same_actions(const Alphabet& other) const;

 private:
  std::vector<std::string> inputs_;
  std::vector<std::string> outputs_;
};

/// A transition as written in model files: source, action, target.
struct Transition {
  std::string source;
  std::string action;
  std::string target;

  auto operator<=>(const Transition&) const = default;
};

/// Unvalidated model data as produced by the parser or assembled by hand.
/// validate() reports every broken invariant instead of throwing.
struct RawModel {
  enum class Kind { kMia, kIolts };

  struct RawTransition {
    Modality modality = Modality::kMust;  // ignored for IOLTS
    Transition transition;
    int line = 0;  // 0 when not file-backed
  };

  Kind kind = Kind::kMia;
  std::string name;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<std::string> states;
  std::string initial;
  std::vector<RawTransition> transitions;
};

struct Violation {
  std::string rule;     // stable rule identifier, e.g. "input-determinism"
  std::string subject;  // offending state or "src action dst" triple
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
  std::vector<std::string> warnings;  // non-fatal, e.g. unreachable states
};

class Mia;
class Iolts;

/// Checks every model invariant of the given raw data. Total: never throws
/// on structurally well-formed RawModel values.
ValidationReport validate(const RawModel& raw);

namespace detail {

// Dense successor table: per (state, action, modality) a sorted target list.
class TransitionIndex {
 public:
  TransitionIndex() = default;
  TransitionIndex(std::size_t n_states, std::size_t n_actions);

  void add(std::uint32_t src, std::uint32_t action, std::uint32_t dst);
  std::span<const std::uint32_t> targets(std::uint32_t src,
                                         std::uint32_t action) const;
  void finalize();  // sort + dedup target lists

 private:
  std::size_t n_actions_ = 0;
  std::vector<std::vector<std::uint32_t>> slots_;
};

}  // namespace detail

/// Modal interface automaton. Immutable after construction; construction
/// re-validates all invariants (syntactic consistency is closed over, i.e.
/// every must transition is entered into the may relation automatically).
class Mia {
 public:
  Mia(std::string name, Alphabet alphabet, std::vector<std::string> states,
      const std::string& initial, std::vector<Transition> must,
      std::vector<Transition> may);

  static Mia from_raw(const RawModel& raw);
  RawModel to_raw() const;

  const std::string& name() const { return name_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::string>& states() const { return states_; }
  const std::string& initial() const { return states_[initial_]; }

  /// Sorted transition triples; may_transitions() includes every must triple.
  const std::vector<Transition>& must_transitions() const { return must_; }
  const std::vector<Transition>& may_transitions() const { return may_; }
  /// may \ must, in canonical order.
  std::vector<Transition> optional_transitions() const;

  std::size_t state_count() const { return states_.size(); }
  std::optional<std::uint32_t> state_id(std::string_view name) const;
  const std::string& state_name(std::uint32_t id) const { return states_[id]; }
  std::uint32_t initial_id() const { return initial_; }

  std::span<const std::uint32_t> targets(std::uint32_t state,
                                         std::uint32_t action,
                                         Modality m) const;
  bool has_transition(std::uint32_t state, std::uint32_t action,
                      Modality m) const;

  /// Structural equality: alphabets as sets, state set, initial state and
  /// both transition relations. Model names are metadata and ignored.
  bool operator==(const Mia& other) const;

 private:
  std::string name_;
  Alphabet alphabet_;
  std::vector<std::string> states_;
  std::uint32_t initial_ = 0;
  std::vector<Transition> must_;
  std::vector<Transition> may_;
  detail::TransitionIndex must_index_;
  detail::TransitionIndex may_index_;
};

/// I/O labeled transition system: one unqualified transition relation.
class Iolts {
 public:
  Iolts(std::string name, Alphabet alphabet, std::vector<std::string> states,
        const std::string& initial, std::vector<Transition> transitions);

  static Iolts from_raw(const RawModel& raw);
  RawModel to_raw() const;

  const std::string& name() const { return name_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::string>& states() const { return states_; }
  const std::string& initial() const { return states_[initial_]; }
  const std::vector<Transition>& transitions() const { return transitions_; }

  std::size_t state_count() const { return states_.size(); }
  std::optional<std::uint32_t> state_id(std::string_view name) const;
  const std::string& state_name(std::uint32_t id) const { return states_[id]; }
  std::uint32_t initial_id() const { return initial_; }

  std::span<const std::uint32_t> targets(std::uint32_t state,
                                         std::uint32_t action) const;

  bool operator==(const Iolts& other) const;

 private:
  std::string name_;
  Alphabet alphabet_;
  std::vector<std::string> states_;
  std::uint32_t initial_ = 0;
  std::vector<Transition> transitions_;
  detail::TransitionIndex index_;
};

/// Views an IOLTS as the degenerate MIA with must = may. Requires the IOLTS
/// to be input-deterministic; throws Error(kInputNondeterministic) otherwise.
Mia embed_iolts(const Iolts& p);

/// The family LTS: all may transitions of q with modality erased.
Iolts famlts(const Mia& q);

struct InputEnabledness {
  bool enabled = true;
  /// Every (state, input) pair without the required transition.
  std::vector<std::pair<std::string, std::string>> missing;
};

/// A MIA is input-enabled iff every state has a must transition for every
/// input; an IOLTS iff every state has a transition for every input.
InputEnabledness is_input_enabled(const Mia& m);
InputEnabledness is_input_enabled(const Iolts& m);

}  // namespace mia
