#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mia/model.hpp"
#include "mia/semantics.hpp"

namespace mia {

/// One step of a refinement refutation: the pair that was removed from the
/// candidate relation, the clause that removed it (1: a must transition of
/// the abstract side has no mandatory match, 2: an allowed output of the
/// refined side is not allowed by the abstract side) and the action involved.
struct RefinementStep {
  std::string refined_state;   // state of p
  std::string abstract_state;  // state of q
  int clause = 0;
  std::string action;
};

struct RefinementResult {
  bool holds = false;
  /// The greatest refinement relation over P x Q, sorted by state names.
  std::vector<std::pair<std::string, std::string>> relation;
  /// When the verdict fails: the deletion chain from the initial pair down
  /// to a pair that failed with no surviving successor candidate.
  std::vector<RefinementStep> refutation;
  std::uint64_t pairs_total = 0;
  std::uint64_t rounds = 0;
};

/// Decides p <= q (alternating simulation) by greatest-fixpoint deletion
/// over all state pairs. Deletion order is deterministic (lexicographic by
/// state names), so failure explanations are reproducible.
RefinementResult mia_refines(const Mia& p, const Mia& q);

struct VariantCheckResult {
  bool holds = false;
  std::string reason;  // human-readable, empty when holds
  /// Set when the may-subset clause fails: the first offending transition.
  std::optional<Transition> offending_transition;
  /// Set when the refinement clause was evaluated.
  std::optional<RefinementResult> refinement;
};

/// Checks variant derivation p |= q: (1) p, viewed as the degenerate MIA,
/// refines q and (2) every transition of p is a may transition of q. The
/// literal reading requires p to reuse q's state identifiers; unknown
/// identifiers raise kStateSpaceMismatch. With up_to_iso, clause (2) is
/// checked modulo an injective renaming of p's states into q's that fixes
/// the initial state.
VariantCheckResult is_variant_of(const Iolts& p, const Mia& q,
                                 bool up_to_iso = false);

struct TraceLiftResult {
  bool holds = true;
  std::optional<Trace> counterexample;
  std::uint64_t traces_checked = 0;
};

/// Verifies, for every plain trace w of p up to the given depth, that q
/// may-enables w. Requires is_variant_of(p, q) to hold (throws
/// kPreconditionViolated otherwise); a counterexample indicates an
/// implementation bug, not a model property.
TraceLiftResult check_lemma1_trace_lifting(const Iolts& p, const Mia& q,
                                           int depth);

}  // namespace mia
