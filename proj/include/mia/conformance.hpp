#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "mia/model.hpp"
#include "mia/semantics.hpp"

namespace mia {

enum class ConformanceClause {
  kClassic,        // ioco / family check
  kMayInclusion,   // modal may dimension
  kMustInclusion,  // modal must dimension
};

std::string_view clause_name(ConformanceClause c);

struct ConformanceWitness {
  Trace trace;
  std::string symbol;  // offending output, input (mior) or "delta"
  ConformanceClause clause = ConformanceClause::kClassic;
  /// true: the symbol is mandatory in the specification but missing from
  /// the implementation; false: the implementation shows it although the
  /// specification does not allow it.
  bool missing = false;
};

struct ExplorationStats {
  std::uint64_t subset_pairs = 0;
  int max_depth = 0;
};

struct ConformanceVerdict {
  bool holds = false;
  std::optional<ConformanceWitness> witness;
  ExplorationStats stats;
};

/// Safety valves only: every exploration is exact over the finite graph of
/// state-subset pairs; exceeding a limit raises kLimitExceeded instead of
/// silently truncating, so verdicts never depend on the limit values.
struct ExplorationLimits {
  std::uint64_t max_pairs = std::uint64_t{1} << 20;
  int max_depth = std::numeric_limits<int>::max();
};

/// Classic input/output conformance: for every suspension trace sigma of
/// the specification, Out(i after sigma) is contained in Out(s after
/// sigma). The implementation must be input-enabled. Decided exactly by
/// breadth-first exploration of synchronized state subsets; a failing
/// verdict carries the shortest witness (ties by token order).
ConformanceVerdict ioco_check(const Iolts& impl, const Iolts& spec,
                              ExplorationLimits limits = {});

/// Modal input/output conformance:
///   may clause:  forall sigma in Straces_may(s):
///                Out_may(i after_may sigma) subset Out_may(s after_may sigma)
///   must clause: forall sigma in Straces_must(i):
///                Out_must(s after_must sigma) subset Out_must(i after_must sigma)
/// The implementation must be input-enabled (every state, every input, as a
/// must transition). Witnesses prefer shorter traces; on equal traces the
/// must clause is reported.
ConformanceVerdict mioco_check(const Mia& impl, const Mia& spec,
                               ExplorationLimits limits = {});

/// Modal trace-inclusion relation: the implementation's may and must trace
/// languages (quiescence-free) must stay inside the specification's allowed
/// (may) language. Deliberately weaker than mioco_check: dropping mandatory
/// behavior goes unnoticed. No input-enabledness requirement.
ConformanceVerdict mior_check(const Mia& impl, const Mia& spec,
                              ExplorationLimits limits = {});

/// Conformance of a derived variant against the whole family of a modal
/// specification: for every sigma in Straces_may(s), Out(v after sigma) is
/// contained in Out_may(s after_may sigma). This is the check the theorem
/// harness runs per variant; it evaluates the specification side modally,
/// so silence is permitted exactly where the specification mandates no
/// output. See the family-LTS notes in the README for why the classic
/// ioco_check against famlts(s) is strictly stronger.
ConformanceVerdict family_ioco_check(const Iolts& variant, const Mia& spec,
                                     ExplorationLimits limits = {});

}  // namespace mia
