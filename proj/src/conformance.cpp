#include "mia/conformance.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace mia {

std::string_view clause_name(ConformanceClause c) {
  switch (c) {
    case ConformanceClause::kClassic:
      return "classic";
    case ConformanceClause::kMayInclusion:
      return "may-inclusion";
    case ConformanceClause::kMustInclusion:
      return "must-inclusion";
  }
  return "?";
}

namespace {

using detail::StateBits;

void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
  if (!a.same_actions(b))
    throw Error(ErrorCode::kAlphabetMismatch,
                "implementation and specification have different alphabets");
}

template <typename Model>
void require_input_enabled(const Model& m) {
  InputEnabledness ie = is_input_enabled(m);
  if (!ie.enabled) {
    const auto& [state, input] = ie.missing.front();
    throw Error(ErrorCode::kNotInputEnabled,
                "implementation '" + m.name() + "' is not input-enabled: " +
                    "state '" + state + "' does not accept input '" + input +
                    "' (" + std::to_string(ie.missing.size()) +
                    " missing pairs; apply a completion first)");
  }
}

struct Node {
  StateBits quant;
  StateBits other;
  std::int64_t parent = -1;
  std::uint32_t sym = 0;
  int depth = 0;
};

struct PairHash {
  std::size_t operator()(const std::pair<StateBits, StateBits>& k) const {
    return k.first.hash() * 0x9e3779b97f4a7c15ull + k.second.hash();
  }
};

Trace trace_of(const std::vector<Node>& nodes, std::int64_t at,
               const SymbolTable& symbols) {
  Trace trace;
  while (at > 0) {
    const Node& n = nodes[static_cast<std::size_t>(at)];
    trace.push_back(symbols.name(n.sym));
    at = n.parent;
  }
  std::reverse(trace.begin(), trace.end());
  return trace;
}

void bump_limits(std::size_t pairs, int depth, const ExplorationLimits& limits) {
  if (pairs > limits.max_pairs)
    throw Error(ErrorCode::kLimitExceeded,
                "conformance exploration exceeded the subset-pair safety "
                "cap of " +
                    std::to_string(limits.max_pairs));
  if (depth > limits.max_depth)
    throw Error(ErrorCode::kLimitExceeded,
                "conformance exploration exceeded the depth safety cap of " +
                    std::to_string(limits.max_depth));
}

/// Core exploration shared by ioco, both mioco clauses and the family
/// check. Traces are quantified by the `quant` view (a node is only
/// extended while the quantifier-side subset stays nonempty) and the
/// inclusion Out(other) subset-of Out(quant) is verified at every reached
/// pair. Nodes whose other-side subset is empty cannot produce violations
/// anywhere below (Out of the empty set is empty) and are pruned.
ConformanceVerdict out_inclusion_check(const SuspensionView& quant,
                                       const SuspensionView& other,
                                       ConformanceClause clause, bool missing,
                                       ExplorationLimits limits) {
  ConformanceVerdict verdict;
  std::vector<Node> nodes;
  nodes.push_back({quant.initial_set(), other.initial_set(), -1, 0, 0});
  std::unordered_set<std::pair<StateBits, StateBits>, PairHash> visited;
  visited.insert({nodes[0].quant, nodes[0].other});
  std::deque<std::size_t> queue{0};
  const SymbolTable& symbols = quant.symbols();

  while (!queue.empty()) {
    std::size_t at = queue.front();
    queue.pop_front();
    ++verdict.stats.subset_pairs;
    verdict.stats.max_depth = std::max(verdict.stats.max_depth, nodes[at].depth);

    // Inclusion check at this trace.
    std::vector<std::uint32_t> out_other = other.out(nodes[at].other);
    if (!out_other.empty()) {
      std::vector<std::uint32_t> out_quant = quant.out(nodes[at].quant);
      for (std::uint32_t sym : out_other) {
        if (!std::binary_search(out_quant.begin(), out_quant.end(), sym)) {
          verdict.holds = false;
          verdict.witness = {trace_of(nodes, static_cast<std::int64_t>(at),
                                      symbols),
                             symbols.name(sym), clause, missing};
          return verdict;
        }
      }
    }

    for (std::uint32_t sym = 0; sym < symbols.size(); ++sym) {
      StateBits q2 = quant.step(nodes[at].quant, sym);
      if (q2.none()) continue;  // trace leaves the quantified language
      StateBits o2 = other.step(nodes[at].other, sym);
      if (o2.none()) continue;  // inclusion is vacuous below this node
      auto key = std::pair(q2, o2);
      if (!visited.insert(key).second) continue;
      nodes.push_back({std::move(q2), std::move(o2),
                       static_cast<std::int64_t>(at), sym,
                       nodes[at].depth + 1});
      bump_limits(nodes.size(), nodes.back().depth, limits);
      queue.push_back(nodes.size() - 1);
    }
  }
  verdict.holds = true;
  return verdict;
}

/// Trace-language inclusion of the impl view in the spec view.
ConformanceVerdict language_inclusion_check(const SuspensionView& impl,
                                            const SuspensionView& spec,
                                            ConformanceClause clause,
                                            ExplorationLimits limits) {
  ConformanceVerdict verdict;
  std::vector<Node> nodes;
  nodes.push_back({impl.initial_set(), spec.initial_set(), -1, 0, 0});
  std::unordered_set<std::pair<StateBits, StateBits>, PairHash> visited;
  visited.insert({nodes[0].quant, nodes[0].other});
  std::deque<std::size_t> queue{0};
  const SymbolTable& symbols = impl.symbols();

  while (!queue.empty()) {
    std::size_t at = queue.front();
    queue.pop_front();
    ++verdict.stats.subset_pairs;
    verdict.stats.max_depth = std::max(verdict.stats.max_depth, nodes[at].depth);
    for (std::uint32_t sym = 0; sym < symbols.size(); ++sym) {
      StateBits i2 = impl.step(nodes[at].quant, sym);
      if (i2.none()) continue;
      StateBits s2 = spec.step(nodes[at].other, sym);
      if (s2.none()) {
        Trace trace = trace_of(nodes, static_cast<std::int64_t>(at), symbols);
        trace.push_back(symbols.name(sym));
        verdict.holds = false;
        verdict.witness = {std::move(trace), symbols.name(sym), clause,
                           /*missing=*/false};
        return verdict;
      }
      auto key = std::pair(i2, s2);
      if (!visited.insert(key).second) continue;
      nodes.push_back({std::move(i2), std::move(s2),
                       static_cast<std::int64_t>(at), sym,
                       nodes[at].depth + 1});
      bump_limits(nodes.size(), nodes.back().depth, limits);
      queue.push_back(nodes.size() - 1);
    }
  }
  verdict.holds = true;
  return verdict;
}

/// (length, token order, must before may) witness preference.
bool witness_precedes(const ConformanceWitness& a,
                      const ConformanceWitness& b) {
  if (a.trace.size() != b.trace.size())
    return a.trace.size() < b.trace.size();
  if (a.trace != b.trace) return a.trace < b.trace;
  return a.clause == ConformanceClause::kMustInclusion &&
         b.clause != ConformanceClause::kMustInclusion;
}

ConformanceVerdict merge_clauses(ConformanceVerdict first,
                                 ConformanceVerdict second) {
  ConformanceVerdict merged;
  merged.stats.subset_pairs =
      first.stats.subset_pairs + second.stats.subset_pairs;
  merged.stats.max_depth =
      std::max(first.stats.max_depth, second.stats.max_depth);
  merged.holds = first.holds && second.holds;
  if (!first.holds && !second.holds) {
    merged.witness = witness_precedes(*second.witness, *first.witness)
                         ? std::move(second.witness)
                         : std::move(first.witness);
  } else if (!first.holds) {
    merged.witness = std::move(first.witness);
  } else if (!second.holds) {
    merged.witness = std::move(second.witness);
  }
  return merged;
}

}  // namespace

ConformanceVerdict ioco_check(const Iolts& impl, const Iolts& spec,
                              ExplorationLimits limits) {
  require_same_alphabet(impl.alphabet(), spec.alphabet());
  require_input_enabled(impl);
  SymbolTable symbols(impl.alphabet());
  SuspensionView iv(impl, symbols);
  SuspensionView sv(spec, symbols);
  return out_inclusion_check(sv, iv, ConformanceClause::kClassic,
                             /*missing=*/false, limits);
}

ConformanceVerdict mioco_check(const Mia& impl, const Mia& spec,
                               ExplorationLimits limits) {
  require_same_alphabet(impl.alphabet(), spec.alphabet());
  require_input_enabled(impl);
  SymbolTable symbols(impl.alphabet());

  SuspensionView impl_must(impl, Modality::kMust, symbols);
  SuspensionView spec_must(spec, Modality::kMust, symbols);
  ConformanceVerdict must_clause = out_inclusion_check(
      impl_must, spec_must, ConformanceClause::kMustInclusion,
      /*missing=*/true, limits);

  SuspensionView impl_may(impl, Modality::kMay, symbols);
  SuspensionView spec_may(spec, Modality::kMay, symbols);
  ConformanceVerdict may_clause =
      out_inclusion_check(spec_may, impl_may, ConformanceClause::kMayInclusion,
                          /*missing=*/false, limits);

  return merge_clauses(std::move(must_clause), std::move(may_clause));
}

ConformanceVerdict mior_check(const Mia& impl, const Mia& spec,
                              ExplorationLimits limits) {
  require_same_alphabet(impl.alphabet(), spec.alphabet());
  SymbolTable symbols(impl.alphabet(), /*with_delta=*/false);
  SuspensionView impl_may(impl, Modality::kMay, symbols);
  SuspensionView impl_must(impl, Modality::kMust, symbols);
  SuspensionView spec_may(spec, Modality::kMay, symbols);

  ConformanceVerdict may_clause = language_inclusion_check(
      impl_may, spec_may, ConformanceClause::kMayInclusion, limits);
  ConformanceVerdict must_clause = language_inclusion_check(
      impl_must, spec_may, ConformanceClause::kMustInclusion, limits);
  return merge_clauses(std::move(may_clause), std::move(must_clause));
}

ConformanceVerdict family_ioco_check(const Iolts& variant, const Mia& spec,
                                     ExplorationLimits limits) {
  require_same_alphabet(variant.alphabet(), spec.alphabet());
  require_input_enabled(variant);
  SymbolTable symbols(variant.alphabet());
  SuspensionView vv(variant, symbols);
  SuspensionView sv(spec, Modality::kMay, symbols);
  return out_inclusion_check(sv, vv, ConformanceClause::kClassic,
                             /*missing=*/false, limits);
}

}  // namespace mia
