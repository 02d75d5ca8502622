#include "mia/refinement.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace mia {

namespace {

void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
  if (!a.same_actions(b))
    throw Error(ErrorCode::kAlphabetMismatch,
                "models have different input/output alphabets");
}

struct PairTable {
  std::size_t n_p = 0;
  std::size_t n_q = 0;
  std::size_t index(std::uint32_t p, std::uint32_t q) const {
    return p * n_q + q;
  }
};

}  // namespace

RefinementResult mia_refines(const Mia& p, const Mia& q) {
  require_same_alphabet(p.alphabet(), q.alphabet());

  SymbolTable symbols(p.alphabet(), /*with_delta=*/false);
  SuspensionView p_must(p, Modality::kMust, symbols);
  SuspensionView p_may(p, Modality::kMay, symbols);
  SuspensionView q_must(q, Modality::kMust, symbols);
  SuspensionView q_may(q, Modality::kMay, symbols);

  PairTable table{p.state_count(), q.state_count()};
  const std::size_t n_pairs = table.n_p * table.n_q;
  std::vector<char> alive(n_pairs, 1);
  std::vector<std::uint64_t> death_time(n_pairs, 0);
  struct Blame {
    int clause = 0;
    std::uint32_t sym = 0;
    std::int64_t reason = -1;  // pair index whose earlier death caused this
  };
  std::vector<Blame> blame(n_pairs);

  // Deterministic scan order: lexicographic by (p state name, q state name).
  std::vector<std::size_t> order(n_pairs);
  for (std::size_t i = 0; i < n_pairs; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto name_pair = [&](std::size_t idx) {
      return std::pair<const std::string&, const std::string&>(
          p.state_name(static_cast<std::uint32_t>(idx / table.n_q)),
          q.state_name(static_cast<std::uint32_t>(idx % table.n_q)));
    };
    return name_pair(a) < name_pair(b);
  });

  std::uint64_t clock = 0;
  std::uint64_t rounds = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    ++rounds;
    for (std::size_t idx : order) {
      if (!alive[idx]) continue;
      auto ps = static_cast<std::uint32_t>(idx / table.n_q);
      auto qs = static_cast<std::uint32_t>(idx % table.n_q);

      auto kill = [&](int clause, std::uint32_t sym, std::int64_t reason) {
        alive[idx] = 0;
        death_time[idx] = ++clock;
        blame[idx] = {clause, sym, reason};
        changed = true;
      };

      bool dead = false;
      // Clause 1: every must transition of q is matched by a must
      // transition of p into a related pair.
      for (std::uint32_t sym = 0; sym < symbols.size() && !dead; ++sym) {
        for (std::uint32_t q2 : q_must.successors(qs, sym)) {
          std::int64_t last_died = -1;
          bool matched = false;
          for (std::uint32_t p2 : p_must.successors(ps, sym)) {
            std::size_t cand = table.index(p2, q2);
            if (alive[cand]) {
              matched = true;
              break;
            }
            if (last_died < 0 ||
                death_time[cand] > death_time[static_cast<std::size_t>(last_died)])
              last_died = static_cast<std::int64_t>(cand);
          }
          if (!matched) {
            kill(1, sym, last_died);
            dead = true;
            break;
          }
        }
      }
      if (dead) continue;
      // Clause 2: every allowed output of p is allowed by q into a related
      // pair.
      for (std::uint32_t sym = 0; sym < symbols.size() && !dead; ++sym) {
        if (!symbols.is_output(sym)) continue;
        for (std::uint32_t p2 : p_may.successors(ps, sym)) {
          std::int64_t last_died = -1;
          bool matched = false;
          for (std::uint32_t q2 : q_may.successors(qs, sym)) {
            std::size_t cand = table.index(p2, q2);
            if (alive[cand]) {
              matched = true;
              break;
            }
            if (last_died < 0 ||
                death_time[cand] > death_time[static_cast<std::size_t>(last_died)])
              last_died = static_cast<std::int64_t>(cand);
          }
          if (!matched) {
            kill(2, sym, last_died);
            dead = true;
            break;
          }
        }
      }
    }
  }

  RefinementResult result;
  result.pairs_total = n_pairs;
  result.rounds = rounds;
  for (std::size_t idx : order) {
    if (alive[idx])
      result.relation.emplace_back(
          p.state_name(static_cast<std::uint32_t>(idx / table.n_q)),
          q.state_name(static_cast<std::uint32_t>(idx % table.n_q)));
  }
  std::size_t initial_idx = table.index(p.initial_id(), q.initial_id());
  result.holds = alive[initial_idx];
  if (!result.holds) {
    std::int64_t idx = static_cast<std::int64_t>(initial_idx);
    while (idx >= 0) {
      const Blame& b = blame[static_cast<std::size_t>(idx)];
      result.refutation.push_back(
          {p.state_name(static_cast<std::uint32_t>(idx / table.n_q)),
           q.state_name(static_cast<std::uint32_t>(idx % table.n_q)), b.clause,
           symbols.name(b.sym)});
      idx = b.reason;
    }
  }
  return result;
}

VariantCheckResult is_variant_of(const Iolts& p, const Mia& q,
                                 bool up_to_iso) {
  require_same_alphabet(p.alphabet(), q.alphabet());

  VariantCheckResult result;
  result.refinement = mia_refines(embed_iolts(p), q);
  if (!result.refinement->holds) {
    result.holds = false;
    result.reason = "refinement clause fails: initial states are unrelated";
    return result;
  }

  std::set<Transition> may(q.may_transitions().begin(),
                           q.may_transitions().end());
  if (!up_to_iso) {
    for (const std::string& s : p.states()) {
      if (!q.state_id(s))
        throw Error(ErrorCode::kStateSpaceMismatch,
                    "variant state '" + s +
                        "' is not a state of the specification (use "
                        "up-to-iso matching for renamed variants)");
    }
    for (const Transition& t : p.transitions()) {
      if (!may.count(t)) {
        result.holds = false;
        result.offending_transition = t;
        result.reason = "transition '" + t.source + " " + t.action + " " +
                        t.target + "' is not a may transition of the " +
                        "specification";
        return result;
      }
    }
    result.holds = true;
    return result;
  }

  // Injective renaming search: map p states into q states, fixing the
  // initial state, such that every p transition lands in q's may relation.
  if (p.state_count() > q.state_count()) {
    result.holds = false;
    result.reason = "no injective state mapping exists: variant has more "
                    "states than the specification";
    return result;
  }
  const std::size_t n_p = p.state_count();
  std::vector<std::int64_t> map(n_p, -1);
  std::vector<char> used(q.state_count(), 0);
  map[p.initial_id()] = q.initial_id();
  used[q.initial_id()] = 1;

  // Transitions grouped for incremental checking.
  auto consistent = [&](std::uint32_t ps) {
    for (const Transition& t : p.transitions()) {
      auto si = *p.state_id(t.source);
      auto ti = *p.state_id(t.target);
      if (si != ps && ti != ps) continue;
      if (map[si] < 0 || map[ti] < 0) continue;
      Transition probe{q.state_name(static_cast<std::uint32_t>(map[si])),
                       t.action,
                       q.state_name(static_cast<std::uint32_t>(map[ti]))};
      if (!may.count(probe)) return false;
    }
    return true;
  };

  std::vector<std::uint32_t> todo;
  for (std::uint32_t s = 0; s < n_p; ++s)
    if (s != p.initial_id()) todo.push_back(s);

  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == todo.size()) return true;
    std::uint32_t ps = todo[k];
    for (std::uint32_t qs = 0; qs < q.state_count(); ++qs) {
      if (used[qs]) continue;
      map[ps] = qs;
      used[qs] = 1;
      if (consistent(ps) && search(k + 1)) return true;
      used[qs] = 0;
      map[ps] = -1;
    }
    return false;
  };

  if (!consistent(p.initial_id()) || !search(0)) {
    result.holds = false;
    result.reason = "no injective state mapping embeds the variant's "
                    "transitions into the specification's may relation";
    return result;
  }
  result.holds = true;
  return result;
}

TraceLiftResult check_lemma1_trace_lifting(const Iolts& p, const Mia& q,
                                           int depth) {
  VariantCheckResult variant = is_variant_of(p, q);
  if (!variant.holds)
    throw Error(ErrorCode::kPreconditionViolated,
                "trace lifting requires p to be a variant of q: " +
                    variant.reason);

  SymbolTable symbols(p.alphabet(), /*with_delta=*/false);
  SuspensionView pv(p, symbols);
  SuspensionView qv(q, Modality::kMay, symbols);

  struct Node {
    detail::StateBits a;
    detail::StateBits b;
    std::int64_t parent;
    std::uint32_t sym;
    int depth;
  };
  std::vector<Node> nodes;
  nodes.push_back({pv.initial_set(), qv.initial_set(), -1, 0, 0});
  struct KeyHash {
    std::size_t operator()(
        const std::pair<detail::StateBits, detail::StateBits>& k) const {
      return k.first.hash() * 0x9e3779b97f4a7c15ull + k.second.hash();
    }
  };
  std::unordered_set<std::pair<detail::StateBits, detail::StateBits>, KeyHash>
      visited;
  auto key = [](const Node& n) { return std::pair(n.a, n.b); };
  visited.insert(key(nodes[0]));

  TraceLiftResult result;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t at = queue.front();
    queue.pop_front();
    ++result.traces_checked;
    if (nodes[at].depth >= depth) continue;
    for (std::uint32_t sym = 0; sym < symbols.size(); ++sym) {
      detail::StateBits a2 = pv.step(nodes[at].a, sym);
      if (a2.none()) continue;
      detail::StateBits b2 = qv.step(nodes[at].b, sym);
      Node next{std::move(a2), std::move(b2),
                static_cast<std::int64_t>(at), sym, nodes[at].depth + 1};
      if (next.b.none()) {
        Trace w;
        w.push_back(symbols.name(sym));
        std::int64_t up = next.parent;
        while (up > 0) {
          w.push_back(symbols.name(nodes[static_cast<std::size_t>(up)].sym));
          up = nodes[static_cast<std::size_t>(up)].parent;
        }
        std::reverse(w.begin(), w.end());
        result.holds = false;
        result.counterexample = std::move(w);
        return result;
      }
      if (visited.insert(key(next)).second) {
        nodes.push_back(std::move(next));
        queue.push_back(nodes.size() - 1);
      }
    }
  }
  return result;
}

}  // namespace mia
