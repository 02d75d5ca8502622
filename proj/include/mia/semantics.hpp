#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mia/model.hpp"

namespace mia {

/// A trace over inputs, outputs and the quiescence token "delta".
using Trace = std::vector<std::string>;

Trace parse_trace(std::string_view text);
std::string trace_to_string(const Trace& trace);

namespace detail {

/// Dynamic bitset over a model's state indices.
class StateBits {
 public:
  StateBits() = default;
  explicit StateBits(std::size_t n_states)
      : n_(n_states), words_((n_states + 63) / 64, 0) {}

  void set(std::uint32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::uint32_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }
  std::size_t size() const { return n_; }

  template <typename Fn>
  void for_each(Fn fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        unsigned bit = static_cast<unsigned>(__builtin_ctzll(w));
        fn(static_cast<std::uint32_t>(wi * 64 + bit));
        w &= w - 1;
      }
    }
  }

  bool operator==(const StateBits& other) const {
    return words_ == other.words_;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t w : words_) {
      h ^= std::hash<std::uint64_t>{}(w);
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace detail

/// Shared symbol numbering for trace exploration: all action names of an
/// alphabet plus the delta token, ordered lexicographically by token. Two
/// models with equal action sets produce identical tables, which keeps
/// synchronized explorations aligned and makes reported witnesses
/// deterministic (ties break by token order).
class SymbolTable {
 public:
  explicit SymbolTable(const Alphabet& alphabet, bool with_delta = true);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::uint32_t sym) const { return names_[sym]; }
  bool is_delta(std::uint32_t sym) const { return delta_ == sym; }
  bool is_output(std::uint32_t sym) const { return output_[sym]; }
  bool has_delta() const { return delta_ != kNone; }
  std::optional<std::uint32_t> index_of(std::string_view token) const;

 private:
  static constexpr std::uint32_t kNone = 0xffffffff;
  std::vector<std::string> names_;
  std::vector<bool> output_;
  std::uint32_t delta_ = kNone;
};

/// Read-only exploration view of a model under one modality: the model's
/// gamma transitions plus a delta self-loop at every gamma-quiescent state.
/// Quiescence is cross-paired exactly as defined for MIAs: may-quiescence
/// delta_may(q) holds iff init_must(q) contains no output, must-quiescence
/// delta_must(q) iff init_may(q) contains no output. For an IOLTS both
/// notions coincide with classic quiescence.
class SuspensionView {
 public:
  SuspensionView(const Mia& m, Modality gamma, const SymbolTable& symbols);
  SuspensionView(const Iolts& m, const SymbolTable& symbols);

  const SymbolTable& symbols() const { return *symbols_; }
  std::size_t state_count() const { return n_states_; }

  detail::StateBits initial_set() const;
  detail::StateBits step(const detail::StateBits& from,
                         std::uint32_t sym) const;
  std::span<const std::uint32_t> successors(std::uint32_t state,
                                            std::uint32_t sym) const {
    const auto& v = succ_[state * symbols_->size() + sym];
    return {v.data(), v.size()};
  }
  bool quiescent(std::uint32_t state) const { return quiescent_[state]; }

  /// Enabled output symbols of the subset plus delta when a member is
  /// quiescent; symbol ids ascending (= lexicographic by token). Empty
  /// subset yields the empty set.
  std::vector<std::uint32_t> out(const detail::StateBits& states) const;

  const std::string& state_name(std::uint32_t id) const;

 private:
  void index_transitions(
      const std::function<std::span<const std::uint32_t>(
          std::uint32_t, std::uint32_t)>& targets_of,
      const Alphabet& alphabet);

  const SymbolTable* symbols_;
  std::size_t n_states_ = 0;
  std::uint32_t initial_ = 0;
  std::vector<std::vector<std::uint32_t>> succ_;  // [state * n_syms + sym]
  std::vector<bool> quiescent_;
  const std::vector<std::string>* state_names_;
};

/// init_gamma(q): labels of outgoing gamma transitions, in alphabet order.
std::vector<std::string> init_actions(const Mia& m, std::string_view state,
                                      Modality gamma);
std::vector<std::string> init_actions(const Iolts& m, std::string_view state);

/// delta_gamma(q) under the cross-pairing documented on SuspensionView.
bool is_quiescent(const Mia& m, std::string_view state, Modality gamma);
bool is_quiescent(const Iolts& m, std::string_view state);

/// States reachable from the sources via sigma over the gamma suspension
/// view. The empty result encodes "sigma is not enabled". Unknown source
/// states raise kUnknownState; unknown trace tokens raise kUnknownAction.
std::vector<std::string> after(const Mia& m,
                               const std::vector<std::string>& sources,
                               const Trace& sigma, Modality gamma);
std::vector<std::string> after(const Mia& m, std::string_view source,
                               const Trace& sigma, Modality gamma);
std::vector<std::string> after_initial(const Mia& m, const Trace& sigma,
                                       Modality gamma);
std::vector<std::string> after(const Iolts& m,
                               const std::vector<std::string>& sources,
                               const Trace& sigma);
std::vector<std::string> after(const Iolts& m, std::string_view source,
                               const Trace& sigma);
std::vector<std::string> after_initial(const Iolts& m, const Trace& sigma);

/// Out_gamma(P): enabled gamma outputs over P plus "delta" when some member
/// is gamma-quiescent. Tokens sorted lexicographically.
std::vector<std::string> out_set(const Mia& m,
                                 const std::vector<std::string>& states,
                                 Modality gamma);
std::vector<std::string> out_set(const Iolts& m,
                                 const std::vector<std::string>& states);

struct StraceLimits {
  /// Safety valve; enumeration throws kLimitExceeded beyond it.
  std::size_t max_traces = 1u << 20;
};

/// All gamma suspension traces of length <= depth from the initial state,
/// shortest first, ties in token order. Enumeration never extends a trace
/// ending in delta by another delta (the self-loop makes that redundant);
/// membership checking still accepts repeated delta. depth < 0 selects the
/// default bound 2*|Q|+2.
std::vector<Trace> enumerate_straces(const Mia& m, Modality gamma,
                                     int depth = -1, StraceLimits = {});
std::vector<Trace> enumerate_straces(const Iolts& m, int depth = -1,
                                     StraceLimits = {});

bool is_strace(const Mia& m, const Trace& sigma, Modality gamma);
bool is_strace(const Iolts& m, const Trace& sigma);

}  // namespace mia
