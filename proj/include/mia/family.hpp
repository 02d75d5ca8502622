#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mia/conformance.hpp"
#include "mia/model.hpp"
#include "mia/refinement.hpp"

namespace mia {

struct GeneratorConfig {
  std::uint64_t seed = 0;
  int state_count = 5;
  int input_count = 2;
  int output_count = 2;
  double transition_density = 0.3;   // in [0, 1]
  double optional_fraction = 0.3;    // in [0, 1]; share of optional outputs
  bool ensure_input_enabled = false;
};

/// Deterministic seeded MIA generator; every output passes validation.
/// Raises kInfeasibleConfig on contradictory settings (zero density with
/// ensure_input_enabled and at least one input, no actions at all, counts
/// out of range).
Mia random_mia(const GeneratorConfig& cfg);

/// Seeded refinement resolver: per optional transition of q, randomly drop
/// it, keep it optional or promote it to mandatory. The result shares q's
/// state space and refines q by construction (verified on every call).
Mia resolve_refinement(const Mia& q, std::uint64_t seed);

/// The family of derivable IOLTS variants: all must transitions plus any
/// subset of the optional transitions, over the shared state space. Total
/// count is exactly 2^|optional|.
class VariantSet {
 public:
  explicit VariantSet(const Mia& base);

  const Mia& base() const { return base_; }
  const std::vector<Transition>& optional_transitions() const {
    return optional_;
  }
  int optional_count() const { return static_cast<int>(optional_.size()); }
  /// Exact total, as a decimal string ("2^k" form once k exceeds 63 bits).
  std::string count_string() const;
  bool count_exceeds(std::uint64_t cap) const;

  /// Variant for an explicit keep/drop choice per optional transition.
  Iolts variant(const std::vector<bool>& keep) const;
  /// Variant for a bitmask over the first (up to 64) optional transitions;
  /// used by ascending enumeration.
  Iolts variant_mask(std::uint64_t mask) const;

  static std::string mask_string(const std::vector<bool>& keep);

  /// Deterministic enumeration in ascending bitmask order, stopping at cap.
  /// truncated is set when the family is larger than cap.
  std::vector<std::vector<bool>> enumerate_masks(std::uint64_t cap,
                                                 bool* truncated) const;
  /// Uniform seeded sample of cap subsets (used beyond the enumeration cap).
  std::vector<std::vector<bool>> sample_masks(std::uint64_t cap,
                                              std::uint64_t seed) const;

 private:
  Mia base_;
  std::vector<Transition> optional_;
};

enum class HarnessStatus { kPass, kVacuousPass, kSkipped, kViolation };

std::string_view harness_status_name(HarnessStatus s);

struct HarnessViolation {
  std::string variant_mask;  // bit string over the optional list, or "-"
  std::optional<ConformanceWitness> witness;
  std::string detail;
};

/// Outcome of one theorem-harness run. Violations are implementation bugs
/// by construction: the checked statements are proven for the semantics
/// this library implements.
struct HarnessReport {
  std::string check;  // "soundness" | "completeness1" | "completeness2" | "prop2"
  HarnessStatus status = HarnessStatus::kPass;
  std::uint64_t variants_checked = 0;
  std::string variant_total;  // exact 2^k count
  bool sampled = false;       // family larger than the cap: seeded sample
  std::string note;           // reason for vacuous/skipped outcomes
  std::vector<HarnessViolation> violations;
  std::uint64_t cap = 0;
  std::uint64_t seed = 0;
};

/// Soundness: when mioco(i, s) holds, every variant derived from i conforms
/// to the family of s. Vacuous when mioco(i, s) fails; skipped when i is
/// not input-enabled.
HarnessReport verify_soundness(const Mia& i, const Mia& s,
                               std::uint64_t cap = 4096,
                               std::uint64_t sample_seed = 0);

/// Completeness under refinement: when i refines s and every variant of i
/// conforms to the family of s, mioco(i, s) holds. Skipped unless i is
/// input-enabled and refines s.
HarnessReport verify_completeness_I(const Mia& i, const Mia& s,
                                    std::uint64_t cap = 4096,
                                    std::uint64_t sample_seed = 0);

/// Unconditional completeness: when some variant of i fails against the
/// family of s, mioco(i, s) fails as well.
HarnessReport verify_completeness_II(const Mia& i, const Mia& s,
                                     std::uint64_t cap = 4096,
                                     std::uint64_t sample_seed = 0);

/// Refinement preserves mioco: when mioco(i, s) holds and i' is a seeded
/// resolution of i, mioco(i', s) holds.
HarnessReport verify_prop2(const Mia& i, const Mia& s,
                           std::uint64_t resolve_seed = 1);

}  // namespace mia
