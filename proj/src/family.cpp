#include "mia/family.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace mia {

std::string_view harness_status_name(HarnessStatus s) {
  switch (s) {
    case HarnessStatus::kPass:
      return "pass";
    case HarnessStatus::kVacuousPass:
      return "vacuous-pass";
    case HarnessStatus::kSkipped:
      return "skipped";
    case HarnessStatus::kViolation:
      return "THEOREM-VIOLATION";
  }
  return "?";
}

namespace {

// Distribution helpers with pinned arithmetic: std::uniform_*_distribution
// is implementation-defined, which would break the cross-platform
// reproducibility contract of seeded runs.
std::uint64_t pick(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Mia random_mia(const GeneratorConfig& cfg) {
  if (cfg.state_count < 1)
    throw Error(ErrorCode::kInfeasibleConfig, "state_count must be >= 1");
  if (cfg.input_count < 0 || cfg.output_count < 0)
    throw Error(ErrorCode::kInfeasibleConfig, "action counts must be >= 0");
  if (cfg.input_count == 0 && cfg.output_count == 0)
    throw Error(ErrorCode::kInfeasibleConfig,
                "at least one input or output action is required");
  if (cfg.transition_density < 0.0 || cfg.transition_density > 1.0 ||
      cfg.optional_fraction < 0.0 || cfg.optional_fraction > 1.0)
    throw Error(ErrorCode::kInfeasibleConfig,
                "density and optional fraction must lie in [0, 1]");
  if (cfg.ensure_input_enabled && cfg.input_count > 0 &&
      cfg.transition_density == 0.0)
    throw Error(ErrorCode::kInfeasibleConfig,
                "cannot build an input-enabled model with zero density");

  std::mt19937_64 rng(cfg.seed);
  const auto n = static_cast<std::uint64_t>(cfg.state_count);
  std::vector<std::string> states;
  for (int s = 0; s < cfg.state_count; ++s)
    states.push_back("q" + std::to_string(s));
  std::vector<std::string> inputs;
  for (int i = 0; i < cfg.input_count; ++i)
    inputs.push_back("i" + std::to_string(i));
  std::vector<std::string> outputs;
  for (int o = 0; o < cfg.output_count; ++o)
    outputs.push_back("o" + std::to_string(o));

  std::vector<Transition> must;
  std::vector<Transition> may;
  for (const std::string& src : states) {
    for (const std::string& input : inputs) {
      bool present =
          cfg.ensure_input_enabled || unit(rng) < cfg.transition_density;
      if (!present) continue;
      must.push_back({src, input, states[pick(rng, n)]});
    }
    for (const std::string& output : outputs) {
      if (unit(rng) < cfg.transition_density) {
        Transition t{src, output, states[pick(rng, n)]};
        if (unit(rng) < cfg.optional_fraction)
          may.push_back(std::move(t));
        else
          must.push_back(std::move(t));
      }
      // Occasional second target keeps output nondeterminism in the mix.
      if (unit(rng) < cfg.transition_density * 0.25) {
        Transition t{src, output, states[pick(rng, n)]};
        if (unit(rng) < cfg.optional_fraction)
          may.push_back(std::move(t));
        else
          must.push_back(std::move(t));
      }
    }
  }
  return Mia("gen_s" + std::to_string(cfg.seed),
             Alphabet(std::move(inputs), std::move(outputs)),
             std::move(states), "q0", std::move(must), std::move(may));
}

Mia resolve_refinement(const Mia& q, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Transition> must = q.must_transitions();
  std::vector<Transition> may = q.must_transitions();
  for (const Transition& t : q.optional_transitions()) {
    switch (pick(rng, 3)) {
      case 0:  // drop
        break;
      case 1:  // keep optional
        may.push_back(t);
        break;
      default:  // promote to mandatory
        must.push_back(t);
        may.push_back(t);
        break;
    }
  }
  Mia r(q.name() + "_r" + std::to_string(seed), q.alphabet(), q.states(),
        q.initial(), std::move(must), std::move(may));
  if (!mia_refines(r, q).holds)
    throw Error(ErrorCode::kPreconditionViolated,
                "internal error: resolved model does not refine its source");
  return r;
}

VariantSet::VariantSet(const Mia& base)
    : base_(base), optional_(base.optional_transitions()) {}

std::string VariantSet::count_string() const {
  const std::size_t k = optional_.size();
  if (k <= 63) return std::to_string(std::uint64_t{1} << k);
  return "2^" + std::to_string(k);
}

bool VariantSet::count_exceeds(std::uint64_t cap) const {
  const std::size_t k = optional_.size();
  if (k > 63) return true;
  return (std::uint64_t{1} << k) > cap;
}

Iolts VariantSet::variant(const std::vector<bool>& keep) const {
  std::vector<Transition> transitions = base_.must_transitions();
  for (std::size_t j = 0; j < optional_.size(); ++j)
    if (keep[j]) transitions.push_back(optional_[j]);
  return Iolts(base_.name() + "_v" + mask_string(keep), base_.alphabet(),
               base_.states(), base_.initial(), std::move(transitions));
}

Iolts VariantSet::variant_mask(std::uint64_t mask) const {
  std::vector<bool> keep(optional_.size(), false);
  for (std::size_t j = 0; j < optional_.size() && j < 64; ++j)
    keep[j] = (mask >> j) & 1;
  return variant(keep);
}

std::string VariantSet::mask_string(const std::vector<bool>& keep) {
  if (keep.empty()) return "0";
  std::string s;
  for (std::size_t j = keep.size(); j-- > 0;) s += keep[j] ? '1' : '0';
  return s;
}

std::vector<std::vector<bool>> VariantSet::enumerate_masks(
    std::uint64_t cap, bool* truncated) const {
  const std::size_t k = optional_.size();
  bool over = count_exceeds(cap);
  if (truncated) *truncated = over;
  std::uint64_t total = over ? cap : (std::uint64_t{1} << k);
  std::vector<std::vector<bool>> masks;
  masks.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<bool> keep(k, false);
    for (std::size_t j = 0; j < k && j < 64; ++j) keep[j] = (mask >> j) & 1;
    masks.push_back(std::move(keep));
  }
  return masks;
}

std::vector<std::vector<bool>> VariantSet::sample_masks(
    std::uint64_t cap, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<bool>> masks;
  masks.reserve(cap);
  for (std::uint64_t i = 0; i < cap; ++i) {
    std::vector<bool> keep(optional_.size());
    for (std::size_t j = 0; j < keep.size(); ++j) keep[j] = rng() & 1;
    masks.push_back(std::move(keep));
  }
  return masks;
}

namespace {

struct VariantSweep {
  std::vector<std::vector<bool>> masks;
  bool sampled = false;
};

VariantSweep pick_masks(const VariantSet& vs, std::uint64_t cap,
                        std::uint64_t seed) {
  VariantSweep sweep;
  if (vs.count_exceeds(cap)) {
    sweep.masks = vs.sample_masks(cap, seed);
    sweep.sampled = true;
  } else {
    bool truncated = false;
    sweep.masks = vs.enumerate_masks(cap, &truncated);
  }
  return sweep;
}

HarnessReport make_report(std::string check, std::uint64_t cap,
                          std::uint64_t seed) {
  HarnessReport report;
  report.check = std::move(check);
  report.cap = cap;
  report.seed = seed;
  return report;
}

bool precondition_input_enabled(const Mia& i, HarnessReport& report) {
  InputEnabledness ie = is_input_enabled(i);
  if (ie.enabled) return true;
  report.status = HarnessStatus::kSkipped;
  report.note = "implementation is not input-enabled (state '" +
                ie.missing.front().first + "' misses input '" +
                ie.missing.front().second + "')";
  return false;
}

}  // namespace

HarnessReport verify_soundness(const Mia& i, const Mia& s, std::uint64_t cap,
                               std::uint64_t sample_seed) {
  HarnessReport report = make_report("soundness", cap, sample_seed);
  if (!precondition_input_enabled(i, report)) return report;
  ConformanceVerdict conf = mioco_check(i, s);
  if (!conf.holds) {
    report.status = HarnessStatus::kVacuousPass;
    report.note = "mioco(i, s) does not hold; the implication is vacuous";
    return report;
  }
  VariantSet vs(i);
  report.variant_total = vs.count_string();
  VariantSweep sweep = pick_masks(vs, cap, sample_seed);
  report.sampled = sweep.sampled;
  for (const auto& mask : sweep.masks) {
    Iolts variant = vs.variant(mask);
    ConformanceVerdict v = family_ioco_check(variant, s);
    ++report.variants_checked;
    if (!v.holds)
      report.violations.push_back(
          {VariantSet::mask_string(mask), v.witness,
           "variant fails the family conformance check although mioco(i, s) "
           "holds"});
  }
  report.status = report.violations.empty() ? HarnessStatus::kPass
                                            : HarnessStatus::kViolation;
  return report;
}

HarnessReport verify_completeness_I(const Mia& i, const Mia& s,
                                    std::uint64_t cap,
                                    std::uint64_t sample_seed) {
  HarnessReport report = make_report("completeness1", cap, sample_seed);
  if (!precondition_input_enabled(i, report)) return report;
  if (!mia_refines(i, s).holds) {
    report.status = HarnessStatus::kSkipped;
    report.note = "hypothesis requires i to refine s";
    return report;
  }
  VariantSet vs(i);
  report.variant_total = vs.count_string();
  VariantSweep sweep = pick_masks(vs, cap, sample_seed);
  report.sampled = sweep.sampled;
  bool all_pass = true;
  for (const auto& mask : sweep.masks) {
    ++report.variants_checked;
    if (!family_ioco_check(vs.variant(mask), s).holds) {
      all_pass = false;
      break;
    }
  }
  if (!all_pass) {
    report.status = HarnessStatus::kVacuousPass;
    report.note = "some variant fails the family check; nothing to conclude";
    return report;
  }
  ConformanceVerdict conf = mioco_check(i, s);
  if (!conf.holds) {
    report.violations.push_back(
        {"-", conf.witness,
         std::string("every checked variant conforms to the family but "
                     "mioco(i, s) fails") +
             (sweep.sampled ? " (sampled hypothesis)" : "")});
    report.status = HarnessStatus::kViolation;
  } else {
    report.status = HarnessStatus::kPass;
  }
  return report;
}

HarnessReport verify_completeness_II(const Mia& i, const Mia& s,
                                     std::uint64_t cap,
                                     std::uint64_t sample_seed) {
  HarnessReport report = make_report("completeness2", cap, sample_seed);
  if (!precondition_input_enabled(i, report)) return report;
  VariantSet vs(i);
  report.variant_total = vs.count_string();
  VariantSweep sweep = pick_masks(vs, cap, sample_seed);
  report.sampled = sweep.sampled;
  std::optional<std::string> failing_mask;
  std::optional<ConformanceWitness> failing_witness;
  for (const auto& mask : sweep.masks) {
    ++report.variants_checked;
    ConformanceVerdict v = family_ioco_check(vs.variant(mask), s);
    if (!v.holds) {
      failing_mask = VariantSet::mask_string(mask);
      failing_witness = v.witness;
      break;
    }
  }
  if (!failing_mask) {
    report.status = HarnessStatus::kVacuousPass;
    report.note = std::string("no variant fails against the family") +
                  (sweep.sampled ? " (sampled)" : "");
    return report;
  }
  ConformanceVerdict conf = mioco_check(i, s);
  if (conf.holds) {
    report.violations.push_back(
        {*failing_mask, failing_witness,
         "a variant fails the family check but mioco(i, s) still holds"});
    report.status = HarnessStatus::kViolation;
  } else {
    report.status = HarnessStatus::kPass;
  }
  return report;
}

HarnessReport verify_prop2(const Mia& i, const Mia& s,
                           std::uint64_t resolve_seed) {
  HarnessReport report = make_report("prop2", 0, resolve_seed);
  if (!precondition_input_enabled(i, report)) return report;
  ConformanceVerdict base = mioco_check(i, s);
  if (!base.holds) {
    report.status = HarnessStatus::kVacuousPass;
    report.note = "mioco(i, s) does not hold; preservation is vacuous";
    return report;
  }
  Mia refined = resolve_refinement(i, resolve_seed);
  InputEnabledness ie = is_input_enabled(refined);
  if (!ie.enabled) {
    report.violations.push_back(
        {"-", std::nullopt,
         "refinement of an input-enabled model lost input-enabledness at "
         "state '" +
             ie.missing.front().first + "'"});
    report.status = HarnessStatus::kViolation;
    return report;
  }
  ConformanceVerdict v = mioco_check(refined, s);
  ++report.variants_checked;
  if (!v.holds) {
    report.violations.push_back(
        {"-", v.witness, "mioco is not preserved by the seeded refinement"});
    report.status = HarnessStatus::kViolation;
  } else {
    report.status = HarnessStatus::kPass;
  }
  return report;
}

}  // namespace mia
