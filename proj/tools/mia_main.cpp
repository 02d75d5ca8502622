// Command-line front end: model checking out of one binary. Exit codes:
//   0  verdict holds / command succeeded
//   1  verdict fails
//   2  usage or parse error
//   3  invalid model (validation, alphabet, enabledness, preconditions)
//   4  theorem violation (verify subcommand only)

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mia/completion.hpp"
#include "mia/conformance.hpp"
#include "mia/family.hpp"
#include "mia/format.hpp"
#include "mia/model.hpp"
#include "mia/refinement.hpp"
#include "mia/report.hpp"
#include "mia/semantics.hpp"

namespace {

using nlohmann::json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidModel = 3;
constexpr int kExitTheoremViolation = 4;

struct Output {
  bool as_json = false;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  void emit(const json& report) const {
    if (as_json) {
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << mia::render_human(report);
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      std::cout << "(" << ms << " ms)\n";
    }
  }
};

int exit_code_for(const mia::Error& e) {
  switch (e.code()) {
    case mia::ErrorCode::kParse:
    case mia::ErrorCode::kUnknownAction:
    case mia::ErrorCode::kInfeasibleConfig:
      return kExitUsage;
    default:
      return kExitInvalidModel;
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw mia::Error(mia::ErrorCode::kParse,
                     "cannot write output file '" + path + "'");
  out << text;
}

mia::Mia maybe_complete(mia::Mia m, const std::string& strategy) {
  if (strategy.empty()) return m;
  if (strategy == "angelic") return mia::angelic_completion(m);
  if (strategy == "chaotic") return mia::chaotic_completion(m);
  throw mia::Error(mia::ErrorCode::kInfeasibleConfig,
                   "unknown completion strategy '" + strategy +
                       "' (expected angelic or chaotic)");
}

json model_stats(const char* key, std::size_t states, std::size_t transitions) {
  json j;
  j["states"] = states;
  j["transitions"] = transitions;
  j["model"] = key;
  return j;
}

int run_verdict_command(const std::string& command, const Output& out,
                        const mia::ConformanceVerdict& verdict,
                        json extra_stats) {
  json report = mia::report_envelope(command);
  report["verdict"] = mia::to_json(verdict);
  report["verdict"]["stats"]["models"] = std::move(extra_stats);
  out.emit(report);
  return verdict.holds ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modal I/O conformance toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a machine-readable report-v1 value");

  // check
  auto* check = app.add_subcommand("check", "parse and validate a model file");
  std::string check_file;
  check->add_option("model", check_file, "model file")->required();

  // refine
  auto* refine =
      app.add_subcommand("refine", "decide refinement p <= q (p refines q)");
  std::string refine_p, refine_q;
  refine->add_option("p", refine_p, "refined model")->required();
  refine->add_option("q", refine_q, "abstract model")->required();

  // variant
  auto* variant = app.add_subcommand(
      "variant", "decide variant derivation: iolts p derived from mia q");
  std::string variant_p, variant_q;
  bool variant_iso = false;
  variant->add_option("p", variant_p, "candidate variant (iolts)")->required();
  variant->add_option("q", variant_q, "specification (mia)")->required();
  variant->add_flag("--up-to-iso", variant_iso,
                    "match renamed variant states by injective mapping");

  // ioco / mioco / mior
  auto* ioco = app.add_subcommand("ioco", "classic input/output conformance");
  std::string ioco_impl, ioco_spec;
  ioco->add_option("impl", ioco_impl, "implementation (input-enabled iolts)")
      ->required();
  ioco->add_option("spec", ioco_spec, "specification (iolts)")->required();

  auto* mioco = app.add_subcommand("mioco", "modal input/output conformance");
  std::string mioco_impl, mioco_spec, mioco_complete;
  mioco->add_option("impl", mioco_impl, "implementation (mia)")->required();
  mioco->add_option("spec", mioco_spec, "specification (mia)")->required();
  mioco->add_option("--complete-impl", mioco_complete,
                    "apply a completion to the implementation first "
                    "(angelic|chaotic)");

  auto* mior = app.add_subcommand("mior", "modal trace-inclusion relation");
  std::string mior_impl, mior_spec;
  mior->add_option("impl", mior_impl, "implementation (mia)")->required();
  mior->add_option("spec", mior_spec, "specification (mia)")->required();

  // complete
  auto* complete =
      app.add_subcommand("complete", "input-enable a model by completion");
  std::string complete_strategy, complete_in, complete_out;
  complete
      ->add_option("--strategy", complete_strategy, "angelic or chaotic")
      ->required();
  complete->add_option("model", complete_in, "model file")->required();
  complete->add_option("-o,--output", complete_out, "output file (default stdout)");

  // famlts
  auto* fam = app.add_subcommand(
      "famlts", "extract the family LTS (all allowed transitions)");
  std::string fam_in, fam_out;
  fam->add_option("model", fam_in, "mia model file")->required();
  fam->add_option("-o,--output", fam_out, "output file (default stdout)");

  // variants
  auto* variants =
      app.add_subcommand("variants", "enumerate derivable variants");
  std::string variants_in;
  std::uint64_t variants_cap = 4096;
  bool variants_list = false;
  variants->add_option("model", variants_in, "mia model file")->required();
  variants->add_option("--cap", variants_cap, "enumeration cap");
  variants->add_flag("--list", variants_list, "list each variant");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a seeded random model");
  mia::GeneratorConfig gen_cfg;
  std::string gen_out;
  gen->add_option("--seed", gen_cfg.seed, "generator seed");
  gen->add_option("--states", gen_cfg.state_count, "state count");
  gen->add_option("--inputs", gen_cfg.input_count, "input action count");
  gen->add_option("--outputs", gen_cfg.output_count, "output action count");
  gen->add_option("--density", gen_cfg.transition_density,
                  "transition density in [0,1]");
  gen->add_option("--optional-fraction", gen_cfg.optional_fraction,
                  "fraction of optional outputs in [0,1]");
  gen->add_flag("--input-enabled", gen_cfg.ensure_input_enabled,
                "guarantee input-enabledness structurally");
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "run a theorem harness on an (impl, spec) pair");
  std::string verify_check, verify_i, verify_s, verify_complete;
  std::uint64_t verify_cap = 4096, verify_seed = 0;
  verify
      ->add_option("harness", verify_check,
                   "soundness|completeness1|completeness2|prop2")
      ->required();
  verify->add_option("impl", verify_i, "implementation (mia)")->required();
  verify->add_option("spec", verify_s, "specification (mia)")->required();
  verify->add_option("--cap", verify_cap, "variant cap (sampled beyond)");
  verify->add_option("--seed", verify_seed,
                     "sample seed / resolution seed for prop2");
  verify->add_option("--complete-impl", verify_complete,
                     "apply a completion to the implementation first");

  CLI11_PARSE(app, argc, argv);
  Output out{as_json};

  try {
    if (*check) {
      mia::RawModel raw = mia::load_raw(check_file);
      mia::ValidationReport report = mia::validate(raw);
      json j = mia::report_envelope("check");
      j["model"] = raw.name;
      j["validation"] = mia::to_json(report);
      out.emit(j);
      return report.ok ? kExitHolds : kExitInvalidModel;
    }

    if (*refine) {
      mia::Mia p = mia::load_mia(refine_p);
      mia::Mia q = mia::load_mia(refine_q);
      mia::RefinementResult result = mia::mia_refines(p, q);
      json j = mia::report_envelope("refine");
      j["refinement"] = mia::to_json(result);
      out.emit(j);
      return result.holds ? kExitHolds : kExitFails;
    }

    if (*variant) {
      mia::Iolts p = mia::load_iolts(variant_p);
      mia::Mia q = mia::load_mia(variant_q);
      mia::VariantCheckResult result = mia::is_variant_of(p, q, variant_iso);
      json j = mia::report_envelope("variant");
      j["variant_check"] = mia::to_json(result);
      out.emit(j);
      return result.holds ? kExitHolds : kExitFails;
    }

    if (*ioco) {
      mia::Iolts impl = mia::load_iolts(ioco_impl);
      mia::Iolts spec = mia::load_iolts(ioco_spec);
      json stats;
      stats["impl"] = model_stats("impl", impl.state_count(),
                                  impl.transitions().size());
      stats["spec"] = model_stats("spec", spec.state_count(),
                                  spec.transitions().size());
      return run_verdict_command("ioco", out, mia::ioco_check(impl, spec),
                                 std::move(stats));
    }

    if (*mioco) {
      mia::Mia impl =
          maybe_complete(mia::load_mia(mioco_impl), mioco_complete);
      mia::Mia spec = mia::load_mia(mioco_spec);
      json stats;
      stats["impl"] = model_stats("impl", impl.state_count(),
                                  impl.may_transitions().size());
      stats["spec"] = model_stats("spec", spec.state_count(),
                                  spec.may_transitions().size());
      return run_verdict_command("mioco", out, mia::mioco_check(impl, spec),
                                 std::move(stats));
    }

    if (*mior) {
      mia::Mia impl = mia::load_mia(mior_impl);
      mia::Mia spec = mia::load_mia(mior_spec);
      json stats;
      stats["impl"] = model_stats("impl", impl.state_count(),
                                  impl.may_transitions().size());
      stats["spec"] = model_stats("spec", spec.state_count(),
                                  spec.may_transitions().size());
      return run_verdict_command("mior", out, mia::mior_check(impl, spec),
                                 std::move(stats));
    }

    if (*complete) {
      mia::Mia m = mia::load_mia(complete_in);
      mia::Mia completed = maybe_complete(m, complete_strategy);
      std::string text = mia::serialize(
          completed,
          {"generated by: mia complete --strategy=" + complete_strategy + " " +
           complete_in});
      write_output(complete_out, text);
      if (!complete_out.empty()) {
        json j = mia::report_envelope("complete");
        j["message"] = "wrote " + complete_out;
        out.emit(j);
      }
      return kExitHolds;
    }

    if (*fam) {
      mia::Mia m = mia::load_mia(fam_in);
      std::string text = mia::serialize(
          mia::famlts(m), {"generated by: mia famlts " + fam_in});
      write_output(fam_out, text);
      if (!fam_out.empty()) {
        json j = mia::report_envelope("famlts");
        j["message"] = "wrote " + fam_out;
        out.emit(j);
      }
      return kExitHolds;
    }

    if (*variants) {
      mia::Mia m = mia::load_mia(variants_in);
      mia::VariantSet vs(m);
      bool truncated = false;
      auto masks = vs.enumerate_masks(variants_cap, &truncated);
      json j = mia::report_envelope("variants");
      j["variants"]["optional_count"] = vs.optional_count();
      j["variants"]["variant_total"] = vs.count_string();
      j["variants"]["cap"] = variants_cap;
      j["variants"]["truncated"] = truncated;
      if (variants_list) {
        json list = json::array();
        for (const auto& mask : masks) {
          mia::Iolts v = vs.variant(mask);
          list.push_back({{"mask", mia::VariantSet::mask_string(mask)},
                          {"transitions", v.transitions().size()},
                          {"name", v.name()}});
        }
        j["variants"]["list"] = std::move(list);
      }
      out.emit(j);
      return kExitHolds;
    }

    if (*gen) {
      mia::Mia m = mia::random_mia(gen_cfg);
      std::string text = mia::serialize(
          m, {"generated by: mia gen --seed " + std::to_string(gen_cfg.seed)});
      write_output(gen_out, text);
      return kExitHolds;
    }

    if (*verify) {
      mia::Mia i = maybe_complete(mia::load_mia(verify_i), verify_complete);
      mia::Mia s = mia::load_mia(verify_s);
      mia::HarnessReport report;
      if (verify_check == "soundness") {
        report = mia::verify_soundness(i, s, verify_cap, verify_seed);
      } else if (verify_check == "completeness1") {
        report = mia::verify_completeness_I(i, s, verify_cap, verify_seed);
      } else if (verify_check == "completeness2") {
        report = mia::verify_completeness_II(i, s, verify_cap, verify_seed);
      } else if (verify_check == "prop2") {
        report = mia::verify_prop2(i, s, verify_seed);
      } else {
        throw mia::Error(mia::ErrorCode::kInfeasibleConfig,
                         "unknown harness '" + verify_check + "'");
      }
      json j = mia::report_envelope("verify");
      j["harness"] = mia::to_json(report);
      out.emit(j);
      return report.status == mia::HarnessStatus::kViolation
                 ? kExitTheoremViolation
                 : kExitHolds;
    }
  } catch (const mia::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvalidModel;
  }
  return kExitUsage;
}
