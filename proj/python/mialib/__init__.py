"""Modal I/O conformance toolkit: MIA models, refinement, ioco/mioco/mior
checking, input completions, variant enumeration and the brute-force
theorem harness."""

from mialib._core import (  # noqa: F401
    Clause,
    GeneratorConfig,
    HarnessReport,
    Iolts,
    Mia,
    MiaError,
    Modality,
    RefinementResult,
    VariantCheckResult,
    Verdict,
    Witness,
    after,
    after_initial,
    angelic_completion,
    chaotic_completion,
    embed_iolts,
    family_ioco,
    famlts,
    init_actions,
    ioco,
    is_input_enabled,
    is_quiescent,
    is_strace,
    is_variant_of,
    lemma1_trace_lifting,
    load,
    load_iolts,
    load_mia,
    mioco,
    mior,
    out_set,
    parse_trace,
    random_mia,
    refines,
    resolve_refinement,
    serialize,
    straces,
    variants,
    verify_completeness_1,
    verify_completeness_2,
    verify_prop2,
    verify_soundness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
