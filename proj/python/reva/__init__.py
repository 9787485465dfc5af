"""Robustness validation and targeted enhancement toolkit.

Thin Python surface over the C++ core: datasets, tiny differentiable
networks, adversarial attacks, common corruptions, the per-input resilient
analyzer, and the robustness metric family.
"""

from ._core import (  # noqa: F401
    AnalyzerConfig,
    ArchSpec,
    AttackSpec,
    ConfigError,
    CorruptError,
    Dataset,
    FormatError,
    Network,
    RuntimeError,
    SyntheticSpec,
    apply_corruption,
    attack_suite,
    bim,
    classification_error,
    corrupt_suite,
    corruption_catalog,
    default_attack_specs,
    fgsm,
    generate_synthetic,
    group_from_rc_err,
    load_checkpoint,
    load_cifar_binary,
    load_dataset,
    m_adv_err,
    misprediction_score,
    pgd,
    radv_err,
    rank_dataset,
    rc_err,
    save_checkpoint,
    save_dataset,
    select_by_class,
    set_thread_count,
    sweep_epsilon,
    uce,
    wilcoxon_signed_rank,
)

__version__ = "0.1.0"
