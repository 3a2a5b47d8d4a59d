"""Sublinear property testers for free groups and positive monoids."""

from ._core import (
    abelianization,
    braid_density,
    braid_equal,
    braid_profile,
    braid_reverse,
    braid_test,
    common_multiple_witness,
    cyclic_reduce,
    free_reduce,
    magnus_coefficient,
    malcev_sequence,
    mc_equal,
    random_reduced_word,
    thompson_grid_fill,
    thompson_normal_form,
    whitehead_density,
    whitehead_full,
    whitehead_sublinear,
    wilson95,
)

__all__ = [
    "abelianization",
    "braid_density",
    "braid_equal",
    "braid_profile",
    "braid_reverse",
    "braid_test",
    "common_multiple_witness",
    "cyclic_reduce",
    "free_reduce",
    "magnus_coefficient",
    "malcev_sequence",
    "mc_equal",
    "random_reduced_word",
    "thompson_grid_fill",
    "thompson_normal_form",
    "whitehead_density",
    "whitehead_full",
    "whitehead_sublinear",
    "wilson95",
]
