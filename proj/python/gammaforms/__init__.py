"""Gamma_0(N)-equivalence of positive-definite binary quadratic forms."""

from ._core import (
    ClassGroup,
    Form,
    GenusTable,
    GroupElement,
    Representation,
    SafetyBoundExceeded,
    UnsupportedLevel,
    ValidationError,
    act,
    class_group,
    class_reps,
    classify_prime,
    cli_run,
    dirichlet_compose,
    elliptic_points,
    enumerate_reduced,
    equivalent_gamma0,
    find_representations,
    genus_table,
    is_reduced,
    is_valid_discriminant,
    kronecker,
    prepare_coprime,
    principal_form,
    principal_genus_congruences,
    reduce,
    reduce_sl2,
    verify_iso,
)

__all__ = [name for name in dir() if not name.startswith("_")]
