"""Bijections between 000-avoiding inversion sequences and non-derangements."""

from ._core import (
    InversionSequence,
    MarkedPermutation,
    ParseError,
    Permutation,
    SplitPair,
    TaggedNonDerangement,
    avoiders,
    avoids_000,
    count_derangements,
    count_inv000,
    count_non_derangements,
    decode_word,
    derangement_split,
    derangement_split_inverse,
    encode_word,
    ext,
    ext_inverse,
    phi,
    phi_cyclic,
    phi_inverse,
    phi_trace,
    theta,
    theta_inverse,
    varphi,
    varphi_alt,
    varphi_alt_inverse,
    varphi_inverse,
    verify_bijection,
    verify_identity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
