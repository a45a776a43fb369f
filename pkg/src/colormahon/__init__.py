"""Signed Mahonian statistics on colored permutation groups G_{c,n}."""
from .core import (ColoredLetter, ColoredPermutation, ColoredWord, GroupParams,
                   enumerate_group, fixed_points, format_word, inverse,
                   is_derangement, letter_rank, parse_word)
from .qpoly import IntPolynomial, q_binomial, q_integer, q_product, substitute_neg
from .stats import StatRow, col, des_set, fmaj, inv, inv_tilde, length_L, maj

__version__ = "0.1.0"

__all__ = [
    "ColoredLetter", "ColoredPermutation", "ColoredWord", "GroupParams",
    "enumerate_group", "fixed_points", "format_word", "inverse", "is_derangement",
    "letter_rank", "parse_word", "IntPolynomial", "q_binomial", "q_integer",
    "q_product", "substitute_neg", "StatRow", "col", "des_set", "fmaj", "inv",
    "inv_tilde", "length_L", "maj",
]
