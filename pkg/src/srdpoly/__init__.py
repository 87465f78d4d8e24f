"""Polynomials of signed relative derangements graded by number of bars.

Recursions, coefficient tables and counting sequences come with an
exhaustive enumeration oracle that every fast path can be checked against.
"""
from .core import Element, IntPoly, Mode, QTable, Rational, SignedSeq, TruncSeries
from .enumeration import SeqClass, bar_count, brute_f, brute_poly, classify, gen_signed_seqs
from .lift import bar_add_one, conj_reverse, drop_max, lemma_s_check, s_up, s_up_list
from .recur import (IdentityReport, coeff_q, count_D, count_DB, count_f, count_Q, count_QB,
                    poly_Q_B, q_table, qbar, verify_identities)
from .series import build_series, functional_identity_residual
from .stats import expectation, moments, variance
from .unimodal import delta_P, inj_one_to_two, inj_zero_to_one, is_unimodal

__all__ = [
    "Element", "IntPoly", "Mode", "QTable", "Rational", "SignedSeq", "TruncSeries",
    "SeqClass", "bar_count", "brute_f", "brute_poly", "classify", "gen_signed_seqs",
    "bar_add_one", "conj_reverse", "drop_max", "lemma_s_check", "s_up", "s_up_list",
    "IdentityReport", "coeff_q", "count_D", "count_DB", "count_f", "count_Q", "count_QB",
    "poly_Q_B", "q_table", "qbar", "verify_identities",
    "build_series", "functional_identity_residual",
    "expectation", "moments", "variance",
    "delta_P", "inj_one_to_two", "inj_zero_to_one", "is_unimodal",
]
