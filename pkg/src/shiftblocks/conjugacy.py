"""Deciding direct conjugacy of two subshifts of finite type.

``X`` and ``Y`` are directly conjugate when ``Phi_M(X)`` and ``Phi_N(Y)`` are
similar for some ``M, N >= 1``.  With ``S_X, S_Y`` the steps of the given
presentations, only the comparison of ``|L_{S_X}(X)|`` with ``|L_{S_Y}(Y)|``
and a bounded walk up the language counts of the smaller side are needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .sft import (
    Sft,
    block_present_sft,
    is_empty,
    language,
    language_size,
    minimal_forbidden_words,
    sft_similar,
)
from .words import Projection

X_SMALLER = "X-smaller"
Y_SMALLER = "Y-smaller"
EQUAL = "equal"

PLATEAU = "language-count-plateau"
OVERSHOOT = "count-overshoot"
SIMILARITY_FAILED = "similarity-failed-at-equal-counts"
ONE_EMPTY = "exactly-one-empty"


class IterationCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ConjugacyDecision:
    conjugate: bool
    m: Optional[int] = None
    n: Optional[int] = None
    witness: Optional[Projection] = None
    reason: Optional[str] = None
    case: Optional[str] = None
    count_computations: int = 0

    def __bool__(self):
        return self.conjugate


def classify_case(x: Sft, y: Sft) -> str:
    cx, cy = language_size(x, x.step), language_size(y, y.step)
    if cx < cy:
        return X_SMALLER
    if cx > cy:
        return Y_SMALLER
    return EQUAL


def _grow_smaller(small: Sft, big: Sft, max_iterations: int):
    """Walk ``|L_{S+J}(small)|`` up towards ``|L_{S_big}(big)|``.

    Returns ``(J, witness, reason, counts_done)`` with ``witness`` mapping
    ``Phi_{S+J}(small)`` onto ``Phi_{S_big}(big)`` when found.
    """
    target = language_size(big, big.step)
    previous = language_size(small, small.step)
    j = 0
    while True:
        j += 1
        if j > max_iterations:
            raise IterationCapExceeded(f"no decision after {max_iterations} iterations")
        count = language_size(small, small.step + j)
        if count == previous:
            return j, None, PLATEAU, j
        if count > target:
            return j, None, OVERSHOOT, j
        if count == target:
            witness = sft_similar(block_present_sft(small, small.step + j), block_present_sft(big, big.step))
            return j, witness, None if witness else SIMILARITY_FAILED, j
        previous = count


def decide_direct_conjugacy(x: Sft, y: Sft, max_iterations: int = 10_000) -> ConjugacyDecision:
    ex, ey = is_empty(x), is_empty(y)
    if ex and ey:
        return ConjugacyDecision(True, 1, 1, Projection.from_dict({}, (), ()), case=EQUAL)
    if ex or ey:
        return ConjugacyDecision(False, reason=ONE_EMPTY)

    case = classify_case(x, y)
    if case == EQUAL:
        m, n = x.step, y.step
        witness = sft_similar(block_present_sft(x, m), block_present_sft(y, n))
        if witness is None:
            return ConjugacyDecision(False, m, n, reason=SIMILARITY_FAILED, case=case)
        return _checked(x, y, ConjugacyDecision(True, m, n, witness, case=case))

    if case == X_SMALLER:
        j, witness, reason, done = _grow_smaller(x, y, max_iterations)
        m, n = x.step + j, y.step
    else:
        j, witness, reason, done = _grow_smaller(y, x, max_iterations)
        m, n = x.step, y.step + j
        witness = witness.inverse() if witness else None
    if witness is None:
        return ConjugacyDecision(False, m, n, reason=reason, case=case, count_computations=done)
    return _checked(x, y, ConjugacyDecision(True, m, n, witness, case=case, count_computations=done))


def _checked(x: Sft, y: Sft, decision: ConjugacyDecision) -> ConjugacyDecision:
    if not verify_witness(x, y, decision):
        raise AssertionError("conjugacy witness failed re-verification")
    return decision


def verify_witness(x: Sft, y: Sft, decision: ConjugacyDecision) -> bool:
    """Re-check a positive decision: the witness must carry the language of
    ``Phi_M(X)`` onto that of ``Phi_N(Y)``."""
    if not decision.conjugate:
        return False
    if is_empty(x) and is_empty(y):
        return True
    bx, by = block_present_sft(x, decision.m), block_present_sft(y, decision.n)
    w = decision.witness
    if {w(a) for a in language(bx, 1)} != set(language(by, 1)):
        return False
    return {w(f) for f in minimal_forbidden_words(bx)} == set(minimal_forbidden_words(by))
