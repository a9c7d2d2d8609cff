"""Backspace evaluation over finite and ultimately periodic staged words.

A pass runs left to right with a stack.  Symbols that are not the active
eraser are pushed; the active eraser pops the most recently surviving
symbol.  An active eraser that finds nothing to pop makes the whole
evaluation undefined (it can never be repaired by later input, because a
pass consumes its word strictly left to right).

Multi-stage evaluation runs one pass per index, stage 1 first.  At stage
j the active eraser is Eraser(j); letters and erasers of larger index
are ordinary erasable material for it.  Erasers of smaller index cannot
occur at stage j since earlier stages consumed them.

For an ultimately periodic word the net effect of one period on a
sufficiently deep stack is a constant of the period alone: it pops some
fixed number of symbols (``dig``) and then leaves a fixed pushed word on
top.  Comparing dig against the push length decides everything:

* push longer than dig: the stack grows forever, the surviving word is
  infinite and ultimately periodic,
* push equal to dig: each period erases exactly what the previous one
  left, only the untouched stack bottom survives,
* push shorter than dig: the stack shrinks and some eraser eventually
  starves, so the evaluation is undefined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .words import Eraser, MalformedInput, StagedWord, UPWord, up_normalize

UNDEFINED = "undefined"
FINITE = "finite"
INFINITE = "infinite"


@dataclass(frozen=True, slots=True)
class LoopCertificate:
    """Replayable witness for an Infinite outcome.

    Starting from the evaluation stack reached after ``warmup_periods``
    periods, simulating ``loop_periods`` further periods pops exactly
    ``popped`` symbols and then pushes exactly ``pushed``.
    """

    warmup_periods: int
    loop_periods: int
    popped: int
    pushed: StagedWord


@dataclass(frozen=True, slots=True)
class EvalOutcome:
    """Result of a backspace evaluation: Undefined, Finite or Infinite."""

    status: str
    word: Optional[StagedWord] = None
    up: Optional[UPWord] = None
    certificate: Optional[LoopCertificate] = None

    @classmethod
    def undefined(cls) -> "EvalOutcome":
        return cls(UNDEFINED)

    @classmethod
    def finite(cls, word: StagedWord) -> "EvalOutcome":
        return cls(FINITE, word=word)

    @classmethod
    def infinite(cls, up: UPWord,
                 certificate: Optional[LoopCertificate] = None) -> "EvalOutcome":
        return cls(INFINITE, up=up, certificate=certificate)

    @property
    def is_undefined(self) -> bool:
        return self.status == UNDEFINED

    @property
    def is_finite(self) -> bool:
        return self.status == FINITE

    @property
    def is_infinite(self) -> bool:
        return self.status == INFINITE


def _pass_finite(word: Iterable, active: int) -> Optional[tuple]:
    """One pass over a finite word; surviving stack, or None when stuck."""
    stack = []
    for sym in word:
        if isinstance(sym, Eraser) and sym.index == active:
            if not stack:
                return None
            stack.pop()
        else:
            stack.append(sym)
    return tuple(stack)


def _pass_profile(period: Iterable, active: int) -> tuple[int, tuple]:
    """Net effect (dig, pushed) of one period pass on a deep stack.

    dig counts pops that reach below the stack level the pass started at;
    both values depend only on the period, never on the stack content.
    """
    pushed = []
    dig = 0
    for sym in period:
        if isinstance(sym, Eraser) and sym.index == active:
            if pushed:
                pushed.pop()
            else:
                dig += 1
        else:
            pushed.append(sym)
    return dig, tuple(pushed)


def _eraser_indices(word: Iterable) -> set[int]:
    return {sym.index for sym in word if isinstance(sym, Eraser)}


def _single_kind(symbols: Iterable) -> int:
    kinds = _eraser_indices(symbols)
    if len(kinds) > 1:
        raise MalformedInput(
            f"word mixes eraser kinds {sorted(kinds)}, expected one")
    return kinds.pop() if kinds else 1


def erase(word: StagedWord) -> EvalOutcome:
    """Evaluate a finite word that uses at most one eraser kind."""
    stack = _pass_finite(word, _single_kind(word))
    if stack is None:
        return EvalOutcome.undefined()
    return EvalOutcome.finite(stack)


def _erase_up_stage(x: UPWord, active: int) -> EvalOutcome:
    base = _pass_finite(x.prefix, active)
    if base is None:
        return EvalOutcome.undefined()
    dig, pushed = _pass_profile(x.period, active)
    if len(pushed) > dig:
        # net growth: defined iff the very first period has enough to dig
        if len(base) < dig:
            return EvalOutcome.undefined()
        body = base[:len(base) - dig]
        tail = pushed[:len(pushed) - dig]
        cert = LoopCertificate(warmup_periods=0, loop_periods=1,
                               popped=dig, pushed=pushed)
        return EvalOutcome.infinite(up_normalize(UPWord(body, tail)), cert)
    if len(pushed) == dig:
        # each period erases exactly what the previous one pushed
        if len(base) < dig:
            return EvalOutcome.undefined()
        return EvalOutcome.finite(base[:len(base) - dig])
    # net shrink: the stack is exhausted after finitely many periods
    return EvalOutcome.undefined()


def erase_up(x: UPWord) -> EvalOutcome:
    """Evaluate an ultimately periodic word with one eraser kind.

    Infinite outcomes carry a LoopCertificate and a normalized UPWord.
    """
    active = _single_kind(tuple(x.prefix) + tuple(x.period))
    return _erase_up_stage(x, active)


def _check_indices(symbols: Iterable, stages: int) -> None:
    for sym in symbols:
        if isinstance(sym, Eraser) and sym.index > stages:
            raise MalformedInput(
                f"eraser index {sym.index} exceeds stage bound {stages}")


def staged_erase(word: StagedWord, stages: int) -> EvalOutcome:
    """Run passes for stages 1..stages over a finite word."""
    if stages < 1:
        raise ValueError("stage count must be >= 1")
    _check_indices(word, stages)
    current = word
    for j in range(1, stages + 1):
        current = _pass_finite(current, j)
        if current is None:
            return EvalOutcome.undefined()
    return EvalOutcome.finite(current)


def staged_erase_up(x: UPWord, stages: int) -> EvalOutcome:
    """Run the stage pipeline over an ultimately periodic word.

    Each stage feeds its outcome into the next: Finite results continue
    with finite passes, Infinite results with periodic passes.  Undefined
    is absorbing.
    """
    if stages < 1:
        raise ValueError("stage count must be >= 1")
    _check_indices(tuple(x.prefix) + tuple(x.period), stages)
    word: Optional[StagedWord] = None
    up: Optional[UPWord] = x
    cert = None
    for j in range(1, stages + 1):
        if up is not None:
            out = _erase_up_stage(up, j)
        else:
            stack = _pass_finite(word, j)
            out = (EvalOutcome.undefined() if stack is None
                   else EvalOutcome.finite(stack))
        if out.is_undefined:
            return EvalOutcome.undefined()
        if out.is_infinite:
            up, word, cert = out.up, None, out.certificate
        else:
            up, word = None, out.word
    if up is not None:
        return EvalOutcome.infinite(up, cert)
    return EvalOutcome.finite(word)


def certificate_holds(x: UPWord, cert: LoopCertificate) -> bool:
    """Replay a certificate against the literal stack simulation."""
    active = _single_kind(tuple(x.prefix) + tuple(x.period))
    stack = _pass_finite(x.prefix, active)
    if stack is None:
        return False
    stack = list(stack)

    def run_period() -> bool:
        nonlocal low
        for sym in x.period:
            if isinstance(sym, Eraser) and sym.index == active:
                if not stack:
                    return False
                stack.pop()
                low = min(low, len(stack))
            else:
                stack.append(sym)
        return True

    low = len(stack)
    for _ in range(cert.warmup_periods):
        if not run_period():
            return False
    start = len(stack)
    low = start
    for _ in range(cert.loop_periods):
        if not run_period():
            return False
    return start - low == cert.popped and tuple(stack[low:]) == cert.pushed
