"""Membership and factorization machinery for the omega power of the
factor language.

The factor language consists of the coded words (pad 0)^* (pad 1) where
a pad is any coded word whose decoded staged form erases to nothing.
Because every pad erases away, a factor is the coding of one generator
letter 0^k 1 padded with vanishing material.  The central facts made
checkable here at desk scale:

* finite words have at most one factorization into factors (the factor
  language is a code),
* prefixes of the omega power are recognized by a split into complete
  factors plus a completable residue, where completability reduces to
  stage one never starving an eraser: a starved index-1 eraser can
  never be fed (the pass runs left to right), while survivors of stage
  one, whatever their stages, are erasable by appended index-1 erasers
  before any later stage runs,
* ultimately periodic words can be certified inside the omega power by
  a factorization lasso,
* intersecting the omega power with an order-p block stream gives
  exactly the coded image of the p-stage picture, checked prefix for
  prefix,
* the factor language is enumerable (length order, then 0 < 1 < a < b),
  which yields the pairing decider for index streams.

The membership caches below are plain dicts: safe to share between
concurrent readers under the interpreter lock, grown by whichever
caller gets there first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Iterator, Optional

from .words import Eraser, MalformedInput, StagedWord, UPWord, up_normalize, up_prefix
from .eraser import _pass_finite, staged_erase_up
from .staged import vanishes
from .coding import _OUT, _scan_step, decode, decode_up, encode, in_block_stream

_vanishes_cache: dict[str, bool] = {}
_factor_cache: dict[str, bool] = {}
_first_pass_cache: dict[StagedWord, Optional[StagedWord]] = {}
_staged_vanish_cache: dict[tuple[StagedWord, int], bool] = {}
_staged_factor_cache: dict[tuple[StagedWord, int], bool] = {}


def clear_caches() -> None:
    _vanishes_cache.clear()
    _factor_cache.clear()
    _first_pass_cache.clear()
    _staged_vanish_cache.clear()
    _staged_factor_cache.clear()


# ---------------------------------------------------------------- pads

def vanishes_coded(word: str) -> bool:
    """Does the word decode to a staged word that erases to nothing?"""
    hit = _vanishes_cache.get(word)
    if hit is None:
        hit = _compute_vanishes(word)
        _vanishes_cache[word] = hit
    return hit


def _compute_vanishes(word: str) -> bool:
    try:
        res = decode(word)
    except MalformedInput:
        return False
    if res.dangling:
        return False
    return _erases_to_nothing(res.symbols)


def _top_index(symbols) -> int:
    return max((s.index for s in symbols if isinstance(s, Eraser)), default=0)


def _erases_to_nothing(symbols: StagedWord) -> bool:
    current = symbols
    for j in range(1, _top_index(symbols) + 1):
        current = _pass_finite(current, j)
        if current is None:
            return False
    return current == ()


def _first_pass(symbols: StagedWord) -> Optional[StagedWord]:
    """Stage-one survivors, or None when an index-1 eraser starves.

    Stage one decides extendability on its own.  A starved index-1
    eraser can never be fed from the right, so its failure is final.
    Everything that survives stage one, erasers included, can still be
    popped there by appended index-1 erasers, which empties every later
    stage before it runs.
    """
    if symbols in _first_pass_cache:
        return _first_pass_cache[symbols]
    hit = _pass_finite(symbols, 1)
    _first_pass_cache[symbols] = hit
    return hit


# ------------------------------------------------------------- factors

def is_factor(word: str) -> bool:
    """Membership in the factor language (pad 0)^* (pad 1)."""
    hit = _factor_cache.get(word)
    if hit is None:
        hit = _compute_factor(word)
        _factor_cache[word] = hit
    return hit


def _compute_factor(w: str) -> bool:
    n = len(w)
    if n == 0 or w[n - 1] != "1":
        return False
    # reach[i]: w[:i] splits into complete (pad 0) blocks
    reach = [False] * n
    reach[0] = True
    for j in range(1, n):
        if w[j - 1] == "0":
            reach[j] = any(reach[i] and vanishes_coded(w[i:j - 1])
                           for i in range(j))
    return any(reach[i] and vanishes_coded(w[i:n - 1]) for i in range(n))


@dataclass(frozen=True, slots=True)
class Factorization:
    """Number of factor decompositions; cut positions when unique.

    cuts lists every boundary including 0 and the word length.
    """

    count: int
    cuts: Optional[tuple[int, ...]]


def factorize(word: str) -> Factorization:
    n = len(word)
    ways = [0] * (n + 1)
    ways[0] = 1
    for j in range(1, n + 1):
        total = 0
        for i in range(j):
            if ways[i] and is_factor(word[i:j]):
                total += ways[i]
        ways[j] = total
    if ways[n] != 1:
        return Factorization(ways[n], None)
    cuts = [n]
    j = n
    while j > 0:
        # uniqueness forces a single contributing split at every level
        j = next(i for i in range(j) if ways[i] and is_factor(word[i:j]))
        cuts.append(j)
    return Factorization(1, tuple(reversed(cuts)))


# ------------------------------------------------------ viable prefixes

def _pad_prefix(t: str, p: Optional[int] = None) -> bool:
    """Is t a prefix of some pad?  t may stop in the middle of a code.

    With p set, completion codes are capped at index p (the order-p
    block stream alphabet); the caller guarantees the codes already in
    t respect the cap.  Without a cap a dangling code never hurts: it
    completes to an index >= 2 eraser, plain content for stage one.
    Under p = 1 the forced index-1 completion must find a survivor.
    """
    try:
        res = decode(t)
    except MalformedInput:
        return False
    survivors = _first_pass(res.symbols)
    if survivors is None:
        return False
    if not res.dangling:
        return True
    betas = len(res.dangling) - 1
    if p is None or p >= 2:
        return True
    return betas <= 1 and len(survivors) >= 1


def _member_prefix(r: str, p: Optional[int] = None) -> bool:
    """Is r a prefix of a single factor?"""
    m = len(r)
    blocks = [False] * (m + 1)
    blocks[0] = True
    for j in range(1, m + 1):
        if r[j - 1] == "0":
            blocks[j] = any(blocks[i] and vanishes_coded(r[i:j - 1])
                            for i in range(j))
    return any(blocks[i] and _pad_prefix(r[i:], p) for i in range(m + 1))


def _viable(word: str, p: Optional[int]) -> bool:
    n = len(word)
    reach = [False] * (n + 1)
    reach[0] = True
    for j in range(1, n + 1):
        reach[j] = any(reach[i] and is_factor(word[i:j]) for i in range(j))
    return any(reach[i] and _member_prefix(word[i:], p)
               for i in range(n, -1, -1))


def viable_prefix(word: str) -> bool:
    """Is the word a prefix of some element of the omega power?"""
    return _viable(word, None)


# ----------------------------------------------------------- omega words

@dataclass(frozen=True, slots=True)
class LassoVerdict:
    """Outcome of the bounded lasso search.

    yes: the word provably lies in the omega power; the loop segment
    starts at loop_start (inside the periodic part), its length is a
    multiple of the period length, and factor_cuts factorizes prefix and
    loop.  no: some finite prefix is not viable.  unknown: neither
    happened within the explored bound.
    """

    status: str
    loop_start: Optional[int] = None
    loop_length: Optional[int] = None
    factor_cuts: Optional[tuple[int, ...]] = None
    bound: Optional[int] = None


def lasso_member(x: UPWord, bound: int) -> LassoVerdict:
    """Search for a factorization lasso within bound period copies."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    ulen, plen = len(x.prefix), len(x.period)
    w = up_prefix(x, ulen + bound * plen)
    n = len(w)
    reach = [False] * (n + 1)
    parent: dict[int, int] = {}
    reach[0] = True
    for j in range(1, n + 1):
        for i in range(j):
            if reach[i] and is_factor(w[i:j]):
                reach[j] = True
                parent[j] = i
                break
    for p1 in range(ulen, n + 1):
        if not reach[p1]:
            continue
        inner = [False] * (n + 1)
        inner[p1] = True
        ipar: dict[int, int] = {}
        for j in range(p1 + 1, n + 1):
            for i in range(p1, j):
                if inner[i] and is_factor(w[i:j]):
                    inner[j] = True
                    ipar[j] = i
                    break
        for p2 in range(p1 + plen, n + 1, plen):
            if not inner[p2]:
                continue
            cuts = [p2]
            j = p2
            while j > p1:
                j = ipar[j]
                cuts.append(j)
            j = p1
            while j > 0:
                j = parent[j]
                cuts.append(j)
            return LassoVerdict("yes", loop_start=p1, loop_length=p2 - p1,
                                factor_cuts=tuple(reversed(cuts)))
    if not viable_prefix(w):
        return LassoVerdict("no")
    return LassoVerdict("unknown", bound=bound)


def has_infinitely_many_ones(x: UPWord) -> bool:
    """Does the denoted binary word contain 1 beyond every position?"""
    for sym in tuple(x.prefix) + tuple(x.period):
        if sym not in (0, 1, "0", "1"):
            raise MalformedInput("word is not over the binary alphabet")
    period = up_normalize(x).period
    return any(sym in (1, "1") for sym in period)


def in_erasure_ladder(x: UPWord, p: int) -> bool:
    """Does the p-stage pipeline send x to a word with infinitely many 1s?"""
    if p < 1:
        raise ValueError("stage count must be >= 1")
    out = staged_erase_up(x, p)  # indices above p are malformed here
    return out.is_infinite and has_infinitely_many_ones(out.up)


def in_coded_erasure_ladder(x: UPWord, p: int) -> bool:
    """Coded twin of the ladder: block stream membership plus the decoded
    pipeline test."""
    if not in_block_stream(x, p):
        return False
    return in_erasure_ladder(decode_up(x), p)


# ------------------------------------------------- intersection identity

def _rp_prefix(word: str, p: int) -> bool:
    """Is the word a prefix of some order-p block stream?"""
    state = _OUT
    for ch in word:
        state = _scan_step(state, ch, p)
        if state is None:
            return False
    return True


def _rp_prefixes(p: int, n: int) -> Iterator[str]:
    """Every prefix of an order-p block stream, up to length n.

    Every live scanner state can be completed to a full stream, so the
    prefixes are exactly the words the scanner survives.
    """
    stack = [("", _OUT)]
    while stack:
        w, state = stack.pop()
        yield w
        if len(w) == n:
            continue
        for ch in "01ab":
            nxt = _scan_step(state, ch, p)
            if nxt is not None:
                stack.append((w + ch, nxt))


def _staged_vanishes(w: StagedWord, p: int) -> bool:
    key = (w, p)
    hit = _staged_vanish_cache.get(key)
    if hit is None:
        hit = vanishes(w, p)
        _staged_vanish_cache[key] = hit
    return hit


def _staged_factor(w: StagedWord, p: int) -> bool:
    key = (w, p)
    hit = _staged_factor_cache.get(key)
    if hit is None:
        hit = _compute_staged_factor(w, p)
        _staged_factor_cache[key] = hit
    return hit


def _compute_staged_factor(w: StagedWord, p: int) -> bool:
    n = len(w)
    if n == 0 or w[n - 1] != 1:
        return False
    reach = [False] * n
    reach[0] = True
    for j in range(1, n):
        if w[j - 1] == 0:
            reach[j] = any(reach[i] and _staged_vanishes(w[i:j - 1], p)
                           for i in range(j))
    return any(reach[i] and _staged_vanishes(w[i:n - 1], p) for i in range(n))


def _staged_member_prefix(r: StagedWord, p: int) -> bool:
    m = len(r)
    blocks = [False] * (m + 1)
    blocks[0] = True
    for j in range(1, m + 1):
        if r[j - 1] == 0:
            blocks[j] = any(blocks[i] and _staged_vanishes(r[i:j - 1], p)
                            for i in range(j))
    return any(blocks[i] and _first_pass(r[i:]) is not None
               for i in range(m + 1))


def _staged_viable(word: StagedWord, p: int) -> bool:
    """Prefix of the omega power built over the p-stage alphabet."""
    n = len(word)
    reach = [False] * (n + 1)
    reach[0] = True
    for j in range(1, n + 1):
        reach[j] = any(reach[i] and _staged_factor(word[i:j], p)
                       for i in range(j))
    return any(reach[i] and _staged_member_prefix(word[i:], p)
               for i in range(n, -1, -1))


def _staged_by_cost(budget: int) -> Iterator[tuple[StagedWord, int]]:
    """All staged words whose coded length fits the budget, with that
    length; letters cost 1, Eraser(j) costs j + 2."""
    stack: list[tuple[StagedWord, int]] = [((), 0)]
    while stack:
        word, cost = stack.pop()
        yield word, cost
        if cost + 1 <= budget:
            stack.append((word + (0,), cost + 1))
            stack.append((word + (1,), cost + 1))
        for j in range(1, budget - cost - 1):
            stack.append((word + (Eraser(j),), cost + j + 2))


def _viable_staged_words(p: int, budget: int
                         ) -> Iterator[tuple[StagedWord, int]]:
    """Staged viable prefixes over indices up to p within the coded-length
    budget; extensions of non-viable words are pruned away."""
    stack: list[tuple[StagedWord, int]] = [((), 0)]
    while stack:
        word, cost = stack.pop()
        if not _staged_viable(word, p):
            continue
        yield word, cost
        if cost + 1 <= budget:
            stack.append((word + (0,), cost + 1))
            stack.append((word + (1,), cost + 1))
        for j in range(1, min(p, budget - cost - 2) + 1):
            stack.append((word + (Eraser(j),), cost + j + 2))


def verify_intersection_identity(p: int, n: int,
                                 report_path: Optional[str] = None) -> bool:
    """Compare, for every length up to n, prefixes of the intersection
    (omega power meets order-p block streams) against encodings of staged
    viable prefixes over indices up to p, mid-code stops included."""
    if p < 1:
        raise ValueError("block order must be >= 1")
    if n < 0:
        raise ValueError("length bound must be >= 0")
    intersection = {w for w in _rp_prefixes(p, n) if _viable(w, p)}
    image = set()
    # budget n+3: a word over the length limit still contributes
    # mid-code prefixes of length up to n.  The worst case is a stop
    # right after the opening letter of a code whose cheapest usable
    # completion is an index-2 eraser (four coded letters, one kept)
    for word, cost in _viable_staged_words(p, n + 3):
        if cost <= n:
            image.add(encode(word))
        last = word[-1] if word else None
        if isinstance(last, Eraser):
            base = encode(word[:-1])
            for i in range(last.index + 1):
                partial = base + "a" + "b" * i
                if len(partial) <= n:
                    image.add(partial)
    ok = intersection == image
    if report_path is not None:
        lines = [
            f"intersection identity check: block order p={p}, "
            f"lengths up to n={n}",
            f"result: {'PASS' if ok else 'FAIL'}",
            f"intersection side: {len(intersection)} words, "
            f"encoded staged side: {len(image)} words",
        ]
        for w in sorted(intersection - image):
            lines.append(f"only in intersection side: {w or '(empty)'}")
        for w in sorted(image - intersection):
            lines.append(f"only in encoded staged side: {w or '(empty)'}")
        Path(report_path).write_text("\n".join(lines) + "\n",
                                     encoding="ascii")
    return ok


# ----------------------------------------------------- factor enumeration

_pad_rows: dict[int, list[str]] = {}
_pads_upto = -1
_chain_sets: dict[int, set[str]] = {0: {""}}
_factor_rows: dict[int, list[str]] = {}
_factor_pos: dict[str, int] = {}
_factor_flat: list[str] = []
_factors_upto = 0


def _build_pads(upto: int) -> None:
    global _pads_upto
    if upto <= _pads_upto:
        return
    rows: dict[int, list[str]] = {length: [] for length in range(upto + 1)}
    for word, cost in _staged_by_cost(upto):
        # a vanishing word pairs every symbol off with another, so odd
        # lengths can be skipped outright
        if len(word) % 2:
            continue
        if _erases_to_nothing(word):
            rows[cost].append(encode(word))
    for row in rows.values():
        row.sort()
    _pad_rows.clear()
    _pad_rows.update(rows)
    _pads_upto = upto


def _extend_factors(upto: int) -> None:
    """Grow the length-ordered factor enumeration to words of length upto.

    Built constructively from pads, unlike is_factor's split search, so
    the two routes can cross-check each other.
    """
    global _factors_upto
    if upto <= _factors_upto:
        return
    _build_pads(upto - 1)
    for length in range(_factors_upto + 1, upto + 1):
        if length - 1 not in _chain_sets:
            chain: set[str] = set()
            j = length - 1
            for i in range(j):
                for pad in _pad_rows.get(j - i - 1, ()):
                    for left in _chain_sets[i]:
                        chain.add(left + pad + "0")
            _chain_sets[j] = chain
        row: set[str] = set()
        for i in range(length):
            for pad in _pad_rows.get(length - i - 1, ()):
                for left in _chain_sets[i]:
                    row.add(left + pad + "1")
        ordered = sorted(row)
        _factor_rows[length] = ordered
        for word in ordered:
            _factor_pos[word] = len(_factor_flat)
            _factor_flat.append(word)
    _factors_upto = upto


def nth_factor(i: int) -> str:
    """The i-th factor in length order, ties broken by 0 < 1 < a < b."""
    if i < 0:
        raise ValueError("index must be >= 0")
    while len(_factor_flat) <= i:
        _extend_factors(_factors_upto + 1)
    return _factor_flat[i]


def factor_index(word: str) -> Optional[int]:
    """Position of a factor in the enumeration, None for non-members."""
    if len(word) == 0:
        return None
    _extend_factors(len(word))
    return _factor_pos.get(word)


def factor_words(max_len: int) -> list[str]:
    """Every factor of length up to max_len, by filtered scan over all
    coded words (deliberately not the constructive enumeration)."""
    found = []
    for length in range(1, max_len + 1):
        for tup in product("01ab", repeat=length):
            w = "".join(tup)
            if is_factor(w):
                found.append(w)
    return found


# ------------------------------------------------------- index pairings

def pairing_consistent(sigma: str, nu: str) -> bool:
    """Can (sigma, nu) be extended to a paired stream where each block
    0^k 1 of sigma is matched in nu by the k-th factor?"""
    for i, ch in enumerate(sigma):
        if ch not in "01":
            raise MalformedInput(
                f"unexpected character {ch!r} at position {i + 1}", i + 1)
    for i, ch in enumerate(nu):
        if ch not in "01ab":
            raise MalformedInput(
                f"unexpected character {ch!r} at position {i + 1}", i + 1)
    counts = []
    zeros = 0
    for ch in sigma:
        if ch == "0":
            zeros += 1
        else:
            counts.append(zeros)
            zeros = 0
    expected = "".join(nth_factor(k) for k in counts)
    common = min(len(nu), len(expected))
    if nu[:common] != expected[:common]:
        return False
    if len(nu) <= len(expected):
        return True
    return _stream_consistent(nu[len(expected):], zeros)


def _stream_consistent(x: str, tmin: int) -> bool:
    """Is x a prefix of a factor stream whose first index is >= tmin?

    A prefix of a single factor always qualifies: any factor prefix
    extends to factors of unbounded length, hence unbounded index.
    """
    if _member_prefix(x):
        return True
    for j in range(1, len(x) + 1):
        head = x[:j]
        if is_factor(head):
            idx = factor_index(head)
            if idx is not None and idx >= tmin and viable_prefix(x[j:]):
                return True
    return False
