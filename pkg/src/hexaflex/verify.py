"""Brute-force oracles and the formula-vs-oracle verification suites.

Everything in this module deliberately ignores the closed forms and the
vectorized kernels: classes are deduplicated by explicit orbit scans over
small exhaustive spaces, labels are rebuilt block by block, validity is
rechecked by breadth-first reachability.  cmd_verify runs these suites and
reports the first counterexample, which keeps the fast paths honest.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Optional

from . import counting, geometry, labeling, sequences

__all__ = [
    "brute_necklace_count",
    "brute_bracelet_count",
    "brute_lyndon_count",
    "brute_self_conjugate_count",
    "naive_classes",
    "reachable_classes",
    "blockwise_strip_labels",
    "naive_is_printable",
    "run_suites",
]


def _rotations(bits: tuple[int, ...]) -> list[tuple[int, ...]]:
    return [bits[r:] + bits[:r] for r in range(len(bits))]


def _bracelet_canon(bits: tuple[int, ...]) -> tuple[int, ...]:
    return min(min(_rotations(bits)), min(_rotations(bits[::-1])))


@lru_cache(maxsize=None)
def _dedupe_tables(n: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """(necklace, bracelet, lyndon) class counts by k, one exhaustive 2^n pass."""
    necklaces: list[set] = [set() for _ in range(n + 1)]
    bracelets: list[set] = [set() for _ in range(n + 1)]
    lyndon: list[set] = [set() for _ in range(n + 1)]
    for bits in product((0, 1), repeat=n):
        k = sum(bits)
        rots = _rotations(bits)
        canon = min(rots)
        necklaces[k].add(canon)
        if len(set(rots)) == n:
            lyndon[k].add(canon)
        bracelets[k].add(min(canon, min(_rotations(bits[::-1]))))
    return (
        tuple(len(s) for s in necklaces),
        tuple(len(s) for s in bracelets),
        tuple(len(s) for s in lyndon),
    )


def brute_necklace_count(n: int, k: int) -> int:
    """Distinct cyclic-shift classes among binary strings with k ones."""
    return _dedupe_tables(n)[0][k]


def brute_bracelet_count(n: int, k: int) -> int:
    """Distinct dihedral classes among binary strings with k ones."""
    return _dedupe_tables(n)[1][k]


def brute_lyndon_count(n: int, k: int) -> int:
    """Aperiodic cyclic-shift classes: all n rotations distinct."""
    return _dedupe_tables(n)[2][k]


def brute_self_conjugate_count(n: int) -> int:
    """Balanced dihedral classes fixed by swapping ones and zeros."""
    if n % 2:
        raise ValueError(f"self-conjugate oracle needs even n, got {n}")
    seen = set()
    for support in combinations(range(n), n // 2):
        bits = tuple(1 if j in set(support) else 0 for j in range(n))
        canon = _bracelet_canon(bits)
        if canon == _bracelet_canon(tuple(1 - b for b in bits)):
            seen.add(canon)
    return len(seen)


def naive_classes(n: int) -> list[tuple[int, ...]]:
    """Canonical forms of every valid sequence, by plain tuple-level scanning."""
    seen = set()
    for signs in product((1, -1), repeat=n):
        if sequences.is_valid(signs):
            seen.add(sequences.canonicalize(signs))
    return sorted(seen, key=lambda u: tuple(0 if a > 0 else 1 for a in u))


def reachable_classes(n: int) -> set[tuple[int, ...]]:
    """Canonical classes reachable from (1,1,1) by extension moves only."""
    level = {sequences.canonicalize((1, 1, 1))}
    for m in range(3, n):
        grown = set()
        for signs in level:
            for i in range(1, m + 1):
                grown.add(sequences.canonicalize(sequences.extend(signs, i)))
        level = grown
    return level


def blockwise_strip_labels(
    pattern: labeling.PatternPath, glue: bool = False
) -> labeling.StripLabels:
    """Strip labels built block by block instead of by global alternation.

    The label sequence is written out three times; each block alternates
    primary sides starting top / bottom / top for odd n and starting top
    every time for even n.  Equivalent to labeling.strip_labels, which the
    labeling suite checks.
    """
    seq = pattern.labels
    n = len(seq)
    starts = ("top", "bottom", "top") if n % 2 else ("top", "top", "top")
    primary_sides = []
    for start in starts:
        for offset in range(n):
            flipped = offset % 2 == 1
            primary_sides.append("bottom" if (start == "top") == flipped else "top")
    if glue:
        # the glue triangle opens a fourth block: starts keep alternating
        # for odd n (top, bottom, top, bottom) and stay top for even n
        primary_sides.append("bottom" if n % 2 else "top")
    top, bottom = [], []
    for j, primary_side in enumerate(primary_sides):
        primary = seq[j % n]
        secondary = primary - 1 if primary > 1 else n
        if primary_side == "top":
            top.append(primary)
            bottom.append(secondary)
        else:
            top.append(secondary)
            bottom.append(primary)
    return labeling.StripLabels(top=tuple(top), bottom=tuple(bottom))


def naive_is_printable(signs: tuple[int, ...]) -> bool:
    """Overlap test over all 4n orbit members, one laid strip each."""
    result = False
    for member in {
        u
        for base in (
            signs,
            signs[::-1],
            tuple(-a for a in signs),
            tuple(-a for a in signs[::-1]),
        )
        for u in (base[r:] + base[:r] for r in range(len(signs)))
    }:
        strip = geometry.lay_strip(member)
        if len(set(strip.cells)) == len(strip.cells):
            result = True
    return result


class SuiteFailure(Exception):
    """First counterexample found by a verification suite."""


def _check(condition: bool, detail: str) -> None:
    if not condition:
        raise SuiteFailure(detail)


def _suite_necklace(max_n: int) -> None:
    for n in range(1, min(max_n, 14) + 1):
        for k in range(n + 1):
            formula = counting.necklace_count(n, k)
            brute = brute_necklace_count(n, k)
            _check(formula == brute, f"N({n},{k}): formula {formula} != brute {brute}")


def _suite_bracelet(max_n: int, paper_bracelet: bool) -> None:
    if paper_bracelet:
        # scan the domain the class-count theorem actually uses (n >= 3,
        # k >= 1); the first even/even pair there is (4, 2)
        for n in range(3, min(max_n, 14) + 1):
            for k in range(1, n + 1):
                brute = brute_bracelet_count(n, k)
                formula = counting._bracelet_even_even_printed(n, k)
                _check(
                    formula == brute,
                    f"B({n},{k}): even/even variant gives {formula}, brute-force {brute}",
                )
        return
    for n in range(1, min(max_n, 14) + 1):
        for k in range(n + 1):
            brute = brute_bracelet_count(n, k)
            formula = counting.bracelet_count(n, k)
            _check(formula == brute, f"B({n},{k}): formula {formula} != brute {brute}")


def _suite_lyndon(max_n: int) -> None:
    for n in range(1, min(max_n, 14) + 1):
        for k in range(n + 1):
            formula = counting.lyndon_count(n, k)
            brute = brute_lyndon_count(n, k)
            _check(formula == brute, f"L({n},{k}): formula {formula} != brute {brute}")


def _suite_self_conjugate(max_n: int) -> None:
    for n in range(2, min(max_n, 16) + 1, 2):
        formula = counting.self_conjugate_count(n)
        brute = brute_self_conjugate_count(n)
        _check(formula == brute, f"F({n}): formula {formula} != brute {brute}")


def _suite_class_count(max_n: int) -> None:
    for n in range(3, min(max_n, 18) + 1):
        formula = counting.hexaflexagon_count(n)
        scanned = len(sequences.enumerate_classes(n, limit=26))
        _check(formula == scanned, f"H({n}): formula {formula} != scan {scanned}")
        if n <= 10:
            naive = len(naive_classes(n))
            _check(naive == scanned, f"H({n}): naive scan {naive} != vector scan {scanned}")


def _suite_printable(max_n: int) -> None:
    for n in range(3, min(max_n, 12) + 1):
        records = sequences.enumerate_classes(n, printability=True)
        for record in records:
            naive = naive_is_printable(record.signs)
            _check(
                naive == record.printable,
                f"Hp: {record.signs} bulk {record.printable} != full-orbit {naive}",
            )


def _suite_lemma(max_n: int) -> None:
    for n in range(3, min(max_n, 12) + 1):
        valid = set(naive_classes(n))
        reachable = reachable_classes(n)
        _check(
            valid == reachable,
            f"Lemma: n={n} validity/reachability differ by {valid ^ reachable}",
        )


def _suite_labeling(max_n: int) -> None:
    tri = labeling.strip_labels(labeling.build_pattern([]))
    _check(tri.top == (1, 1, 3, 3, 2, 2, 1, 1, 3), f"labeling: trihexa top row {tri.top}")
    _check(tri.bottom == (3, 2, 2, 1, 1, 3, 3, 2, 2), f"labeling: trihexa bottom row {tri.bottom}")
    for n in range(3, min(max_n, 12) + 1):
        for record in sequences.enumerate_classes(n):
            pattern = labeling.build_pattern(sequences.reduction_history(record.signs))
            for glue in (False, True):
                fast = labeling.strip_labels(pattern, glue)
                slow = blockwise_strip_labels(pattern, glue)
                _check(
                    fast == slow,
                    f"labeling: global/blockwise disagree for {record.signs} glue={glue}",
                )


_SUITES: list[tuple[str, Callable]] = [
    ("necklace", lambda max_n, pb: _suite_necklace(max_n)),
    ("bracelet", lambda max_n, pb: _suite_bracelet(max_n, pb)),
    ("lyndon", lambda max_n, pb: _suite_lyndon(max_n)),
    ("self-conjugate", lambda max_n, pb: _suite_self_conjugate(max_n)),
    ("class-count", lambda max_n, pb: _suite_class_count(max_n)),
    ("printable", lambda max_n, pb: _suite_printable(max_n)),
    ("lemma", lambda max_n, pb: _suite_lemma(max_n)),
    ("labeling", lambda max_n, pb: _suite_labeling(max_n)),
]


def run_suites(
    max_n: int,
    paper_bracelet: bool = False,
    report: Optional[Callable[[str], None]] = None,
) -> bool:
    """Run every suite up to max_n; report one line per suite; True iff all pass."""
    emit = report or (lambda line: None)
    all_ok = True
    for name, runner in _SUITES:
        try:
            runner(max_n, paper_bracelet)
        except SuiteFailure as failure:
            emit(f"FAIL {name}: {failure}")
            all_ok = False
        else:
            emit(f"PASS {name}")
    return all_ok
