"""Sign sequences: the combinatorial identity of a hexaflexagon.

A sequence (a_1, ..., a_n) with entries +1/-1 describes one strip shape;
two sequences describe the same hexaflexagon when they differ by cyclic
shift, reversal, or global sign inversion.  This module provides the orbit
operations, a canonical form, the extend/reduce moves that grow and shrink
sequences, validity (reachability from the length-3 base), and exhaustive
enumeration of equivalence classes.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from .counting import sum_set

__all__ = [
    "ClassRecord",
    "DEFAULT_ENUMERATION_LIMIT",
    "cyclic_shift",
    "reverse",
    "invert",
    "canonicalize",
    "extend",
    "reduce",
    "is_valid",
    "reduction_history",
    "enumerate_classes",
]

SignSequence = tuple[int, ...]

# cmd_enumerate-facing guard; the scan is exponential in n.
DEFAULT_ENUMERATION_LIMIT = 24


def _validate(s: Iterable[int]) -> SignSequence:
    t = tuple(s)
    if len(t) < 3:
        raise ValueError(f"sign sequences need length >= 3, got {len(t)}")
    if any(a not in (1, -1) for a in t):
        raise ValueError(f"sign sequences take entries +1/-1, got {t}")
    return t


def cyclic_shift(s: Iterable[int], offset: int) -> SignSequence:
    """Rotate left by offset: (a_1, ..., a_n) -> (a_{1+offset}, ..., a_offset)."""
    t = _validate(s)
    r = offset % len(t)
    return t[r:] + t[:r]


def reverse(s: Iterable[int]) -> SignSequence:
    return _validate(s)[::-1]


def invert(s: Iterable[int]) -> SignSequence:
    return tuple(-a for a in _validate(s))


def _orbit(t: SignSequence) -> Iterable[SignSequence]:
    # shifts x {id, reversal} x {id, inversion}: at most 4n members
    n = len(t)
    for base in (t, t[::-1], tuple(-a for a in t), tuple(-a for a in t[::-1])):
        for r in range(n):
            yield base[r:] + base[:r]


_LEX_KEY = {1: 0, -1: 1}  # +1 sorts before -1


def canonicalize(s: Iterable[int]) -> SignSequence:
    """Lexicographically least orbit member with non-negative sum, +1 first."""
    t = _validate(s)
    return min(
        (u for u in _orbit(t) if sum(u) >= 0),
        key=lambda u: tuple(_LEX_KEY[a] for a in u),
    )


def extend(s: Iterable[int], i: int) -> SignSequence:
    """Replace a_i with the pair (-a_i, -a_i); the sum changes by -3*a_i."""
    t = _validate(s)
    if not 1 <= i <= len(t):
        raise ValueError(f"extend position {i} out of range 1..{len(t)}")
    a = t[i - 1]
    return t[: i - 1] + (-a, -a) + t[i:]


def reduce(s: Iterable[int], i: int) -> SignSequence:
    """Contract the equal cyclically-adjacent pair at (i, i+1) to a single -a_i.

    Inverse of extend at interior positions: reduce(extend(s, i), i) == s.
    For i == n the pair wraps (a_n, a_1) and the merged entry leads the result.
    """
    t = _validate(s)
    n = len(t)
    if not 1 <= i <= n:
        raise ValueError(f"reduce position {i} out of range 1..{n}")
    j = i % n  # 0-based index of the partner entry
    if t[i - 1] != t[j]:
        raise ValueError(f"entries at cyclic positions {i},{i % n + 1} differ")
    if i < n:
        return t[: i - 1] + (-t[i - 1],) + t[i + 1 :]
    return (-t[n - 1],) + t[1 : n - 1]


def is_valid(s: Iterable[int]) -> bool:
    """True iff s has an equal cyclically-adjacent pair and its sum is achievable."""
    t = _validate(s)
    n = len(t)
    if all(t[j] != t[(j + 1) % n] for j in range(n)):
        return False
    return sum(t) in sum_set(n)


def _contract_chain(t: SignSequence) -> list[SignSequence]:
    """Chain t -> ... -> length 3 via leftmost valid contractions."""
    chain = [t]
    cur = t
    while len(cur) > 3:
        n = len(cur)
        for p in range(1, n + 1):
            if cur[p - 1] == cur[p % n]:
                shorter = reduce(cur, p)
                if is_valid(shorter):
                    cur = shorter
                    break
        else:
            raise AssertionError(f"no valid contraction found for {cur}")
        chain.append(cur)
    return chain


def _is_rotation(a: SignSequence, b: SignSequence) -> bool:
    return len(a) == len(b) and any(
        b[r:] + b[:r] == a for r in range(len(b))
    )


def reduction_history(s: Iterable[int]) -> list[int]:
    """Extension positions that replay from (1, 1, 1) to an orbit member of s.

    Contracts s down to the length-3 base (inverting the whole chain if it
    lands on all-minus), then recovers replay positions by matching each
    extension against the next chain entry up to rotation.
    """
    t = _validate(s)
    if not is_valid(t):
        raise ValueError(f"{t} is not a valid sign sequence")
    chain = _contract_chain(t)
    if chain[-1] == (-1, -1, -1):
        chain = [tuple(-a for a in u) for u in chain]
    steps: list[int] = []
    cur = chain[-1]
    for target in chain[-2::-1]:
        for i in range(1, len(cur) + 1):
            grown = extend(cur, i)
            if _is_rotation(grown, target):
                steps.append(i)
                cur = grown
                break
        else:
            raise AssertionError(f"no extension of {cur} matches {target}")
    return steps


@dataclass(frozen=True)
class ClassRecord:
    """One hexaflexagon equivalence class: canonical signs plus metadata."""

    n: int
    signs: SignSequence
    sum: int
    printable: Optional[bool] = None
    labels: Optional[tuple[int, ...]] = None


# ---------------------------------------------------------------------------
# Exhaustive scan.  Sequences are packed into bitmasks (a_1 at the MSB,
# bit 1 = +1) so the whole 2^n space is filtered and canonicalized with
# vectorized integer ops.  Rotating left by r in sequence terms is a left
# bit-rotation; reversal is a bit reversal; inversion is complement.

_POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)
_REV8 = np.array([int(f"{i:08b}"[::-1], 2) for i in range(256)], dtype=np.uint32)
_SCAN_CHUNK = 1 << 22


def _rotl(x: np.ndarray, r: int, n: int, mask: int) -> np.ndarray:
    return ((x << np.uint32(r)) & np.uint32(mask)) | (x >> np.uint32(n - r))


def _bitrev(x: np.ndarray, n: int) -> np.ndarray:
    full = (
        (_REV8[x & 0xFF] << np.uint32(24))
        | (_REV8[(x >> np.uint32(8)) & 0xFF] << np.uint32(16))
        | (_REV8[(x >> np.uint32(16)) & 0xFF] << np.uint32(8))
        | _REV8[(x >> np.uint32(24)) & 0xFF]
    )
    return full >> np.uint32(32 - n)


def _masks_with_ones(n: int, wanted: list[int]) -> dict[int, np.ndarray]:
    parts: dict[int, list[np.ndarray]] = {k: [] for k in wanted}
    for start in range(0, 1 << n, _SCAN_CHUNK):
        stop = min(start + _SCAN_CHUNK, 1 << n)
        x = np.arange(start, stop, dtype=np.uint32)
        ones = _POP16[x & 0xFFFF] + _POP16[x >> np.uint32(16)]
        for k in wanted:
            parts[k].append(x[ones == k])
    return {k: np.concatenate(v) for k, v in parts.items()}


@lru_cache(maxsize=8)
def _canonical_masks(n: int) -> np.ndarray:
    """Canonical bitmasks of every equivalence class, descending (= canonical order)."""
    mask = (1 << n) - 1
    # one representative per class has non-negative sum, so 2k >= n suffices
    ks = [(n + s) // 2 for s in sum_set(n) if s >= 0]
    groups = _masks_with_ones(n, ks)
    collected = []
    for k, x in groups.items():
        if x.size == 0:
            continue
        # drop perfectly alternating strings: no equal adjacent pair
        x = x[(x ^ _rotl(x, 1, n, mask)) != mask]
        if x.size == 0:
            continue
        variants = [x, _bitrev(x, n)]
        if 2 * k == n:  # inversion preserves the zero sum
            variants += [x ^ np.uint32(mask), _bitrev(x, n) ^ np.uint32(mask)]
        best = x.copy()
        for v in variants:
            for r in range(n):
                if v is x and r == 0:
                    continue
                np.maximum(best, _rotl(v, r, n, mask) if r else v, out=best)
        collected.append(np.unique(best))
    out = np.sort(np.concatenate(collected))[::-1].copy()
    out.flags.writeable = False
    return out


_scan_lock = threading.Lock()


def canonical_masks(n: int) -> np.ndarray:
    """Thread-safe cached access to the canonical bitmask array for n."""
    with _scan_lock:
        return _canonical_masks(n)


def signs_from_mask(m: int, n: int) -> SignSequence:
    return tuple(1 if (m >> (n - i)) & 1 else -1 for i in range(1, n + 1))


def enumerate_classes(
    n: int,
    *,
    printability: bool = False,
    labels: bool = False,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> list[ClassRecord]:
    """Every equivalence class at length n, canonically sorted.

    Exhaustive-scan semantics: all 2^n sequences are filtered by validity and
    deduplicated by canonical form.  The cardinality equals
    counting.hexaflexagon_count(n).
    """
    if n < 3:
        raise ValueError(f"enumeration needs n >= 3, got {n}")
    if n > limit:
        raise ValueError(f"n={n} exceeds the enumeration limit {limit}")
    masks = canonical_masks(n)
    flags = None
    if printability:
        from . import geometry

        flags = geometry.bulk_printable(masks, n)
    records = []
    for idx, m in enumerate(masks.tolist()):
        signs = signs_from_mask(m, n)
        records.append(
            ClassRecord(
                n=n,
                signs=signs,
                sum=sum(signs),
                printable=bool(flags[idx]) if flags is not None else None,
                labels=_labels_for(signs) if labels else None,
            )
        )
    return records


def _labels_for(signs: SignSequence) -> tuple[int, ...]:
    from . import labeling

    pattern = labeling.build_pattern(reduction_history(signs))
    return tuple(label for label, _ in pattern.nodes)
