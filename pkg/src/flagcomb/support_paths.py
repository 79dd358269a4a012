"""The distance support S(n), distance paths, Pick areas and realization.

A distance path records, for a pair of full flags, the injection distance
at every dimension: the delta vector (δ_0, ..., δ_n) with δ_0 = δ_n = 0.
Consecutive deltas differ by at most 1 (the trident rule) and each δ_i is
bounded by min(i, n-i).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from . import config
from .errors import (EnumerationLimitExceeded, IndexOutOfRange, InvalidPath,
                     NotFullFlag, RealizationNotFound)
from .flags import Flag, FlagCode, TypeVector, flag_from_matrix, \
    max_distance, pair_distance_profile, pair_profiles


def range_r(i: int, n: int) -> frozenset[int]:
    """R(i, n) = {0, ..., min(i, n-i)}: attainable distances in G_q(i, n)."""
    if not 0 <= i <= n:
        raise IndexOutOfRange(f"i={i} not in [0, {n}]")
    return frozenset(range(min(i, n - i) + 1))


@dataclass(frozen=True)
class DistanceSupport:
    """All columns R(0,n), ..., R(n,n) of the distance support."""

    n: int
    columns: tuple[frozenset[int], ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "columns", tuple(range_r(i, self.n) for i in range(self.n + 1)))

    def positive_points(self) -> int:
        """Number of circle (positive-distance) points; equals D^n."""
        return sum(len(col) - 1 for col in self.columns)


def first_violation(deltas: Sequence[int], n: int) -> Optional[tuple[int, str]]:
    """First index breaking a distance-path invariant, or None if valid."""
    if len(deltas) != n + 1:
        return (0, f"expected {n + 1} deltas, got {len(deltas)}")
    if deltas[0] != 0:
        return (0, "delta_0 must be 0")
    if deltas[n] != 0:
        return (n, "delta_n must be 0")
    for i, d in enumerate(deltas):
        if not 0 <= d <= min(i, n - i):
            return (i, f"delta_{i}={d} outside [0, {min(i, n - i)}]")
    for i in range(n):
        if abs(deltas[i + 1] - deltas[i]) > 1:
            return (i + 1, "consecutive deltas differ by more than 1")
    return None


def validate_path(deltas: Sequence[int], n: int) -> bool:
    return first_violation(deltas, n) is None


@dataclass(frozen=True)
class DistancePath:
    """A valid delta vector; invalid inputs raise InvalidPath."""

    n: int
    deltas: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "deltas", tuple(self.deltas))
        bad = first_violation(self.deltas, self.n)
        if bad is not None:
            raise InvalidPath(bad[1], index=bad[0])

    def reversed(self) -> "DistancePath":
        return DistancePath(self.n, tuple(reversed(self.deltas)))


def path_distance(p: DistancePath) -> int:
    return sum(p.deltas)


def path_codistance(p: DistancePath) -> int:
    return max_distance(p.n) - path_distance(p)


def plateau_count(p: DistancePath) -> tuple[int, int]:
    """(total plateaus, plateaus at positive height)."""
    total = positive = 0
    for a, b in zip(p.deltas, p.deltas[1:]):
        if a == b:
            total += 1
            if a > 0:
                positive += 1
    return total, positive


def pick_area(p: DistancePath) -> int:
    """Area under the path, polygon by polygon, via the shoelace formula.

    The path is cut at every zero-height vertex; each piece, closed along
    the horizontal axis, is a simple polygon whose shoelace area is an
    integer.  Degenerate pieces (consecutive zeros) contribute 0.  The sum
    equals path_distance(p) — that equality is a theorem, not a shortcut
    taken here.
    """
    deltas = p.deltas
    zeros = [i for i, d in enumerate(deltas) if d == 0]
    twice_area = 0
    for a, b in zip(zeros, zeros[1:]):
        if b == a + 1:
            continue
        # vertices (a,0), (a+1, d_{a+1}), ..., (b,0); closing edge lies on
        # the axis and contributes nothing.
        acc = 0
        for i in range(a, b):
            x1, y1 = i, deltas[i]
            x2, y2 = i + 1, deltas[i + 1]
            acc += x1 * y2 - x2 * y1
        twice_area += abs(acc)
    if twice_area % 2:
        raise InvalidPath("non-integer polygon area; path is corrupt")
    return twice_area // 2


def path_from_flag_pair(f: Flag, g: Flag) -> DistancePath:
    """The distance path of a pair of full flags.

    δ_i = d_I(F_i, F'_i) for 1 <= i <= n-1, with δ_0 = δ_n = 0 appended
    (extending by {0} and F_q^n does not change the flag distance).
    """
    if not (f.is_full and g.is_full):
        raise NotFullFlag("distance paths are defined for full flags")
    profile = pair_distance_profile(f, g)
    return DistancePath(f.n, (0, *profile, 0))


def enumerate_paths(n: int, distance_filter: Optional[int] = None, *,
                    max_n: Optional[int] = None) -> list[DistancePath]:
    """All distance paths on S(n) in lexicographic delta order.

    With distance_filter=d, only paths of distance d are returned.
    """
    if max_n is None:
        max_n = config.load_config().max_n_combinatorics
    if n > max_n:
        raise EnumerationLimitExceeded(f"n={n} exceeds the cap {max_n}")
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")

    out: list[DistancePath] = []
    deltas = [0] * (n + 1)

    def extend(i: int, acc: int) -> None:
        if i == n:
            if deltas[n - 1] <= 1 and (distance_filter is None
                                       or acc == distance_filter):
                out.append(DistancePath(n, tuple(deltas)))
            return
        lo = max(0, deltas[i - 1] - 1)
        hi = min(deltas[i - 1] + 1, i, n - i)
        for d in range(lo, hi + 1):
            deltas[i] = d
            extend(i + 1, acc + d)
        deltas[i] = 0

    extend(1, 0)
    return out


def _find_permutation(deltas: Sequence[int], n: int) -> Optional[list[int]]:
    """Lexicographically first permutation w with the intersection profile
    |{j <= i : w(j) <= i}| = i - δ_i for every i."""
    targets = [i - deltas[i] for i in range(n + 1)]
    w: list[int] = []
    used = [False] * (n + 1)

    def feasible(i: int) -> bool:
        # counts of already-placed values <= k must stay reachable for all k
        for k in range(i, n + 1):
            cnt = sum(1 for v in w if v <= k)
            if cnt > targets[k] or targets[k] - cnt > k - i:
                return False
        return True

    def place(i: int) -> bool:
        if i > n:
            return True
        for v in range(1, n + 1):
            if used[v]:
                continue
            w.append(v)
            used[v] = True
            cnt = sum(1 for x in w if x <= i)
            if cnt == targets[i] and feasible(i):
                if place(i + 1):
                    return True
            w.pop()
            used[v] = False
        return False

    return w if place(1) else None


def realize_path(p: DistancePath, q: int) -> tuple[Flag, Flag]:
    """Two full coordinate flags whose distance path is exactly p.

    The first flag is the standard coordinate flag; the second uses basis
    order e_{w(1)}, ..., e_{w(n)} for the first permutation w (in
    lexicographic order) matching the intersection profile.  The result is
    verified by a path round-trip before it is returned.
    """
    n = p.n
    w = _find_permutation(p.deltas, n)
    if w is None:
        raise RealizationNotFound(f"no permutation realizes {p.deltas}")
    identity = [[1 if c == r else 0 for c in range(n)] for r in range(n)]
    permuted = [[1 if c == w[r] - 1 else 0 for c in range(n)] for r in range(n)]
    full = TypeVector.full(n)
    f = flag_from_matrix(q, n, full, identity)
    g = flag_from_matrix(q, n, full, permuted)
    if path_from_flag_pair(f, g) != p:
        raise RealizationNotFound(f"round-trip failed for {p.deltas}")
    return f, g


def paths_of_code(c: FlagCode) -> frozenset[DistancePath]:
    """Γ(C): the distance paths of all unordered pairs of distinct flags."""
    if not c.is_full:
        raise NotFullFlag("Γ(C) is defined for full flag codes")
    n = c.n
    return frozenset(DistancePath(n, (0, *profile, 0))
                     for profile in pair_profiles(c))
