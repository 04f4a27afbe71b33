"""Partition combinatorics: hooks, contents, rearrangement counts and
symmetric-group characters via the Murnaghan-Nakayama rule."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, NamedTuple

from .ring import LaurentPoly


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing sequence of positive integers (possibly empty)."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers: {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing: {parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def cells(self) -> Iterator[tuple[int, int]]:
        """All cells (i, j), 0-based, row i of length parts[i]."""
        for i, p in enumerate(self.parts):
            for j in range(p):
                yield (i, j)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def without_part(self, value: int) -> "Partition":
        """Remove one occurrence of ``value``."""
        parts = list(self.parts)
        parts.remove(value)
        return Partition(tuple(parts))

    def concat(self, other: "Partition") -> "Partition":
        return Partition(tuple(sorted(self.parts + other.parts, reverse=True)))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(tuple(cols))

    def __str__(self):
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def __repr__(self):
        return f"Partition({self.parts})"


EMPTY = Partition(())


class Hook(NamedTuple):
    """Frobenius coordinates (a|b): one row of a+1 cells, a leg of b cells."""

    arm: int
    leg: int

    @property
    def weight(self) -> int:
        return self.arm + self.leg + 1

    def partition(self) -> Partition:
        return Partition((self.arm + 1,) + (1,) * self.leg)

    def __str__(self):
        return f"({self.arm}|{self.leg})"


def as_hook(lam: Partition) -> Hook | None:
    """The Frobenius coordinates of a hook partition, or None."""
    parts = lam.parts
    if not parts or any(p != 1 for p in parts[1:]):
        return None
    return Hook(parts[0] - 1, len(parts) - 1)


def hooks_of(m: int) -> list[Hook]:
    """The m hooks (a|b) with a + b = m - 1, by descending arm."""
    if m < 1:
        raise ValueError(f"hooks_of needs m >= 1, got {m}")
    return [Hook(m - 1 - b, b) for b in range(m)]


def omega(nu: Partition) -> int:
    """(-1)^b on the hook (a|b), zero on every other partition."""
    hook = as_hook(nu)
    if hook is None:
        return 0
    return -1 if hook.leg % 2 else 1


def k_lambda(lam: Partition) -> int:
    """Number of distinct rearrangements of the parts, l!/(m_1! ... m_r!)."""
    out = factorial(lam.length)
    for mult in lam.multiplicities().values():
        out //= factorial(mult)
    return out


def z_mu(mu: Partition) -> int:
    """Order of the centraliser of a permutation of cycle type mu."""
    return prod(i ** m * factorial(m) for i, m in mu.multiplicities().items())


def content_sum(lam: Partition) -> int:
    """Sum of the cell contents c(x) = j - i."""
    return sum(j - i for i, j in lam.cells())


def content_power_sum(lam: Partition, n: int) -> LaurentPoly:
    """The Laurent polynomial sum_{x in lam} s^{2 N c(x)}."""
    if n < 1:
        raise ValueError(f"content_power_sum needs N >= 1, got {n}")
    terms = Counter(2 * n * (j - i) for i, j in lam.cells())
    return LaurentPoly({(0, b): c for b, c in terms.items()})


@lru_cache(maxsize=None)
def partitions_of(m: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of m, largest part first, in descending lex order."""
    if m < 0:
        return ()
    if max_part is None or max_part > m:
        max_part = m
    if m == 0:
        return (EMPTY,)
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions_of(m - first, first):
            out.append(Partition((first,) + rest.parts))
    return tuple(out)


def rearrangements(lam: Partition) -> Iterator[tuple[int, ...]]:
    """All distinct orderings of the parts (k_lambda of them)."""
    counts = lam.multiplicities()

    def rec(remaining):
        if remaining == 0:
            yield ()
            return
        for value in list(counts):
            if counts[value]:
                counts[value] -= 1
                for tail in rec(remaining - 1):
                    yield (value,) + tail
                counts[value] += 1

    return rec(lam.length)


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama characters
# ---------------------------------------------------------------------------

_char_cache: dict = {}


def _beta_set(parts: tuple[int, ...]) -> list[int]:
    l = len(parts)
    return [parts[i] + (l - 1 - i) for i in range(l)]


def _partition_from_beta(beta: list[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    l = len(beta)
    parts = [beta[i] - (l - 1 - i) for i in range(l)]
    return tuple(p for p in parts if p > 0)


def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    key = (lam, mu)
    cached = _char_cache.get(key)
    if cached is not None:
        return cached
    r, rest = mu[0], mu[1:]
    beta = _beta_set(lam)
    bset = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in bset:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_beta = [target if c == b else c for c in beta]
        sign = -1 if height % 2 else 1
        total += sign * _mn(_partition_from_beta(new_beta), rest)
    _char_cache[key] = total
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """Symmetric-group character chi_lambda at cycle type mu, |lam| = |mu|."""
    if lam.weight != mu.weight:
        raise ValueError(
            f"character needs equal weights, got {lam.weight} and {mu.weight}"
        )
    return _mn(lam.parts, mu.parts)


# ---------------------------------------------------------------------------
# Textual syntax: [3,2,1], [] and Frobenius (a|b)
# ---------------------------------------------------------------------------

_FROBENIUS_RE = re.compile(r"^\(\s*(\d+)\s*\|\s*(\d+)\s*\)$")
_BRACKET_RE = re.compile(r"^\[([\d\s,]*)\]$")


def parse_partition(text: str) -> Partition:
    """Parse ``[3,2,1]``, ``[]`` or Frobenius ``(a|b)`` syntax."""
    text = text.strip()
    m = _FROBENIUS_RE.match(text)
    if m:
        return Hook(int(m.group(1)), int(m.group(2))).partition()
    m = _BRACKET_RE.match(text)
    if m:
        body = m.group(1).strip()
        if not body:
            return EMPTY
        parts = tuple(int(p) for p in body.split(","))
        return Partition(parts)
    raise ValueError(f"not a partition: {text!r}")
