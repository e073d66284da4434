"""Exact one-variable model for chain configurations.

A real polynomial of degree mu+1 with positive leading coefficient and mu
real critical points is encoded by the permutation ranking its critical
values (a "snake") together with the number of negative values.  The zero
fiber is a finite set of points in C: real zeros plus conjugate pairs, one
pair parked at each extremum whose value has the "wrong" sign (minimum
above zero, maximum below).

Vanishing cycles are obtained by transporting the fiber along the real
value axis from 0 to each critical value, bypassing intermediate critical
values through the upper half-plane.  Each bypass permutes fiber tokens by
an explicit local rule, so the whole computation is exact combinatorics.

The even class pairs fiber points with the orientation sign of the real
zero set; the other parity class puts +1 on every upper imaginary point
and -1 on every lower one.  Everything is expressed in the basis ordered
by critical value, which is the ordering the engine uses.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator


@dataclass(frozen=True)
class ChainConfig:
    """Snake data: ranks[p] is the value rank of the critical point at
    position p (0 = lowest value), neg the count of negative values."""

    mu: int
    ranks: tuple[int, ...]
    neg: int

    def is_min(self, p: int) -> bool:
        return (self.mu - 1 - p) % 2 == 0

    def sign(self, p: int) -> int:
        return -1 if self.ranks[p] < self.neg else 1

    def position_of_rank(self, r: int) -> int:
        return self.ranks.index(r)


@dataclass(frozen=True)
class ChainState:
    """Value-ordered data of a one-variable configuration.

    indices[i], matrix[i][j], and the pairing vectors are listed by
    increasing critical value; the matrix uses the one-variable
    normalization (diagonal +2).
    """

    mu: int
    indices: tuple[int, ...]
    neg: int
    matrix: tuple[tuple[int, ...], ...]
    even: tuple[int, ...]
    odd: tuple[int, ...]


def snakes(mu: int) -> Iterator[tuple[int, ...]]:
    """All realizable value-rank assignments: every local minimum sits
    below its adjacent maxima."""
    def is_min(p: int) -> bool:
        return (mu - 1 - p) % 2 == 0

    for perm in permutations(range(mu)):
        ok = True
        for p in range(mu - 1):
            lo, hi = (p, p + 1) if is_min(p) else (p + 1, p)
            if not perm[lo] < perm[hi]:
                ok = False
                break
        if ok:
            yield tuple(perm)


def configurations(mu: int) -> Iterator[ChainConfig]:
    for ranks in snakes(mu):
        for neg in range(mu + 1):
            yield ChainConfig(mu, ranks, neg)


class _Fiber:
    """Mutable token arrangement of the zero fiber during transport.

    Real tokens live in intervals -1..mu-1 between consecutive critical
    points; parked pairs live at critical points as (upper, lower) ids.
    """

    def __init__(self, cfg: ChainConfig):
        self.cfg = cfg
        self.real: dict[int, int] = {}
        self.pair: dict[int, tuple[int, int]] = {}
        self._next = 0
        mu = cfg.mu
        sign_left_end = 1 if (mu + 1) % 2 == 0 else -1
        for p in range(-1, mu):
            if p == -1:
                here = cfg.sign(0) != sign_left_end
            elif p == mu - 1:
                here = cfg.sign(mu - 1) == -1
            else:
                here = cfg.sign(p) != cfg.sign(p + 1)
            if here:
                self.real[p] = self._fresh()
        for p in range(mu):
            wrong = cfg.sign(p) > 0 if cfg.is_min(p) else cfg.sign(p) < 0
            if wrong:
                self.pair[p] = (self._fresh(), self._fresh())
        count = len(self.real) + 2 * len(self.pair)
        assert count == mu + 1, (cfg, count)

    def _fresh(self) -> int:
        self._next += 1
        return self._next - 1

    def bypass(self, p: int, upward: bool) -> None:
        cfg = self.cfg
        if upward:
            if cfg.is_min(p):
                u, l = self.pair.pop(p)
                assert p not in self.real and p - 1 not in self.real
                self.real[p] = u
                self.real[p - 1] = l
            else:
                right = self.real.pop(p)
                left = self.real.pop(p - 1)
                assert p not in self.pair
                self.pair[p] = (left, right)
        else:
            if cfg.is_min(p):
                right = self.real.pop(p)
                left = self.real.pop(p - 1)
                assert p not in self.pair
                self.pair[p] = (right, left)
            else:
                u, l = self.pair.pop(p)
                assert p not in self.real and p - 1 not in self.real
                self.real[p - 1] = u
                self.real[p] = l

    def merge_tokens(self, p: int, upward: bool) -> tuple[int, int]:
        """(plus, minus) token ids of the cycle vanishing at point p when
        the transport parameter reaches its value from the zero side."""
        cfg = self.cfg
        if cfg.is_min(p) == upward:
            u, l = self.pair[p]
            return u, l
        return self.real[p], self.real[p - 1]


def _delta(cfg: ChainConfig, target_rank: int) -> dict[int, int]:
    fiber = _Fiber(cfg)
    upward = target_rank >= cfg.neg
    if upward:
        path = [r for r in range(cfg.neg, target_rank)]
    else:
        path = [r for r in range(cfg.neg - 1, target_rank, -1)]
    for r in path:
        fiber.bypass(cfg.position_of_rank(r), upward)
    plus, minus = fiber.merge_tokens(cfg.position_of_rank(target_rank), upward)
    return {plus: 1, minus: -1}


def chain_state(cfg: ChainConfig) -> ChainState:
    """Full value-ordered data for one configuration."""
    mu = cfg.mu
    fiber0 = _Fiber(cfg)
    even: dict[int, int] = {}
    for p, tok in fiber0.real.items():
        right_sign = 1 if p == mu - 1 else cfg.sign(p + 1)
        even[tok] = right_sign
    odd: dict[int, int] = {}
    for u, l in fiber0.pair.values():
        odd[u] = 1
        odd[l] = -1

    deltas = [_delta(cfg, r) for r in range(mu)]

    def pair(a: dict[int, int], b: dict[int, int]) -> int:
        return sum(c * b.get(t, 0) for t, c in a.items())

    matrix = tuple(
        tuple(pair(deltas[i], deltas[j]) for j in range(mu)) for i in range(mu)
    )
    for i in range(mu):
        assert matrix[i][i] == 2, matrix
    indices = tuple(
        0 if cfg.is_min(cfg.position_of_rank(r)) else 1 for r in range(mu)
    )
    return ChainState(
        mu=mu,
        indices=indices,
        neg=cfg.neg,
        matrix=matrix,
        even=tuple(pair(even, d) for d in deltas),
        odd=tuple(pair(odd, d) for d in deltas),
    )
