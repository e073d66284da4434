"""Combinatorial states of virtual morsifications.

A state records, for one point of the deformation space of an isolated
real critical point:

  * the arrangement of critical values: real slots ordered by value with a
    count of the negative ones, and conjugate-pair slots ordered among
    them by real part (a pair never sits at zero and its side of zero is
    deliberately not part of the data);
  * the Morse index of every real point, or just its parity in parity
    mode; conjugate pairs keep the two index tags they were born with;
  * the intersection matrix of the vanishing cycles in the slot-ordered
    basis (a pair owns two adjacent basis lines);
  * tracked pairing vectors of the two parity classes, plus the even-class
    vectors of the two one-square stabilizations, which answer the
    sectors of the opposite dimension parity.

States are immutable; surgery operations build new ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterator, Optional, Sequence

from . import petrovskii
from .petrovskii import EVEN, ODD

FULL = "full"
PARITY = "parity"

REAL = "R"
PAIR = "C"


@dataclass(frozen=True)
class Slot:
    kind: str
    # real slot: (u,); pair slot: (u_first, u_second) for the two cycles
    # in basis order.  In parity mode only the parities are stored.
    indices: tuple[int, ...]

    @property
    def mult(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class State:
    mode: str
    n: int
    slots: tuple[Slot, ...]
    neg: int  # number of real slots with negative critical value
    matrix: tuple[tuple[int, ...], ...]
    ev: tuple[int, ...]
    odd: tuple[int, ...]
    meta: tuple = field(default=(), compare=False)

    @cached_property
    def mu(self) -> int:
        return sum(s.mult for s in self.slots)

    @cached_property
    def starts(self) -> tuple[int, ...]:
        out = []
        acc = 0
        for s in self.slots:
            out.append(acc)
            acc += s.mult
        return tuple(out)

    @property
    def n_mod4(self) -> int:
        return self.n % 4

    def real_slots(self) -> list[int]:
        return [i for i, s in enumerate(self.slots) if s.kind == REAL]

    def real_side(self, slot_index: int) -> int:
        """+1 / -1 for a real slot's critical value sign."""
        rank = sum(
            1 for j in range(slot_index) if self.slots[j].kind == REAL
        )
        return -1 if rank < self.neg else 1

    def basis_start(self, slot_index: int) -> int:
        return self.starts[slot_index]

    def all_real(self) -> bool:
        return all(s.kind == REAL for s in self.slots)


class StateError(ValueError):
    pass


def make_state(
    mode: str,
    n: int,
    slots: Sequence[Slot],
    neg: int,
    matrix: Sequence[Sequence[int]],
    ev: Sequence[int],
    odd: Sequence[int],
    meta: tuple = (),
) -> State:
    return State(
        mode=mode,
        n=n,
        slots=tuple(slots),
        neg=neg,
        matrix=tuple(tuple(int(x) for x in row) for row in matrix),
        ev=tuple(int(x) for x in ev),
        odd=tuple(int(x) for x in odd),
        meta=meta,
    )


def validate(state: State) -> list[str]:
    """Structured diagnostics; empty means valid."""
    problems = []
    mu = state.mu
    if len(state.matrix) != mu or any(len(r) != mu for r in state.matrix):
        problems.append("matrix shape does not match basis size")
        return problems
    realcount = len(state.real_slots())
    if not 0 <= state.neg <= realcount:
        problems.append("negative-value count out of range")
    n4 = state.n_mod4
    diag = {1: 2, 3: -2}.get(n4, 0)
    for i in range(mu):
        if state.matrix[i][i] != diag:
            problems.append(f"bad diagonal at {i}: {state.matrix[i][i]}")
            break
    sym = 1 if state.n % 2 == 1 else -1
    for i in range(mu):
        for j in range(i + 1, mu):
            if state.matrix[i][j] != sym * state.matrix[j][i]:
                problems.append(f"matrix symmetry broken at ({i},{j})")
                break
        else:
            continue
        break
    for s in state.slots:
        if s.kind == REAL:
            if len(s.indices) != 1:
                problems.append("real slot with wrong multiplicity")
            u = s.indices[0]
            if state.mode == FULL and not 0 <= u <= state.n:
                problems.append(f"morse index {u} out of range")
            if state.mode == PARITY and u not in (0, 1):
                problems.append("parity slot must carry 0 or 1")
        elif s.kind == PAIR:
            if len(s.indices) != 2:
                problems.append("pair slot must own two cycles")
            a, b = s.indices
            if state.mode == FULL and abs(a - b) != 1:
                problems.append("pair tags must be adjacent indices")
            if state.mode == PARITY and (a + b) % 2 != 1:
                problems.append("pair tags must have opposite parity")
        else:
            problems.append(f"unknown slot kind {s.kind}")
    for name in ("ev", "odd"):
        v = getattr(state, name)
        if len(v) != mu:
            problems.append(f"{name} vector has wrong length")
    return problems


def chi(state: State) -> int:
    """Signed count of negative-value real points by index parity."""
    total = 0
    rank = 0
    for s in state.slots:
        if s.kind != REAL:
            continue
        if rank < state.neg:
            total += 1 if s.indices[0] % 2 == 0 else -1
        rank += 1
    return total


# ---------------------------------------------------------------------------
# canonical form: gauge-fix the 2^mu cycle-sign choices


def canonical_signs(
    matrix: Sequence[Sequence[int]], vecs: Sequence[Sequence[int]]
) -> tuple[int, ...]:
    """Deterministic orbit-canonical gauge for the cycle-sign action.

    Signs propagate along a spanning forest of the nonzero off-diagonal
    entries: each column is oriented so that its first nonzero entry
    against an earlier column comes out positive.  The leftover freedom
    (one global flip per connected component) is fixed by the first
    nonzero entry of the pairing vectors inside the component.  The
    output depends only on the sign-flip orbit of (matrix, vecs), and
    two inputs in the same orbit produce identical gauge-fixed data.
    """
    mu = len(matrix)
    signs = [1] * mu
    comp = list(range(mu))
    for j in range(mu):
        for i in range(j):
            mij = matrix[i][j]
            if mij != 0:
                signs[j] = 1 if signs[i] * mij > 0 else -1
                comp[j] = comp[i]
                break
    for root in range(mu):
        members = [i for i in range(mu) if comp[i] == root]
        if not members:
            continue
        flip = 0
        for v in vecs:
            for i in members:
                x = signs[i] * v[i]
                if x != 0:
                    flip = 1 if x < 0 else -1
                    break
            if flip:
                break
        if flip == 1:
            for i in members:
                signs[i] = -signs[i]
    return tuple(signs)


def apply_signs(state: State, signs: Sequence[int]) -> State:
    mu = state.mu
    m = tuple(
        tuple(signs[i] * signs[j] * state.matrix[i][j] for j in range(mu))
        for i in range(mu)
    )

    def tw(v):
        if v is None:
            return None
        return tuple(signs[i] * v[i] for i in range(mu))

    return replace(state, matrix=m, ev=tw(state.ev), odd=tw(state.odd))


def canonicalize(state: State) -> State:
    signs = canonical_signs(state.matrix, [state.ev, state.odd])
    if all(s == 1 for s in signs):
        return state
    return apply_signs(state, signs)


def encode(state: State, with_pairings: bool = True) -> bytes:
    """Canonical byte encoding used for deduplication and caching.

    Layout (little-endian signed bytes unless noted): flags, n, slot
    descriptors, neg, lower-triangular matrix entries, then the two
    pairing vectors unless ``with_pairings`` is off (the flag byte
    records which identity was used).
    """
    if with_pairings:
        c = canonicalize(state)
    else:
        signs = canonical_signs(state.matrix, [])
        c = state if all(s == 1 for s in signs) else apply_signs(state, signs)
    out = bytearray()
    flags = 0 if c.mode == FULL else 1
    if not with_pairings:
        flags |= 2
    out.append(flags)
    out.append(c.n & 0xFF)
    out.append(len(c.slots))
    for s in c.slots:
        if s.kind == REAL:
            out.append(0x80 | s.indices[0])
        else:
            out.append(0x40 | (s.indices[0] << 3) | s.indices[1])
    out.append(c.neg)
    mu = c.mu
    for i in range(mu):
        for j in range(i + 1):
            out.append(c.matrix[i][j] & 0xFF)
    if with_pairings:
        for v in (c.ev, c.odd):
            for x in v:
                out.append(x & 0xFF)
    return bytes(out)


# ---------------------------------------------------------------------------
# negation (multiplication of the function by -1)


def _flip_index(u: int, n: int, mode: str) -> int:
    if mode == FULL:
        return n - u
    return (n - u) % 2


def negate(state: State) -> State:
    """State of the sign-reversed function.

    Slot order reverses, values change sign, every Morse index u becomes
    n - u, and within a conjugate pair the two cycles trade places (the
    conjugation of values flips their imaginary parts).  Data is
    relabeled along the reversal, which makes the operation an exact
    involution and manifestly preserves the vanishing of any tracked
    vector.
    """
    mu = state.mu
    rev = list(reversed(range(len(state.slots))))
    slots = []
    perm = []  # image basis position -> source basis position
    for i in rev:
        s = state.slots[i]
        start = state.basis_start(i)
        if s.kind == REAL:
            slots.append(Slot(REAL, (_flip_index(s.indices[0], state.n, state.mode),)))
            perm.append(start)
        else:
            a, b = s.indices
            slots.append(
                Slot(
                    PAIR,
                    (
                        _flip_index(b, state.n, state.mode),
                        _flip_index(a, state.n, state.mode),
                    ),
                )
            )
            perm.extend([start + 1, start])
    neg = len(state.real_slots()) - state.neg
    matrix = tuple(
        tuple(state.matrix[perm[i]][perm[j]] for j in range(mu))
        for i in range(mu)
    )

    def pv(v):
        if v is None:
            return None
        return tuple(v[perm[i]] for i in range(mu))

    return make_state(
        state.mode, state.n, slots, neg, matrix,
        ev=pv(state.ev), odd=pv(state.odd), meta=state.meta,
    )


def refresh_pairings(state: State) -> State:
    """Recompute the tracked vectors of an all-real state from scratch."""
    if not state.all_real():
        raise StateError("pairings can only be recomputed for real slots")
    idx = [s.indices[0] for s in state.slots]
    n4 = state.n_mod4
    ev = petrovskii.pairings_all_real(idx, state.neg, state.matrix, n4, EVEN)
    odd = petrovskii.pairings_all_real(idx, state.neg, state.matrix, n4, ODD)
    return replace(state, ev=ev, odd=odd)


# ---------------------------------------------------------------------------
# sector transforms: answer the four (dim parity, inertia parity) cells


def sector_transform(
    state: State, n_parity: int, iplus_parity: int
) -> tuple[State, str]:
    """State and class answering the lacuna question of one table cell.

    ``n_parity`` is the parity of the ambient dimension N (two more than
    the number of variables), ``iplus_parity`` that of the positive
    inertia index of the quadratic part.  Stabilizing by less than three
    squares always reaches the requested cell.
    """
    meta_iplus = state.meta[2] if len(state.meta) >= 3 else 0
    which = EVEN if n_parity % 2 == 0 else ODD
    squares = (n_parity - state.n) % 2
    flip = (iplus_parity - meta_iplus) % 2
    if squares == 0:
        if flip == 0:
            return state, which
        return _add_indefinite_pair(state), which
    return stabilize_one_square(state, negative=flip == 0), which


def _bump(u: int, bump: int, n: int, mode: str) -> int:
    if mode == PARITY:
        return (u + bump) % 2
    return u + bump


def _add_indefinite_pair(state: State) -> State:
    """Stabilize by one positive and one negative square: dimension grows
    by two, every index by one, the matrix changes sign, and the two
    parity classes trade places."""
    slots = tuple(
        Slot(s.kind, tuple(_bump(u, 1, state.n + 2, state.mode) for u in s.indices))
        for s in state.slots
    )
    matrix = tuple(tuple(-x for x in row) for row in state.matrix)
    return make_state(
        state.mode, state.n + 2, slots, state.neg, matrix,
        ev=state.odd, odd=state.ev, meta=state.meta,
    )


def stabilize_one_square(state: State, negative: bool) -> State:
    """Seed of the one-square stabilization of an all-real state.

    A negative square raises every Morse index by one; either square
    turns the intersection data into its order-antisymmetrization.  The
    pairing vectors are recomputed at the new dimension, so the input
    must be an all-real configuration with canonical data.
    """
    if not state.all_real():
        raise StateError("stabilization seeds need an all-real state")
    bump = 1 if negative else 0
    flavor = -1 if negative else 1
    slots = tuple(
        Slot(s.kind, tuple(_bump(u, bump, state.n + 1, state.mode) for u in s.indices))
        for s in state.slots
    )
    matrix = petrovskii.suspension_matrix(state.matrix, flavor)
    out = make_state(
        state.mode, state.n + 1, slots, state.neg, matrix,
        ev=[0] * state.mu, odd=[0] * state.mu, meta=state.meta,
    )
    return refresh_pairings(out)
