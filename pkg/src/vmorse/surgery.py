"""The four surgery families on virtual morsification states.

Moves act on the slot arrangement and update the intersection matrix and
the tracked pairing vectors:

  * cross_zero: the real value adjacent to zero jumps across it; the
    matrix is unchanged and the pairing vectors jump by a multiple of the
    crossing cycle's matrix row, because the real locus of the zero fiber
    undergoes a surgery along that sphere;
  * swap_real: two adjacent same-side real values trade places; one of
    the two cycles reflects in the other (two senses);
  * merge_pair / split_pair: an adjacent real couple with unit pairing
    and adjacent Morse indices collides and leaves the real axis, or a
    conjugate pair lands back (two landing orders); the zero fiber never
    degenerates, so matrix and pairings carry over verbatim;
  * rotate: a conjugate pair trades places with an adjacent slot; its two
    cycles reflect in the obstacle's cycles.

Everything here acts at a fixed dimension.  At odd dimension the
reflection is an involution, so a rotation is sense-free and two swap
senses differ only in which cycle absorbs the twist.  At even dimension
the monodromy is a transvection and the senses genuinely differ.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import petrovskii
from .petrovskii import EVEN, ODD
from .vmstate import (
    FULL,
    PAIR,
    REAL,
    Slot,
    State,
    StateError,
    make_state,
)

# Transvection sign of the even-dimension monodromy, by n mod 4; pinned
# by the acceptance battery together with the parity tables.
EPS_EVEN = {0: 1, 2: -1}


@dataclass(frozen=True)
class Move:
    """One surgery.

    kind "cross": sense -1 moves the lowest positive value below zero,
    +1 the highest negative one above.  kind "swap"/"rotate": pos is the
    left slot of the adjacent couple, sense the twist direction.  kind
    "merge": pos is the left slot.  kind "split": pos is the pair slot,
    sense +1 restores the stored landing order, -1 lands reversed.
    """

    kind: str
    pos: int = 0
    sense: int = 1


def refl_coeff(state_n: int, pairing: int) -> int:
    """Coefficient k of the monodromy x -> x + k * (cycle), where
    ``pairing`` is the intersection of x with the cycle looped around."""
    n4 = state_n % 4
    if n4 == 1:
        return -pairing
    if n4 == 3:
        return pairing
    return -EPS_EVEN[n4] * pairing


class _Work:
    """Mutable copy of matrix and vectors during a move."""

    def __init__(self, state: State):
        self.mu = state.mu
        self.m = [list(r) for r in state.matrix]
        self.ev = list(state.ev)
        self.odd = list(state.odd)

    def add_cycle(self, t: int, s: int, k: int) -> None:
        """Basis change D_t += k * D_s."""
        if not k:
            return
        m = self.m
        for i in range(self.mu):
            m[i][t] += k * m[i][s]
        for j in range(self.mu):
            m[t][j] += k * m[s][j]
        self.ev[t] += k * self.ev[s]
        self.odd[t] += k * self.odd[s]

    def permute(self, perm: list[int]) -> None:
        m = self.m
        self.m = [
            [m[perm[i]][perm[j]] for j in range(self.mu)]
            for i in range(self.mu)
        ]
        self.ev = [self.ev[p] for p in perm]
        self.odd = [self.odd[p] for p in perm]


def _rebuild(state: State, slots, neg: int, work: _Work) -> State:
    return make_state(
        state.mode, state.n, slots, neg,
        [tuple(r) for r in work.m], work.ev, work.odd,
        meta=state.meta,
    )


def admissible_moves(state: State) -> list[Move]:
    moves: list[Move] = []
    nreal = len(state.real_slots())
    if state.neg > 0:
        moves.append(Move("cross", 0, +1))
    if state.neg < nreal:
        moves.append(Move("cross", 0, -1))
    senses = (1, -1)
    for i in range(len(state.slots) - 1):
        a, b = state.slots[i], state.slots[i + 1]
        if a.kind == REAL and b.kind == REAL:
            if state.real_side(i) == state.real_side(i + 1):
                for s in senses:
                    moves.append(Move("swap", i, s))
                if _mergeable(state, i):
                    moves.append(Move("merge", i))
        else:
            both_pairs = a.kind == PAIR and b.kind == PAIR
            if state.n % 2 == 1 and not both_pairs:
                # a single reflection is involutive: one sense suffices
                moves.append(Move("rotate", i, +1))
            else:
                for s in senses:
                    moves.append(Move("rotate", i, s))
    for i, s in enumerate(state.slots):
        if s.kind == PAIR:
            moves.append(Move("split", i, +1))
            moves.append(Move("split", i, -1))
    return moves


def _mergeable(state: State, i: int) -> bool:
    a, b = state.slots[i], state.slots[i + 1]
    ba, bb = state.basis_start(i), state.basis_start(i + 1)
    if abs(state.matrix[ba][bb]) != 1:
        return False
    ua, ub = a.indices[0], b.indices[0]
    if state.mode == FULL:
        return abs(ua - ub) == 1
    return (ua + ub) % 2 == 1


def apply_move(state: State, move: Move) -> State:
    if move.kind == "cross":
        return cross_zero(state, move.sense)
    if move.kind == "swap":
        return swap_real(state, move.pos, move.sense)
    if move.kind == "merge":
        return merge_pair(state, move.pos)
    if move.kind == "split":
        return split_pair(state, move.pos, restore=move.sense > 0)
    if move.kind == "rotate":
        return rotate(state, move.pos, move.sense)
    raise StateError(f"unknown move kind {move.kind!r}")


def invert_move(move: Move) -> Move:
    if move.kind == "cross":
        return Move("cross", 0, -move.sense)
    if move.kind == "swap":
        return Move("swap", move.pos, -move.sense)
    if move.kind == "merge":
        return Move("split", move.pos, +1)
    if move.kind == "split":
        return Move("merge", move.pos)
    if move.kind == "rotate":
        return Move("rotate", move.pos, -move.sense)
    raise StateError(f"unknown move kind {move.kind!r}")


# ---------------------------------------------------------------------------
# cross zero

# Orientation flip of the reborn sphere, keyed by (class, n mod 4) then
# indexed by the crossing index parity.  Base residues come from the
# one-variable model; even residues are battery-pinned.
CROSS_PHI = {
    (EVEN, 1): (0, 1),
    (ODD, 1): (0, 1),
    (EVEN, 3): (0, 1),
    (ODD, 3): (0, 1),
    (EVEN, 2): (1, 0),
    (ODD, 2): (1, 0),
    (EVEN, 0): (1, 0),
    (ODD, 0): (1, 0),
}


def _crossing_real_slot(state: State, sense: int) -> int:
    want = state.neg if sense < 0 else state.neg - 1
    rank = 0
    for i, s in enumerate(state.slots):
        if s.kind == REAL:
            if rank == want:
                return i
            rank += 1
    raise StateError("no real value available to cross")


def _cross_vector(
    vec: list[int], which: str, n: int, u: int, j: int, mu: int,
    row: list[int], down: bool,
) -> None:
    n4 = n % 4
    phi = CROSS_PHI[(which, n4)][u % 2]
    sgn = -1 if phi else 1
    b_pos = petrovskii.weight(which, n4, u, +1)
    b_neg = petrovskii.weight(which, n4, u, -1)
    a_pos = petrovskii.anchor(which, n4, u, +1)
    a_neg = petrovskii.anchor(which, n4, u, -1)
    if down:
        for i in range(j + 1, mu):
            vec[i] -= b_pos * row[i]
        for i in range(j):
            vec[i] += sgn * b_neg * row[i]
        vec[j] = sgn * (vec[j] - a_pos + a_neg)
    else:
        for i in range(j):
            vec[i] -= sgn * b_neg * row[i]
        for i in range(j + 1, mu):
            vec[i] += b_pos * row[i]
        vec[j] = sgn * vec[j] - a_neg + a_pos


def cross_zero(state: State, sense: int) -> State:
    down = sense < 0
    slot = _crossing_real_slot(state, sense)
    u = state.slots[slot].indices[0]
    j = state.basis_start(slot)
    work = _Work(state)
    row = [state.matrix[j][i] for i in range(state.mu)]
    _cross_vector(work.ev, EVEN, state.n, u, j, state.mu, row, down)
    _cross_vector(work.odd, ODD, state.n, u, j, state.mu, row, down)
    return _rebuild(
        state, state.slots, state.neg + (1 if down else -1), work
    )


# ---------------------------------------------------------------------------
# swap of adjacent same-side real values


def swap_real(state: State, pos: int, sense: int) -> State:
    a, b = state.slots[pos], state.slots[pos + 1]
    if a.kind != REAL or b.kind != REAL:
        raise StateError("swap needs two real slots")
    if state.real_side(pos) != state.real_side(pos + 1):
        raise StateError("swap across zero is not a single surgery")
    ja, jb = state.basis_start(pos), state.basis_start(pos + 1)
    work = _Work(state)
    if sense > 0:
        work.add_cycle(jb, ja, refl_coeff(state.n, work.m[ja][jb]))
    else:
        work.add_cycle(ja, jb, refl_coeff(state.n, work.m[jb][ja]))
    perm = list(range(state.mu))
    perm[ja], perm[jb] = perm[jb], perm[ja]
    work.permute(perm)
    slots = list(state.slots)
    slots[pos], slots[pos + 1] = slots[pos + 1], slots[pos]
    return _rebuild(state, tuple(slots), state.neg, work)


# ---------------------------------------------------------------------------
# merge to a conjugate pair / split back to real values


def merge_pair(state: State, pos: int) -> State:
    if not _mergeable(state, pos):
        raise StateError("slots cannot merge")
    a, b = state.slots[pos], state.slots[pos + 1]
    negdrop = 2 if state.real_side(pos) < 0 else 0
    slots = list(state.slots)
    slots[pos : pos + 2] = [Slot(PAIR, (a.indices[0], b.indices[0]))]
    return _rebuild(state, tuple(slots), state.neg - negdrop, _Work(state))


def split_pair(state: State, pos: int, restore: bool = True) -> State:
    s = state.slots[pos]
    if s.kind != PAIR:
        raise StateError("split needs a pair slot")
    real_before = sum(1 for t in state.slots[:pos] if t.kind == REAL)
    negadd = 2 if real_before < state.neg else 0
    ua, ub = s.indices
    slots = list(state.slots)
    slots[pos : pos + 1] = [Slot(REAL, (ua,)), Slot(REAL, (ub,))]
    mid = _rebuild(state, tuple(slots), state.neg + negadd, _Work(state))
    if restore:
        return mid
    return swap_real(mid, pos, +1)


# ---------------------------------------------------------------------------
# rotations involving a conjugate pair


def rotate(state: State, pos: int, sense: int) -> State:
    a, b = state.slots[pos], state.slots[pos + 1]
    if a.kind != PAIR and b.kind != PAIR:
        raise StateError("rotation needs a conjugate pair")
    work = _Work(state)
    ja, jb = state.basis_start(pos), state.basis_start(pos + 1)
    if b.kind == REAL:
        _reflect_block(work, state.n, ja, a.mult, (jb,), sense)
    elif a.kind == REAL:
        _reflect_block(work, state.n, jb, b.mult, (ja,), sense)
    else:
        # moving pair reflects in both cycles of the other
        _reflect_block(work, state.n, ja, a.mult, (jb, jb + 1), sense)
    perm = list(range(state.mu))
    width_a, width_b = a.mult, b.mult
    start = state.basis_start(pos)
    perm[start : start + width_a + width_b] = list(
        range(start + width_a, start + width_a + width_b)
    ) + list(range(start, start + width_a))
    work.permute(perm)
    slots = list(state.slots)
    slots[pos], slots[pos + 1] = slots[pos + 1], slots[pos]
    return _rebuild(state, tuple(slots), state.neg, work)


def _reflect_block(
    work: _Work, n: int, block: int, width: int, obstacles: tuple[int, ...],
    sense: int,
) -> None:
    """Cycles of the moving block loop around the obstacle cycles.

    Sense -1 is the inverse twist: obstacles in reversed order, and at
    even dimension the transvection coefficients change sign (at odd
    dimension each single reflection is its own inverse).
    """
    todo = obstacles if sense > 0 else tuple(reversed(obstacles))
    flip = -1 if (n % 2 == 0 and sense < 0) else 1
    for w in todo:
        for off in range(width):
            t = block + off
            work.add_cycle(t, w, flip * refl_coeff(n, work.m[w][t]))
