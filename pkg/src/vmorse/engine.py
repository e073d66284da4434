"""Breadth-first closure of a seed under all admissible surgeries.

States are deduplicated by a canonical byte encoding (lexicographic
minimum over the cycle-sign gauge).  The closure is deterministic: the
final state set does not depend on expansion order, and reports are
sorted by encoding.

A persistent cache stores the canonical encodings in an append-only
file with a small header carrying the seed identity, limits and the
closure flag, so queries can run without re-enumeration.
"""

from __future__ import annotations

import hashlib
import struct
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import surgery
from .vmstate import State, canonicalize, encode
from . import vmstate


class EngineError(RuntimeError):
    pass


class LimitExceeded(EngineError):
    pass


@dataclass
class StateSpace:
    seed_name: str
    mode: str
    states: set[bytes]
    closed: bool
    limits: dict
    edge_count: int = 0
    edges: Optional[list[tuple[bytes, str, bytes]]] = None

    @property
    def count(self) -> int:
        return len(self.states)


def decode_state(blob: bytes) -> State:
    """Inverse of vmstate.encode."""
    mode = vmstate.FULL if (blob[0] & 1) == 0 else vmstate.PARITY
    bare = bool(blob[0] & 2)
    n = blob[1]
    nslots = blob[2]
    slots = []
    pos = 3
    for _ in range(nslots):
        b = blob[pos]
        pos += 1
        if b & 0x80:
            slots.append(vmstate.Slot(vmstate.REAL, (b & 0x3F,)))
        else:
            slots.append(
                vmstate.Slot(vmstate.PAIR, ((b >> 3) & 0x7, b & 0x7))
            )
    neg = blob[pos]
    pos += 1
    mu = sum(s.mult for s in slots)

    def sbyte(x: int) -> int:
        return x - 256 if x >= 128 else x

    tri = [[0] * mu for _ in range(mu)]
    for i in range(mu):
        for j in range(i + 1):
            tri[i][j] = sbyte(blob[pos])
            pos += 1
    sym = 1 if n % 2 == 1 else -1
    matrix = [
        [tri[i][j] if i >= j else sym * tri[j][i] for j in range(mu)]
        for i in range(mu)
    ]
    if bare:
        ev = [0] * mu
        odd = [0] * mu
    else:
        ev = [sbyte(blob[pos + k]) for k in range(mu)]
        pos += mu
        odd = [sbyte(blob[pos + k]) for k in range(mu)]
        pos += mu
    return vmstate.make_state(mode, n, slots, neg, matrix, ev, odd)


def enumerate_space(
    seed: State,
    seed_name: str = "",
    max_states: int = 2_000_000,
    record_edges: bool = False,
    with_pairings: bool = True,
    progress: Optional[Callable[[int, int], None]] = None,
) -> StateSpace:
    """Closure of the seed under all admissible moves."""
    start = encode(seed, with_pairings)
    seen: set[bytes] = {start}
    frontier = [start]
    edges = [] if record_edges else None
    edge_count = 0
    closed = True
    while frontier:
        if progress:
            progress(len(seen), len(frontier))
        next_frontier: list[bytes] = []
        for blob in frontier:
            state = decode_state(blob)
            for mv in surgery.admissible_moves(state):
                image = surgery.apply_move(state, mv)
                enc = encode(image, with_pairings)
                edge_count += 1
                if edges is not None:
                    edges.append((blob, f"{mv.kind}:{mv.pos}:{mv.sense}", enc))
                if enc not in seen:
                    if len(seen) >= max_states:
                        closed = False
                        continue
                    seen.add(enc)
                    next_frontier.append(enc)
        frontier = next_frontier
        if not closed:
            break
    return StateSpace(
        seed_name=seed_name,
        mode=seed.mode,
        states=seen,
        closed=closed,
        limits={"max_states": max_states},
        edge_count=edge_count,
        edges=edges,
    )


# ---------------------------------------------------------------------------
# persistent cache

_MAGIC = b"VMSP"
_VERSION = 2


def save_space(space: StateSpace, path: str) -> None:
    blobs = sorted(space.states)
    with open(path, "wb") as fh:
        name = space.seed_name.encode()
        fh.write(_MAGIC)
        fh.write(struct.pack("<HBB", _VERSION, 1 if space.closed else 0,
                             0 if space.mode == vmstate.FULL else 1))
        fh.write(struct.pack("<H", len(name)))
        fh.write(name)
        fh.write(struct.pack("<QQ", len(blobs), space.limits.get("max_states", 0)))
        for b in blobs:
            fh.write(struct.pack("<H", len(b)))
            fh.write(b)


def load_space(path: str) -> StateSpace:
    with open(path, "rb") as fh:
        if fh.read(4) != _MAGIC:
            raise EngineError("not a state cache")
        version, closed, modeflag = struct.unpack("<HBB", fh.read(4))
        if version != _VERSION:
            raise EngineError(f"unsupported cache version {version}")
        (namelen,) = struct.unpack("<H", fh.read(2))
        name = fh.read(namelen).decode()
        count, max_states = struct.unpack("<QQ", fh.read(16))
        states = set()
        for _ in range(count):
            (blen,) = struct.unpack("<H", fh.read(2))
            states.add(fh.read(blen))
    return StateSpace(
        seed_name=name,
        mode=vmstate.FULL if modeflag == 0 else vmstate.PARITY,
        states=states,
        closed=closed == 1,
        limits={"max_states": max_states},
    )


# ---------------------------------------------------------------------------
# queries

from . import petrovskii  # noqa: E402
from .petrovskii import EVEN, ODD  # noqa: E402


@dataclass
class LacunaRecord:
    encoding: bytes
    state: State
    chi: int


def find_lacunas(
    space: StateSpace,
    which: str,
    require_negative: bool = False,
    force: bool = False,
) -> list[LacunaRecord]:
    if not space.closed and not force:
        raise EngineError("state space is not closed; pass force to query anyway")
    out = []
    for blob in sorted(space.states):
        st = decode_state(blob)
        vec = st.ev if which == EVEN else st.odd
        if not petrovskii.is_zero(vec):
            continue
        if require_negative and st.neg == 0:
            continue
        out.append(LacunaRecord(blob, st, vmstate.chi(st)))
    return out


def summarize(space: StateSpace, force: bool = False) -> dict:
    if not space.closed and not force:
        raise EngineError("state space is not closed; pass force to query anyway")
    chi_hist: dict[int, int] = {}
    lacuna_chi = {EVEN: set(), ODD: set()}
    vanish = {EVEN: 0, ODD: 0}
    profiles = {EVEN: set(), ODD: set()}
    for blob in sorted(space.states):
        st = decode_state(blob)
        c = vmstate.chi(st)
        chi_hist[c] = chi_hist.get(c, 0) + 1
        for which in (EVEN, ODD):
            vec = st.ev if which == EVEN else st.odd
            prof = petrovskii.boundary_profile(st.matrix, vec)
            profiles[which].add(prof)
            if petrovskii.is_zero(vec):
                vanish[which] += 1
                lacuna_chi[which].add(c)
    for which in (EVEN, ODD):
        if len(profiles[which]) > 1:
            raise EngineError(
                f"boundary profile not constant for {which}: {profiles[which]}"
            )
    return {
        "count": len(space.states),
        "closed": space.closed,
        "chi_histogram": dict(sorted(chi_hist.items())),
        "lacuna_chi": {k: sorted(v) for k, v in lacuna_chi.items()},
        "vanishing_counts": vanish,
        "boundary_profiles": {k: sorted(v) for k, v in profiles.items()},
    }
