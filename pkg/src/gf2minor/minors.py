"""Minor containment search, witnesses, graphicness, and cocircuit checks.

``find_minor_witness`` decides whether a host matroid has a minor isomorphic
to a small target and, if so, returns an explicit certificate: which elements
to contract, which to delete, and a bijection from the target onto the
survivors.  ``verify_witness`` re-checks such a certificate using nothing but
the host's rank oracle, so the audit does not share code with the search.

Search shape: contract sets are enumerated over independent sets of size
rank(host) - rank(target) only (every minor arises that way with the deletions
coindependent), and candidate survivor sets are filtered through cheap
invariants (rank/corank, loop and coloop counts, circuit-size multiset,
degree profiles) before the full isomorphism test runs.  Candidate circuits
come from restricting the host's cycle space, a few word-XORs per candidate.
All enumeration guards raise CapacityError rather than degrade silently.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from . import catalog
from .errors import CapacityError, InputError
from .iso import element_profiles, match_circuits
from .matroid import BinaryMatroid, MinorOp, contract, minimal_supports

logger = logging.getLogger(__name__)

HOST_LIMIT = 20
TARGET_LIMIT = 12

# Tutte's excluded minors for graphicness of a binary matroid.
GRAPHICNESS_EXCLUDED = ("F7", "F7*", "M*(K5)", "M*(K33)")


@dataclass(frozen=True)
class MinorWitness:
    """Certificate that a host contains a minor isomorphic to a target.

    ``mapping`` pairs each target element with the surviving host element it
    corresponds to; contracting ``contract_set`` and deleting ``delete_set``
    leaves exactly the survivors.
    """

    contract_set: frozenset[str]
    delete_set: frozenset[str]
    mapping: tuple[tuple[str, str], ...]

    def survivors(self) -> frozenset[str]:
        return frozenset(h for _, h in self.mapping)

    def as_dict(self) -> dict:
        return {
            "contract": sorted(self.contract_set),
            "delete": sorted(self.delete_set),
            "map": {t: h for t, h in self.mapping},
        }


@dataclass(frozen=True)
class _TargetData:
    elements: tuple[str, ...]
    circuits: frozenset[frozenset[str]]
    size: int
    rank: int
    corank: int
    n_loops: int
    n_coloops: int
    size_counts: tuple[tuple[int, int], ...]
    profile_counts: tuple
    simple_loopfree: bool


def _target_data(target: BinaryMatroid) -> _TargetData:
    circuits = target.circuits()
    profiles = element_profiles(target.elements(), circuits)
    return _TargetData(
        elements=target.elements(),
        circuits=circuits,
        size=target.size,
        rank=target.full_rank,
        corank=target.corank,
        n_loops=len(target.loops()),
        n_coloops=len(target.coloops()),
        size_counts=tuple(sorted(Counter(len(c) for c in circuits).items())),
        profile_counts=tuple(sorted(Counter(profiles.values()).items())),
        simple_loopfree=all(len(c) >= 3 for c in circuits),
    )


def _survivor_search(
    sub: BinaryMatroid, tgt: _TargetData
) -> tuple[tuple[str, ...], dict[str, str]] | None:
    """Find survivors S of ``sub`` with sub restricted to S isomorphic to tgt.

    Works on the cycle space of ``sub``: the circuits of sub\\D are the
    minimal supports of cycle vectors avoiding D, so each candidate needs
    only a coordinate-elimination pass over the fundamental vectors.
    """
    n = sub.size
    if tgt.size > n:
        return None
    elems = sub.elements()
    r = sub.a.n_rows
    fund = [sub.a.col_bits(j) | (1 << (r + j)) for j in range(sub.a.n_cols)]

    if tgt.simple_loopfree:
        # The target has no loops and no parallel pairs, so a valid survivor
        # set takes at most one element per parallel class of sub and no
        # loops; parallel elements are interchangeable by an automorphism,
        # so class representatives suffice for the verdict.
        seen: dict[int, int] = {}
        for idx in range(n):
            col = (1 << idx) if idx < r else sub.a.col_bits(idx - r)
            if col == 0:
                continue
            seen.setdefault(col, idx)
        pool = sorted(seen.values())
    else:
        pool = list(range(n))

    for combo in combinations(pool, tgt.size):
        smask = 0
        for idx in combo:
            smask |= 1 << idx
        # Basis of the cycle vectors supported inside the candidate.
        vectors = fund
        for d in range(n):
            bit = 1 << d
            if smask & bit:
                continue
            pivot = 0
            nxt = []
            for v in vectors:
                if v & bit:
                    if pivot:
                        nxt.append(v ^ pivot)
                    else:
                        pivot = v
                else:
                    nxt.append(v)
            if pivot:
                vectors = nxt
        if len(vectors) != tgt.corank:
            continue

        circuit_masks = minimal_supports(list(vectors)) if vectors else []
        covered = 0
        loops = 0
        sizes = Counter()
        for cm in circuit_masks:
            covered |= cm
            w = cm.bit_count()
            sizes[w] += 1
            if w == 1:
                loops += 1
        if loops != tgt.n_loops:
            continue
        if tgt.size - covered.bit_count() != tgt.n_coloops:
            continue
        if tuple(sorted(sizes.items())) != tgt.size_counts:
            continue

        labels = tuple(elems[idx] for idx in combo)
        cand_circuits = [
            frozenset(elems[b.bit_length() - 1] for b in _bits(cm))
            for cm in circuit_masks
        ]
        profiles = element_profiles(labels, cand_circuits)
        if tuple(sorted(Counter(profiles.values()).items())) != tgt.profile_counts:
            continue
        mapping = match_circuits(tgt.elements, tgt.circuits, labels, cand_circuits)
        if mapping is not None:
            return labels, mapping
    return None


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def find_minor_witness(
    host: BinaryMatroid, target: BinaryMatroid
) -> MinorWitness | None:
    """Search for a minor of ``host`` isomorphic to ``target``.

    Deterministic: the returned witness is the first hit in canonical
    enumeration order (contract sets by element order, then survivor sets).
    """
    if host.size > HOST_LIMIT:
        raise CapacityError(
            f"minor search hosts limited to {HOST_LIMIT} elements, got {host.size}"
        )
    if target.size > TARGET_LIMIT:
        raise CapacityError(
            f"minor search targets limited to {TARGET_LIMIT} elements, "
            f"got {target.size}"
        )
    tgt = _target_data(target)
    c_size = host.full_rank - tgt.rank
    d_size = host.size - c_size - tgt.size
    if c_size < 0 or d_size < 0 or tgt.corank > host.corank:
        return None

    for combo in combinations(host.elements(), c_size):
        if host.rank(combo) < c_size:
            continue  # contract sets may be assumed independent
        sub = host.apply_ops(contract(e) for e in combo)
        found = _survivor_search(sub, tgt)
        if found is None:
            continue
        labels, mapping = found
        contract_set = frozenset(combo)
        survivors = frozenset(labels)
        return MinorWitness(
            contract_set=contract_set,
            delete_set=host.ground_set - contract_set - survivors,
            mapping=tuple(sorted(mapping.items())),
        )
    return None


def has_minor(host: BinaryMatroid, target: BinaryMatroid) -> bool:
    return find_minor_witness(host, target) is not None


# -- independent witness audit ---------------------------------------------------


def _circuits_from_rank(elements: list[str], rank_fn) -> set[frozenset[str]]:
    """Minimal dependent sets of a rank function, by subset enumeration."""
    circuits: set[frozenset[str]] = set()
    for size in range(1, len(elements) + 1):
        for combo in combinations(elements, size):
            s = frozenset(combo)
            if any(c <= s for c in circuits):
                continue
            if rank_fn(s) < size:
                circuits.add(s)
    return circuits


def verify_witness(
    host: BinaryMatroid, target: BinaryMatroid, w: MinorWitness
) -> bool:
    """Recompute the minor named by ``w`` straight from the rank oracle.

    Structural defects (overlapping sets, non-bijections, labels outside the
    ground sets, elements left unaccounted for) raise InputError; a
    well-formed witness that names a different minor returns False.
    """
    mapping = dict(w.mapping)
    if len(mapping) != len(w.mapping):
        raise InputError("witness mapping repeats a target element")
    survivors = list(mapping.values())
    if len(set(survivors)) != len(survivors):
        raise InputError("witness mapping is not injective")
    if set(mapping) != set(target.ground_set):
        raise InputError("witness mapping must cover the target ground set")
    for lab in w.contract_set | w.delete_set | set(survivors):
        if lab not in host.ground_set:
            raise InputError(f"witness references unknown host element {lab!r}")
    if w.contract_set & w.delete_set:
        raise InputError("witness contract and delete sets overlap")
    surv_set = frozenset(survivors)
    if (w.contract_set | w.delete_set) & surv_set:
        raise InputError("witness survivors overlap contract/delete sets")
    if w.contract_set | w.delete_set | surv_set != host.ground_set:
        raise InputError("witness does not account for every host element")

    base = host.rank(w.contract_set)

    def minor_rank(subset) -> int:
        return host.rank(set(subset) | w.contract_set) - base

    got = _circuits_from_rank(sorted(surv_set), minor_rank)
    expected = {
        frozenset(mapping[e] for e in c) for c in target.circuits()
    }
    return got == expected


# -- graphicness -------------------------------------------------------------------


def is_graphic(m: BinaryMatroid) -> bool:
    """Tutte's criterion: graphic iff no F7, F7*, M*(K5) or M*(K33) minor."""
    if m.size > HOST_LIMIT:
        raise CapacityError(
            f"graphicness test limited to {HOST_LIMIT} elements, got {m.size}"
        )
    return all(
        find_minor_witness(m, catalog.get_named(name)) is None
        for name in GRAPHICNESS_EXCLUDED
    )


@dataclass(frozen=True)
class CocircuitCheck:
    cocircuit: frozenset[str]
    graphic: bool


@dataclass(frozen=True)
class CocircuitReport:
    checks: tuple[CocircuitCheck, ...]
    all_graphic: bool


def _canonical_sets(sets: Iterable[frozenset[str]]) -> list[frozenset[str]]:
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


def check_graphic_cocircuits(m: BinaryMatroid) -> CocircuitReport:
    """For every cocircuit Y, report whether m \\ Y is graphic."""
    checks = []
    for y in _canonical_sets(m.cocircuits()):
        checks.append(CocircuitCheck(y, is_graphic(m.delete_all(y))))
    return CocircuitReport(
        checks=tuple(checks),
        all_graphic=all(c.graphic for c in checks),
    )


# -- covering cocircuits -------------------------------------------------------------


def covering_cocircuit_witness(
    m: BinaryMatroid,
    minor_ops: Iterable[MinorOp],
    c_n: Iterable[str],
) -> frozenset[str] | None:
    """Find a cocircuit of ``m`` covering a cocircuit of a minor.

    Given N = m after ``minor_ops`` and a cocircuit ``c_n`` of N, search the
    cocircuits C of m with c_n contained in C and E(N) & C == c_n such that
    N minus c_n is a minor of m minus C.  Exhaustive failure would contradict
    standard minor/cocircuit theory, so it is logged loudly before returning
    None.
    """
    n_minor = m.apply_ops(minor_ops)
    c_n = frozenset(c_n)
    if c_n not in n_minor.cocircuits():
        raise InputError(f"{sorted(c_n)} is not a cocircuit of the minor")
    reduced = n_minor.delete_all(c_n)
    n_ground = n_minor.ground_set
    for c_m in _canonical_sets(m.cocircuits()):
        if not c_n <= c_m:
            continue
        if c_m & n_ground != c_n:
            continue
        if find_minor_witness(m.delete_all(c_m), reduced) is not None:
            return c_m
    logger.error(
        "no covering cocircuit found for %s; this should be impossible",
        sorted(c_n),
    )
    return None
