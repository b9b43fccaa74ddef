"""Minor search, witness audit, graphicness, and covering cocircuits."""

from __future__ import annotations

from random import Random

import pytest

from gf2minor.catalog import get_named
from gf2minor.errors import CapacityError, InputError
from gf2minor.gf2 import Gf2Matrix
from gf2minor.matroid import (
    BinaryMatroid,
    Graph,
    complete_graph,
    contract,
    cycle_matroid,
    delete,
)
from gf2minor.minors import (
    MinorWitness,
    check_graphic_cocircuits,
    find_minor_witness,
    has_minor,
    is_graphic,
    covering_cocircuit_witness,
    verify_witness,
)

from gen import random_matroid
from oracles import has_minor_brute_force


def g7_host() -> BinaryMatroid:
    return get_named("g7").apply_ops(
        [contract("r1"), contract("r2"), contract("s5")]
    )


# -- find_minor_witness --------------------------------------------------------


def test_g7_contraction_contains_k5():
    w = find_minor_witness(g7_host(), get_named("M(K5)"))
    assert w is not None
    assert len(w.mapping) == 10
    assert verify_witness(g7_host(), get_named("M(K5)"), w)


def test_identity_minor_of_k33():
    m = get_named("M(K33)")
    w = find_minor_witness(m, m)
    assert w is not None
    assert w.contract_set == frozenset() and w.delete_set == frozenset()
    assert verify_witness(m, m, w)


def test_minors_never_gain_elements():
    assert find_minor_witness(get_named("F7"), get_named("M(K5)")) is None


def test_search_capacity_guards():
    big = BinaryMatroid.from_standard_form(
        Gf2Matrix.zeros(0, 21), [], [f"s{j}" for j in range(21)]
    )
    with pytest.raises(CapacityError):
        find_minor_witness(big, get_named("F7"))
    host = get_named("F7")
    wide = BinaryMatroid.from_standard_form(
        Gf2Matrix.zeros(0, 13), [], [f"s{j}" for j in range(13)]
    )
    with pytest.raises(CapacityError):
        find_minor_witness(host, wide)


def test_search_is_deterministic():
    host = g7_host()
    k5 = get_named("M(K5)")
    assert find_minor_witness(host, k5) == find_minor_witness(host, k5)


def test_witness_identical_across_hash_seeds():
    # Witnesses must not depend on set iteration order.
    import os
    import subprocess
    import sys

    script = (
        "from gf2minor.catalog import get_named\n"
        "from gf2minor.matroid import contract\n"
        "from gf2minor.minors import find_minor_witness\n"
        "host = get_named('g7').apply_ops("
        "[contract(e) for e in ('r1', 'r2', 's5')])\n"
        "w = find_minor_witness(host, get_named('M(K5)'))\n"
        "print(sorted(w.contract_set), sorted(w.delete_set), w.mapping)\n"
    )
    outputs = set()
    for seed in ("0", "1", "31337"):
        res = subprocess.run(
            [sys.executable, "-c", script],
            env=dict(os.environ, PYTHONHASHSEED=seed),
            capture_output=True,
            text=True,
        )
        assert res.returncode == 0, res.stderr
        outputs.add(res.stdout)
    assert len(outputs) == 1


@pytest.mark.parametrize("base", ["g7", "g24", "g25"])
def test_monotone_along_case_chain(base):
    # These case hosts contain M(K5), so the uncontracted bases must too.
    assert has_minor(get_named(base), get_named("M(K5)"))


def test_duality_transport_on_r_cases():
    for name in ("r15", "r16"):
        base = get_named(name)
        ops = {"r15": ["r6", "r7", "s8"], "r16": ["r8", "s1", "s3", "s8"]}[name]
        host = base.apply_ops(delete(e) for e in ops)
        direct = has_minor(host, get_named("M*(K33)"))
        dualized = has_minor(host.dual(), get_named("M(K33)"))
        assert direct and dualized


def test_duality_transport_on_all_case_hosts():
    # host has the target iff dual(host) has dual(target), for every case
    # host and both its candidate targets.
    from gf2minor.certify import builtin_cases

    for case in builtin_cases():
        host = case.resolve_base().apply_ops(case.ops)
        for target_name in case.targets:
            target = get_named(target_name)
            assert has_minor(host, target) == has_minor(
                host.dual(), target.dual()
            ), f"{case.name} / {target_name}"


def test_verdicts_match_brute_force_oracle():
    rng = Random(0xBEEF)
    agree = 0
    for _ in range(60):
        host = random_matroid(rng, 8)
        target = random_matroid(rng, 6)
        got = find_minor_witness(host, target)
        expected = has_minor_brute_force(host, target)
        assert (got is not None) == expected
        if got is not None:
            assert verify_witness(host, target, got)
            agree += 1
    assert agree > 5  # the sample must include genuine positives


def test_witnesses_from_search_always_verify():
    rng = Random(0xCAFE)
    for _ in range(40):
        host = random_matroid(rng, 9)
        target = random_matroid(rng, 5)
        w = find_minor_witness(host, target)
        if w is not None:
            assert verify_witness(host, target, w)


# -- verify_witness -------------------------------------------------------------


def test_identity_witness_on_k5():
    m = get_named("M(K5)")
    w = MinorWitness(
        contract_set=frozenset(),
        delete_set=frozenset(),
        mapping=tuple((e, e) for e in sorted(m.ground_set)),
    )
    assert verify_witness(m, m, w)


def test_tampered_witness_is_rejected():
    host = g7_host()
    k5 = get_named("M(K5)")
    w = find_minor_witness(host, k5)
    assert w is not None and verify_witness(host, k5, w)

    pairs = list(w.mapping)
    (t0, h0), (t1, h1) = pairs[0], pairs[1]
    swapped = tuple([(t0, h1), (t1, h0)] + pairs[2:])
    tampered = MinorWitness(w.contract_set, w.delete_set, swapped)
    assert verify_witness(host, k5, tampered) is False


def test_malformed_witnesses_raise_input_error():
    host = g7_host()
    k5 = get_named("M(K5)")
    w = find_minor_witness(host, k5)
    surv = sorted(w.survivors())

    overlapping = MinorWitness(
        w.contract_set | {surv[0]}, w.delete_set, w.mapping
    )
    with pytest.raises(InputError):
        verify_witness(host, k5, overlapping)

    not_injective = MinorWitness(
        w.contract_set,
        w.delete_set,
        tuple((t, surv[0]) for t, _ in w.mapping),
    )
    with pytest.raises(InputError):
        verify_witness(host, k5, not_injective)

    unaccounted = MinorWitness(w.contract_set, frozenset(), w.mapping)
    with pytest.raises(InputError):
        verify_witness(host, k5, unaccounted)

    alien = MinorWitness(
        w.contract_set | {"nope"}, w.delete_set - {sorted(w.delete_set)[0]},
        w.mapping,
    )
    with pytest.raises(InputError):
        verify_witness(host, k5, alien)


# -- graphicness -----------------------------------------------------------------


@pytest.mark.parametrize("graph_n", [4, 5])
def test_complete_graph_cycle_matroids_are_graphic(graph_n):
    assert is_graphic(cycle_matroid(complete_graph(graph_n)))


def test_k33_cycle_matroid_is_graphic():
    assert is_graphic(get_named("M(K33)"))


@pytest.mark.parametrize("name", ["F7", "F7*", "M*(K5)", "M*(K33)"])
def test_excluded_minors_are_not_graphic(name):
    assert not is_graphic(get_named(name))


def test_graphicness_capacity_guard():
    big = BinaryMatroid.from_standard_form(
        Gf2Matrix.zeros(0, 21), [], [f"s{j}" for j in range(21)]
    )
    with pytest.raises(CapacityError):
        is_graphic(big)


def test_all_cocircuits_of_k4_are_graphic():
    report = check_graphic_cocircuits(cycle_matroid(complete_graph(4)))
    assert report.all_graphic
    assert len(report.checks) == 7  # 4 vertex stars + 3 balanced cuts


def test_empty_matroid_has_vacuously_graphic_cocircuits():
    empty = BinaryMatroid.from_standard_form(Gf2Matrix.zeros(0, 0), [], [])
    report = check_graphic_cocircuits(empty)
    assert report.all_graphic and report.checks == ()


@pytest.mark.slow
def test_dual_g18_has_a_nongraphic_cocircuit():
    report = check_graphic_cocircuits(get_named("g18").dual())
    assert not report.all_graphic


# -- covering_cocircuit_witness ---------------------------------------------------------------


def test_covering_cocircuit_trivial_case():
    m = cycle_matroid(complete_graph(4))
    c = sorted(m.cocircuits(), key=lambda s: (len(s), sorted(s)))[0]
    assert covering_cocircuit_witness(m, [], c) == c


def test_covering_cocircuit_after_one_deletion():
    m = cycle_matroid(complete_graph(4))
    ops = [delete("e12")]
    n = m.apply_ops(ops)
    for c in sorted(n.cocircuits(), key=lambda s: (len(s), sorted(s))):
        cm = covering_cocircuit_witness(m, ops, c)
        assert cm is not None
        assert c <= cm
        assert cm & n.ground_set == c


def test_covering_cocircuit_rejects_non_cocircuit():
    m = cycle_matroid(complete_graph(4))
    with pytest.raises(InputError):
        covering_cocircuit_witness(m, [], {"e12"})


def test_covering_cocircuit_random_instances():
    rng = Random(0xFEED)
    done = 0
    while done < 25:
        m = random_matroid(rng, 10, min_elements=3)
        n_ops = rng.randint(1, 3)
        mm = m
        ops = []
        for _ in range(n_ops):
            if mm.size <= 1:
                break
            e = rng.choice(sorted(mm.ground_set))
            op = contract(e) if rng.random() < 0.5 else delete(e)
            ops.append(op)
            mm = mm.apply_ops([op])
        if not ops:
            continue
        n = m.apply_ops(ops)
        cocs = sorted(n.cocircuits(), key=lambda s: (len(s), sorted(s)))
        if not cocs:
            continue
        c = rng.choice(cocs)
        cm = covering_cocircuit_witness(m, ops, c)
        assert cm is not None, f"no covering cocircuit for {sorted(c)}"
        assert c <= cm and cm & n.ground_set == c
        done += 1
