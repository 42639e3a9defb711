"""Acceptance gate: one test and one printed PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` or ``python3 tests/test_acceptance.py``.
Tolerances are fixed here: criterion 1 must finish in under 1 s, criterion 2
in under 60 s; every other comparison is exact.
"""

import io
import math
import sys
import time
from pathlib import Path

import pytest

import oracles
from colocal import (analyze, brute_force_lattice, check_union_property,
                     enumerate_strings, is_colocal_by_conditions,
                     is_colocal_type_structural, is_distributive, is_frame,
                     join_irreducibles, parse_quiver_spec, path_profiles,
                     string_module, verify_main_theorem, verify_partition_M,
                     verify_tau_equivalences)
from colocal.cli import main as cli_main
from colocal.corpus import random_corpus, read_manifest
from colocal.lattice import (are_isomorphic, diamond_m3, downset_lattice,
                             pentagon_n5)
from colocal.quiver import check_C1
from colocal.young import YoungLattice, partitions_in_box

DATA = Path(__file__).parent / "data"
MANIFEST = DATA / "corpus_manifest.txt"
SUPPLEMENT_SEED = 2024
SUPPLEMENT_SIZE = 300
MAX_BRUTE = 100_000
UNION_LIMIT = 1000
FRAME_LIMIT = 128

A2 = "vertices: 1 2\narrow a: 1 -> 2\n"
SINK_PAIR = "vertices: 1 2 3\narrow a: 1 -> 3\narrow b: 2 -> 3\n"
LOOP_SQUARE = "vertices: 1 2\narrow b: 1 -> 2\narrow al: 2 -> 2\nrelation al al\n"


def report(capsys, number, ok, detail):
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")


@pytest.fixture(scope="module")
def corpus():
    return read_manifest(MANIFEST)


@pytest.fixture(scope="module")
def supplement():
    return random_corpus(SUPPLEMENT_SIZE, seed=SUPPLEMENT_SEED)


@pytest.fixture(scope="module")
def colocal_members(corpus, supplement):
    """(algebra, strings) for every colocal algebra of corpus + supplement."""
    out = []
    for qa in list(corpus) + list(supplement):
        if is_colocal_type_structural(qa):
            out.append((qa, enumerate_strings(qa)))
    return out


@pytest.fixture(scope="module")
def brute_lattices(colocal_members):
    return [(qa, brute_force_lattice(qa, max_size=MAX_BRUTE, strings=S)) for qa, S in colocal_members]


def test_criterion_1_young_3_3(capsys, tmp_path):
    golden = {tuple(p.strip() for p in ln.split("->"))
              for ln in (DATA / "young_3_3_hasse.txt").read_text().splitlines()
              if ln and not ln.startswith("#")}
    dot = tmp_path / "y33.dot"
    out = io.StringIO()
    t0 = time.perf_counter()
    code = cli_main(["young", "3", "3", "--dot", str(dot)], out=out, err=io.StringIO())
    elapsed = time.perf_counter() - t0
    lines = dot.read_text().splitlines()
    edges = {tuple(x.strip().strip(";").strip('"') for x in ln.split("->")) for ln in lines if "->" in ln}
    nodes = {n.strip('"') for ln in lines if "rank=same" in ln
             for n in ln.split("rank=same;")[1].rstrip("}").replace(";", " ").split()}
    ok = code == 0 and out.getvalue() == "size 20\n" and len(nodes) == 20 and edges == golden \
        and elapsed < 1.0
    report(capsys, 1, ok, f"Y^{{3,3}}: {len(nodes)} nodes, {len(edges)} edges, "
                          f"golden match {edges == golden}, {elapsed:.3f}s (< 1 s)")
    assert ok


def test_criterion_2_condition_route_equals_structure(capsys):
    t0 = time.perf_counter()
    corpus = read_manifest(MANIFEST)
    disagreements = []
    for qa in corpus:
        if is_colocal_by_conditions(qa) != bool(is_colocal_type_structural(qa)):
            disagreements.append(qa)
        analyze(qa)  # raises on route disagreement
    elapsed = time.perf_counter() - t0
    supp = random_corpus(SUPPLEMENT_SIZE, seed=SUPPLEMENT_SEED)
    disagreements += [qa for qa in supp
                      if is_colocal_by_conditions(qa) != bool(is_colocal_type_structural(qa))]
    ok = len(corpus) >= 2000 and not disagreements and elapsed < 60
    report(capsys, 2, ok, f"{len(corpus)} corpus algebras + {len(supp)} supplement, "
                          f"{len(disagreements)} disagreements, corpus pass {elapsed:.1f}s (< 60 s)")
    assert ok


def test_criterion_3_main_theorem(capsys, colocal_members):
    failures, checked, largest = [], 0, 0
    for qa, S in colocal_members:
        try:
            res = verify_main_theorem(qa, max_size=MAX_BRUTE, strings=S)
        except AssertionError as e:
            failures.append(str(e))
            continue
        checked += 1
        largest = max(largest, res.brute_force_size)
    named = {name: verify_main_theorem(parse_quiver_spec(text)).brute_force_size
             for name, text in (("A2", A2), ("sink pair", SINK_PAIR), ("loop square", LOOP_SQUARE))}
    ok = not failures and named == {"A2": 6, "sink pair": 24, "loop square": 20} and checked > 0
    report(capsys, 3, ok, f"{checked} colocal algebras isomorphic by both routes (largest {largest}), "
                          f"{len(failures)} failures; named sizes {named}")
    assert ok


def test_criterion_4_young_cardinality(capsys):
    bad = []
    for m in range(1, 7):
        for n in range(1, 7):
            brute = len(oracles.partitions_box_bruteforce(m, n))
            ours = len(partitions_in_box(m, n))
            binom = math.comb(m + n, m)
            if not (brute == ours == binom == YoungLattice(m, n).size):
                bad.append((m, n, brute, ours, binom))
    ok = not bad
    report(capsys, 4, ok, f"|Y^{{m,n}}| = C(m+n,m) for 36 boxes, {len(bad)} mismatches")
    assert ok


def test_criterion_5_birkhoff_and_frames(capsys, brute_lattices):
    round_trips, agree, compared, bad = 0, 0, 0, []
    for qa, L in brute_lattices:
        L2 = downset_lattice(join_irreducibles(L))
        iso = are_isomorphic(L, L2)
        if iso is not None and (L.size > 400 or iso.verify()):
            round_trips += 1
        else:
            bad.append(("round trip", qa))
        if L.size <= FRAME_LIMIT:
            compared += 1
            d, f = is_distributive(L)[0], is_frame(L)
            if d == f:
                agree += 1
            else:
                bad.append(("frame", qa))
    hard = [(is_distributive(L)[0], is_frame(L)) for L in (diamond_m3(), pentagon_n5())]
    ok = not bad and round_trips >= 50 and compared >= 50 and hard == [(False, False)] * 2
    report(capsys, 5, ok, f"{round_trips} Birkhoff round trips, distributive = frame on {agree}/{compared} "
                          f"(size <= {FRAME_LIMIT}); M3, N5 rejected by both: {hard == [(False, False)] * 2}")
    assert ok


def test_criterion_6_colocal_string_invariants(capsys, colocal_members):
    non_simple, two_block_bad, grid_bad, m_bad, n_strings = 0, 0, 0, 0, 0
    for qa, S in colocal_members:
        for w in S:
            n_strings += 1
            M = string_module(qa, w)
            if len(M.socle) != 1:
                non_simple += 1
            kinds = {x.inverse for x in w.letters}
            if kinds == {True, False} and len(M.top) != 2:
                two_block_bad += 1
        rep = verify_partition_M(qa, S)
        prof = path_profiles(qa)
        if any(len(rep.classes[m]) != (p.k + 1) * (p.l + 1) for m, p in prof.items()):
            grid_bad += 1
        if not (rep.covers and rep.disjoint and rep.closed):
            m_bad += 1
    ok = non_simple == two_block_bad == grid_bad == m_bad == 0
    report(capsys, 6, ok, f"{n_strings} strings over {len(colocal_members)} algebras: "
                          f"{non_simple} non-simple socles, {two_block_bad} two-block tops != 2, "
                          f"{grid_bad} grid-size failures, {m_bad} (M1)-(M3) failures")
    assert ok


def test_criterion_7_tau_sets(capsys, corpus, supplement):
    applicable = [qa for qa in list(corpus) + list(supplement) if check_C1(qa)]
    prime_bad, double_bad, pairs = [], [], 0
    for qa in applicable:
        rep = verify_tau_equivalences(qa)
        for t in rep.sets:
            pairs += 1
            if t.tau != t.tau_prime:
                prime_bad.append((qa, t))
            if t.simple != t.successor and t.tau != t.tau_double_prime:
                double_bad.append((qa, t))
    ok = not prime_bad and not double_bad
    detail = (f"{len(applicable)} algebras, {pairs} (S, S') pairs: tau != tau' in {len(prime_bad)}, "
              f"tau != tau'' with S != S' in {len(double_bad)}")
    if double_bad:
        qa, t = double_bad[0]
        detail += (f"; e.g. S={t.simple}, S'={t.successor}, tau={sorted(t.tau)}, "
                   f"tau''={sorted(t.tau_double_prime)} for {qa.to_text()!r}")
    report(capsys, 7, ok, detail)
    assert ok


def test_criterion_8_union_property(capsys, brute_lattices):
    checked, bad, skipped = 0, 0, 0
    for qa, L in brute_lattices:
        if L.size > UNION_LIMIT:
            skipped += 1
            continue
        checked += 1
        if not check_union_property(L):
            bad += 1
    ok = bad == 0 and checked > 0
    report(capsys, 8, ok, f"ind(a v b) = ind a u ind b on all pairs of {checked} lattices "
                          f"(<= {UNION_LIMIT} elements), {bad} failures, {skipped} larger skipped")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
