import json
import math

import pytest

import oracles
from colocal import (PreconditionError, analyze, brute_force_lattice,
                     check_union_property, enumerate_strings, is_distributive,
                     is_frame, parse_quiver_spec, structural_lattice,
                     structural_size, tau_by_paths, tau_sets,
                     verify_main_theorem, verify_partition_M,
                     verify_tau_equivalences)
from colocal.lattice import DownsetLattice, FinitePoset, hasse_edges
from colocal.strings import submodule_poset


def Q(text):
    return parse_quiver_spec(text)


LOOP_ONLY = "vertices: 1\narrow al: 1 -> 1\nrelation al al"
LOOP_BOTH = "vertices: 1 2\narrow b: 1 -> 2\narrow al: 2 -> 2\nrelation al al\nrelation b al"


# -- analyze -----------------------------------------------------------------

def test_analyze_a2(a2):
    rep = analyze(a2)
    assert rep.colocal and rep.lattice_size == 6
    assert [(p.k, p.l) for p in rep.profiles.values()] == [(0, 0), (1, 0)]
    assert rep.to_text().splitlines()[0] == "colocal: yes; lattice size 6"


def test_analyze_kronecker(kronecker):
    rep = analyze(kronecker)
    assert not rep.colocal and not rep.C1 and rep.kronecker and rep.C3 is None
    d = json.loads(rep.to_json())
    assert d["C1"]["passed"] is False and d["kronecker"] is True and d["lattice_size"] is None


def test_analyze_loop_square(loop_square):
    rep = analyze(loop_square)
    assert rep.lattice_size == 20
    assert rep.factors == [(1, 1), (3, 2)]


def test_structural_sizes(sink_pair, two_paths):
    assert structural_size(sink_pair) == 24
    # boxes (1,1) (2,1) (1,1) (2,1) (3,3)
    assert structural_size(two_paths) == 2 * 3 * 2 * 3 * 20
    assert [(f.m, f.n) for f in structural_lattice(two_paths).factors][-1] == (3, 3)


# -- lattices by both routes -------------------------------------------------

@pytest.mark.parametrize("fixture, size", [("a2", 6), ("sink_pair", 24), ("loop_square", 20),
                                           ("two_paths", 720), ("two_cycle", None)])
def test_main_theorem_examples(request, fixture, size):
    qa = request.getfixturevalue(fixture)
    res = verify_main_theorem(qa)
    assert res.brute_force_size == res.structural_size
    if size is not None:
        assert res.brute_force_size == size
    assert res.witness


def test_main_theorem_single_loop():
    res = verify_main_theorem(Q(LOOP_ONLY))
    assert res.brute_force_size == 3 and res.factors == [[2, 1]]


def test_brute_force_size_against_subset_count(loop_square, sink_pair, a2):
    # count sub-closed sets of strings by scanning all subsets
    for qa in (a2, sink_pair, loop_square):
        S = enumerate_strings(qa)
        P = submodule_poset(qa, S)
        assert brute_force_lattice(qa).size == oracles.count_downsets_bruteforce(len(S), P.leq.tolist())


def test_brute_force_requires_colocal(kronecker):
    with pytest.raises(PreconditionError):
        brute_force_lattice(kronecker)


def test_brute_force_lattices_are_distributive(loop_square, sink_pair):
    for qa in (loop_square, sink_pair):
        L = brute_force_lattice(qa)
        assert is_distributive(L)[0] and is_frame(L)


def test_loop_square_lattice_shape(loop_square):
    L = brute_force_lattice(loop_square)
    assert L.size == 20
    assert len(hasse_edges(L)) == len(hasse_edges(structural_lattice(loop_square)))


# -- socle classes -----------------------------------------------------------

@pytest.mark.parametrize("fixture, sizes, total", [
    ("a2", [1, 2], 3), ("sink_pair", [1, 1, 4], 6), ("loop_square", [1, 6], 7)])
def test_partition_examples(request, fixture, sizes, total):
    qa = request.getfixturevalue(fixture)
    rep = verify_partition_M(qa)
    assert rep.passed
    assert [len(c) for c in rep.classes.values()] == sizes
    assert sum(sizes) == len(enumerate_strings(qa)) == total


# -- tau sets ----------------------------------------------------------------

def test_tau_loop_square(loop_square):
    t = tau_sets(loop_square, 2)
    assert t.successor == 2 and t.tau == {1}
    assert t.tau <= t.tau_prime <= t.tau_double_prime
    rep = verify_tau_equivalences(loop_square)
    assert rep.passed


def test_tau_killed_composites():
    assert tau_by_paths(Q(LOOP_BOTH), 2) == frozenset()


def test_tau_a2(a2):
    t = tau_sets(a2, 1)
    assert (t.simple, t.successor) == (1, 2)
    assert t.tau == t.tau_prime == t.tau_double_prime == frozenset()


def test_tau_not_applicable(a2, kronecker):
    with pytest.raises(PreconditionError):
        tau_sets(a2, 2)
    with pytest.raises(PreconditionError):
        tau_sets(kronecker, 1)


def test_tau_double_prime_picks_up_simple_successor(two_cycle):
    # S = 1, S' = 2, the only arrow into 1 starts at 2 = S'.  The simple module
    # at 2 has socle S' and top T = S', so T lies in tau'' although no
    # length-3 module exists (the path 2 -> 1 -> 2 vanishes).
    t = tau_sets(two_cycle, 1)
    assert (t.simple, t.successor) == (1, 2)
    assert t.tau == t.tau_prime == frozenset()
    assert t.tau_double_prime == {2}
    rep = verify_tau_equivalences(two_cycle)
    assert rep.violations == ["S=1: tau [] != tau'' [2]"]


def test_tau_report_json(loop_square):
    d = verify_tau_equivalences(loop_square).to_dict()
    assert d["passed"] and d["sets"][0]["S"] == "1"


# -- union property ----------------------------------------------------------

def test_union_property(a2, loop_square):
    assert check_union_property(brute_force_lattice(a2))
    assert check_union_property(brute_force_lattice(loop_square))
    assert check_union_property(brute_force_lattice(loop_square), samples=50, seed=3)


def test_union_property_singleton():
    L = DownsetLattice(FinitePoset([], []))
    assert L.size == 1 and check_union_property(L)


def test_union_property_detects_non_down_set():
    L = brute_force_lattice(Q(LOOP_ONLY))
    L._elements = L._elements + (0b10,)       # {al} without its submodule e1
    L._members = frozenset(L._elements)
    assert not check_union_property(L)


def test_structural_size_formula():
    qa = Q("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3")
    # profiles: 1 -> (0,0), 2 -> (1,0), 3 -> (2,0)
    assert structural_size(qa) == math.comb(2, 1) * math.comb(3, 2) * math.comb(4, 3)
    assert verify_main_theorem(qa).brute_force_size == 24
