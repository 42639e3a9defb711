import itertools
import random
from pathlib import Path

import pytest

from colocal import check_admissible, is_colocal_type_structural
from colocal.corpus import (_canonical_multigraph, generate_corpus,
                            quiver_shapes, random_corpus, read_manifest,
                            relation_sets, write_manifest)


MANIFEST = Path(__file__).parent / "data" / "corpus_manifest.txt"


@pytest.fixture(scope="module")
def manifest():
    return read_manifest(MANIFEST)


def test_manifest_size_and_bounds(manifest):
    assert len(manifest) == 6007
    texts = [q.to_text() for q in manifest]
    assert len(set(texts)) == len(texts)
    for qa in manifest:
        assert len(qa.vertices) <= 3 and len(qa.arrows) <= 4
        assert len(qa.relations) <= 4
        assert all(2 <= len(r) <= 3 for r in qa.relations)
        assert check_admissible(qa)


def test_manifest_relation_sets_are_minimal(manifest):
    def contains(big, small):
        k = len(small)
        return any(big[i:i + k] == small for i in range(len(big) - k + 1))
    for qa in manifest:
        for r, s in itertools.permutations(qa.relations, 2):
            assert not contains(r, s)


def test_manifest_colocal_count(manifest):
    assert sum(bool(is_colocal_type_structural(q)) for q in manifest) == 77


def test_generator_reproduces_manifest_slice(manifest):
    small = generate_corpus(3, 4, 3, max_relations=3)
    assert [q.to_text() for q in small] == [q.to_text() for q in manifest if len(q.relations) <= 3]


def test_shapes_are_pairwise_non_isomorphic():
    shapes = quiver_shapes(3, 4)
    assert len(shapes) == 177
    assert len(set(shapes)) == len(shapes)
    for nv, edges in shapes:
        assert _canonical_multigraph(nv, edges) == edges


def test_random_relabelling_lands_in_shapes():
    shapes = set(quiver_shapes(3, 4))
    rng = random.Random(0)
    for _ in range(200):
        nv = rng.randint(1, 3)
        edges = tuple((rng.randrange(nv), rng.randrange(nv)) for _ in range(rng.randint(0, 4)))
        assert (nv, _canonical_multigraph(nv, edges)) in shapes


def test_relation_sets_dedupe_under_symmetry():
    # two parallel arrows a, b and a loop c at the target: the swap a <-> b
    # identifies {a c} with {b c}
    sets = relation_sets(2, ((0, 1), (0, 1), (1, 1)), max_rel_len=2, max_relations=1)
    assert sets == [(), ((0, 2),), ((2, 2),)]


def test_manifest_round_trip(tmp_path):
    algs = generate_corpus(2, 2, 2, 2)
    path = tmp_path / "m.txt"
    write_manifest(path, algs)
    assert read_manifest(path) == algs


def test_random_corpus_is_seeded_and_admissible():
    a = random_corpus(30, seed=4)
    b = random_corpus(30, seed=4)
    assert [q.to_text() for q in a] == [q.to_text() for q in b]
    assert all(check_admissible(q) for q in a)
    assert sum(bool(is_colocal_type_structural(q)) for q in a) > 10
