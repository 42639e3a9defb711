"""Generated test corpus of small monomial quiver algebras.

Quivers with at most ``max_vertices`` vertices and ``max_arrows`` arrows
(loops and parallel arrows allowed) are enumerated up to isomorphism.  For
each, every minimal set of monomial relations of length 2..``max_rel_len``
with at most ``max_relations`` members is tried; sets are minimal in the
sense that no relation contains another one as a subpath (such sets
generate the same ideal).  Presentations are deduplicated up to quiver
automorphism and filtered by admissibility.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .quiver import QuiverAlgebra, check_admissible

ARROW_NAMES = "abcdefghijklmnopqrstuvwxyz"


def _canonical_multigraph(nv: int, edges: tuple) -> tuple:
    best = None
    for perm in itertools.permutations(range(nv)):
        e = tuple(sorted((perm[s], perm[t]) for s, t in edges))
        if best is None or e < best:
            best = e
    return best


@lru_cache(maxsize=None)
def quiver_shapes(max_vertices: int = 3, max_arrows: int = 4) -> tuple:
    """Arrow multisets ``((s, t), ...)`` on vertices ``0..nv-1``, up to isomorphism."""
    out = []
    for nv in range(1, max_vertices + 1):
        slots = [(s, t) for s in range(nv) for t in range(nv)]
        seen = set()
        for na in range(max_arrows + 1):
            for edges in itertools.combinations_with_replacement(slots, na):
                c = _canonical_multigraph(nv, edges)
                if c not in seen:
                    seen.add(c)
                    out.append((nv, c))
    return tuple(out)


def _paths(edges: tuple, length: int) -> list:
    """Arrow-index paths of the given length, traversal order."""
    paths = [(i,) for i in range(len(edges))]
    for _ in range(length - 1):
        paths = [p + (j,) for p in paths for j in range(len(edges)) if edges[p[-1]][1] == edges[j][0]]
    return paths


def _contains(big: tuple, small: tuple) -> bool:
    k = len(small)
    return any(big[i:i + k] == small for i in range(len(big) - k + 1))


def _automorphisms(nv: int, edges: tuple) -> list:
    """Arrow permutations induced by vertex permutations fixing the multigraph,
    combined with all permutations of parallel arrows."""
    autos = set()
    for perm in itertools.permutations(range(nv)):
        image = [(perm[s], perm[t]) for s, t in edges]
        if sorted(image) != sorted(edges):
            continue
        # match arrows to arrows with the same endpoints, all ways
        groups: dict = {}
        for j, e in enumerate(edges):
            groups.setdefault(e, []).append(j)
        for assign in itertools.product(*[itertools.permutations(groups[e]) for e in sorted(groups)]):
            # build arrow map: the k-th arrow with image endpoint e goes to assign[e][k]
            table = dict(zip(sorted(groups), assign))
            used = {e: 0 for e in groups}
            amap = []
            for i, e in enumerate(image):
                amap.append(table[e][used[e]])
                used[e] += 1
            autos.add(tuple(amap))
    return sorted(autos)


def relation_sets(nv: int, edges: tuple, max_rel_len: int = 3, max_relations: int = 3):
    """Minimal relation sets (as tuples of arrow-index paths) up to automorphism."""
    cands = []
    for L in range(2, max_rel_len + 1):
        cands += _paths(edges, L)
    pos = {p: k for k, p in enumerate(cands)}
    # automorphisms acting on candidate indices
    actions = [tuple(pos[tuple(a[x] for x in p)] for p in cands) for a in _automorphisms(nv, edges)]
    clash = [[_contains(p, q) or _contains(q, p) for q in cands] for p in cands]
    seen = set()
    out = []

    def rec(start, chosen):
        c = min(tuple(sorted(act[k] for k in chosen)) for act in actions)
        if c not in seen:
            seen.add(c)
            out.append(tuple(cands[k] for k in c))
        if len(chosen) == max_relations:
            return
        for k in range(start, len(cands)):
            if any(clash[k][j] for j in chosen):
                continue
            rec(k + 1, chosen + [k])
    rec(0, [])
    return out


def make_algebra(nv: int, edges: tuple, rels) -> QuiverAlgebra:
    names = ARROW_NAMES
    return QuiverAlgebra.build(
        range(1, nv + 1),
        [(names[j], s + 1, t + 1) for j, (s, t) in enumerate(edges)],
        [tuple(names[x] for x in r) for r in rels])


def generate_corpus(max_vertices: int = 3, max_arrows: int = 4, max_rel_len: int = 3,
                    max_relations: int = 3, admissible_only: bool = True) -> list:
    """The exhaustive corpus, in a deterministic order."""
    out = []
    for nv, edges in quiver_shapes(max_vertices, max_arrows):
        for rels in relation_sets(nv, edges, max_rel_len, max_relations):
            qa = make_algebra(nv, edges, rels)
            if admissible_only and not check_admissible(qa):
                continue
            out.append(qa)
    return out


def random_algebra(rng: random.Random, max_vertices: int = 6, max_arrows: int = 8,
                   max_rel_len: int = 4, colocal_bias: bool = True) -> QuiverAlgebra:
    """A random monomial presentation.  With ``colocal_bias`` every vertex
    gets at most one out-arrow, so many samples are of colocal type."""
    nv = rng.randint(1, max_vertices)
    edges = []
    if colocal_bias:
        for s in range(nv):
            if rng.random() < 0.8:
                edges.append((s, rng.randrange(nv)))
    else:
        for _ in range(rng.randint(0, max_arrows)):
            edges.append((rng.randrange(nv), rng.randrange(nv)))
    edges = edges[:max_arrows]
    cands = [p for L in range(2, max_rel_len + 1) for p in _paths(tuple(edges), L)]
    rng.shuffle(cands)
    rels = []
    for r in cands:
        if rng.random() < 0.35 and not any(_contains(r, s) or _contains(s, r) for s in rels):
            rels.append(r)
    qa = make_algebra(nv, tuple(edges), rels)
    # kill remaining relation-free cycles so the result is admissible
    while True:
        from .quiver import relation_free_cycle
        cyc = relation_free_cycle(qa)
        if cyc is None:
            return qa
        idx = {ARROW_NAMES[j]: j for j in range(len(edges))}
        cyc = tuple(idx[a] for a in cyc)
        n = len(cyc)
        start = rng.randrange(n)
        length = min(max_rel_len, max(2, n))
        r = tuple(cyc[(start + i) % n] for i in range(length))
        rels = [s for s in rels if not _contains(s, r)]
        if any(_contains(r, s) for s in rels):
            return qa  # pragma: no cover - cannot happen for a relation-free cycle
        rels.append(r)
        qa = make_algebra(nv, tuple(edges), rels)


def random_corpus(n: int, seed: int = 0, **kw) -> list:
    rng = random.Random(seed)
    return [random_algebra(rng, **kw) for _ in range(n)]


def write_manifest(path, algebras) -> None:
    """One quiver file per algebra, separated by ``# --- <index>`` lines."""
    with open(path, "w", encoding="utf-8") as fh:
        for i, qa in enumerate(algebras):
            fh.write(f"# --- {i}\n")
            fh.write(qa.to_text())


def read_manifest(path) -> list:
    from .quiver import parse_quiver_spec
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    chunks, cur = [], []
    for line in text.splitlines():
        if line.startswith("# --- "):
            if cur:
                chunks.append("\n".join(cur))
            cur = []
        else:
            cur.append(line)
    if cur:
        chunks.append("\n".join(cur))
    return [parse_quiver_spec(c) for c in chunks if c.strip()]
