"""Quiver presentations kQ/I with monomial relations.

Modules are ordinary representations of the quiver: an arrow ``a: i -> j``
acts ``V_i -> V_j``.  Relations are stored in traversal order, i.e. the
first applied arrow comes first, so ``relation a b`` requires ``e(a) = s(b)``.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

Vertex = Hashable
Path = tuple  # tuple of arrow names, traversal order


class QuiverError(ValueError):
    """Invalid quiver presentation."""


class QuiverSyntaxError(QuiverError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class PreconditionError(ValueError):
    """An operation was called outside its domain."""


def vertex_key(v):
    """Total order on mixed int/str vertex identifiers."""
    return (0, v, "") if isinstance(v, int) else (1, 0, str(v))


@dataclass(frozen=True)
class Arrow:
    name: str
    source: Vertex
    target: Vertex

    def __str__(self):
        return f"{self.name}: {self.source} -> {self.target}"


@dataclass(frozen=True)
class QuiverAlgebra:
    vertices: tuple
    arrows: tuple
    relations: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices), key=vertex_key)))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        object.__setattr__(self, "relations", tuple(tuple(r) for r in self.relations))
        names = [a.name for a in self.arrows]
        dup = [n for n, c in Counter(names).items() if c > 1]
        if dup:
            raise QuiverError(f"duplicate arrow name {dup[0]!r}")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise QuiverError(f"arrow {a.name!r} uses an undeclared vertex")
        by_name = {a.name: a for a in self.arrows}
        seen = set()
        for r in self.relations:
            if len(r) < 2:
                raise QuiverError(f"relation {' '.join(r)!r} has length < 2")
            for x in r:
                if x not in by_name:
                    raise QuiverError(f"unknown arrow {x!r} in relation")
            for x, y in zip(r, r[1:]):
                if by_name[x].target != by_name[y].source:
                    raise QuiverError(f"relation {' '.join(r)!r} is not a path: "
                                      f"e({x}) != s({y})")
            if r in seen:
                raise QuiverError(f"duplicate relation {' '.join(r)!r}")
            seen.add(r)

    @classmethod
    def build(cls, vertices: Iterable, arrows: Iterable[tuple], relations: Iterable[Sequence[str]] = ()):
        """Convenience constructor: ``arrows`` as ``(name, source, target)`` triples."""
        return cls(tuple(vertices), tuple(Arrow(*a) for a in arrows), tuple(tuple(r) for r in relations))

    # -- lookup tables ---------------------------------------------------
    @cached_property
    def arrow(self) -> dict:
        return {a.name: a for a in self.arrows}

    @cached_property
    def out_arrows(self) -> dict:
        d = {v: [] for v in self.vertices}
        for a in self.arrows:
            d[a.source].append(a.name)
        return {v: tuple(sorted(x)) for v, x in d.items()}

    @cached_property
    def in_arrows(self) -> dict:
        d = {v: [] for v in self.vertices}
        for a in self.arrows:
            d[a.target].append(a.name)
        return {v: tuple(sorted(x)) for v, x in d.items()}

    @cached_property
    def relation_set(self) -> frozenset:
        return frozenset(self.relations)

    @cached_property
    def relation_lengths(self) -> tuple:
        return tuple(sorted({len(r) for r in self.relations}))

    @property
    def max_relation_length(self) -> int:
        return max(self.relation_lengths, default=0)

    def source(self, name):
        return self.arrow[name].source

    def target(self, name):
        return self.arrow[name].target

    # -- relation matching ----------------------------------------------
    def has_relation_suffix(self, path: Sequence[str]) -> bool:
        """True if some relation is a suffix of ``path``."""
        rels = self.relation_set
        n = len(path)
        return any(k <= n and tuple(path[n - k:]) in rels for k in self.relation_lengths)

    def has_relation_prefix(self, path: Sequence[str]) -> bool:
        rels = self.relation_set
        return any(k <= len(path) and tuple(path[:k]) in rels for k in self.relation_lengths)

    def contains_relation(self, path: Sequence[str]) -> bool:
        """True if some relation occurs in ``path`` as a contiguous subpath."""
        path = tuple(path)
        return any(self.has_relation_suffix(path[:i]) for i in range(2, len(path) + 1))

    def is_path(self, path: Sequence[str]) -> bool:
        return all(self.target(x) == self.source(y) for x, y in zip(path, path[1:]))

    # -- serialization ---------------------------------------------------
    def to_text(self) -> str:
        lines = ["vertices: " + " ".join(str(v) for v in self.vertices)]
        lines += [f"arrow {a.name}: {a.source} -> {a.target}" for a in self.arrows]
        lines += ["relation " + " ".join(r) for r in self.relations]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [[a.name, a.source, a.target] for a in self.arrows],
            "relations": [list(r) for r in self.relations],
        }

    def __str__(self):
        return self.to_text()


# ---------------------------------------------------------------------------
# parser

_NAME = r"[A-Za-z_][A-Za-z0-9_']*"
_ID = r"[A-Za-z0-9_']+"
_ARROW_RE = re.compile(rf"arrow\s+({_NAME})\s*:\s*({_ID})\s*->\s*({_ID})\s*$")


def _parse_vertex(tok: str):
    return int(tok) if tok.isdigit() else tok


def parse_quiver_spec(text: str) -> QuiverAlgebra:
    """Parse the line-oriented quiver file format.

    ::

        vertices: 1 2
        arrow a: 1 -> 2
        relation a b      # traversal order
    """
    vertices: list = []
    arrows: list[Arrow] = []
    relations: list[tuple] = []
    rel_lines: list[tuple[int, int, tuple]] = []
    seen_vertices = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.lstrip()
        if not stripped:
            continue
        col = len(line) - len(stripped) + 1
        if stripped.startswith("vertices"):
            rest = stripped[len("vertices"):].lstrip()
            if not rest.startswith(":"):
                raise QuiverSyntaxError("expected ':' after 'vertices'", lineno, col + len("vertices"))
            toks = rest[1:].split()
            for t in toks:
                if not re.fullmatch(_ID, t):
                    raise QuiverSyntaxError(f"bad vertex identifier {t!r}", lineno, line.index(t) + 1)
                vertices.append(_parse_vertex(t))
            seen_vertices = True
        elif stripped.startswith("arrow") and (len(stripped) == 5 or stripped[5].isspace()):
            m = _ARROW_RE.match(stripped)
            if not m:
                raise QuiverSyntaxError("expected 'arrow <name>: <src> -> <dst>'", lineno, col)
            arrows.append(Arrow(m.group(1), _parse_vertex(m.group(2)), _parse_vertex(m.group(3))))
        elif stripped.startswith("relation") and (len(stripped) == 8 or stripped[8].isspace()):
            toks = stripped[len("relation"):].split()
            for t in toks:
                if not re.fullmatch(_NAME, t):
                    raise QuiverSyntaxError(f"bad arrow name {t!r}", lineno, line.index(t) + 1)
            rel_lines.append((lineno, col, tuple(toks)))
        else:
            word = stripped.split()[0]
            raise QuiverSyntaxError(f"unknown directive {word!r}", lineno, col)
    if not seen_vertices and arrows:
        raise QuiverSyntaxError("missing 'vertices:' line", 1)

    names = {a.name: a for a in arrows}
    for lineno, col, r in rel_lines:
        if len(r) < 2:
            raise QuiverSyntaxError("relation must have length >= 2", lineno, col)
        for x in r:
            if x not in names:
                raise QuiverSyntaxError(f"unknown arrow {x!r} in relation", lineno, col)
        for x, y in zip(r, r[1:]):
            if names[x].target != names[y].source:
                raise QuiverSyntaxError(
                    f"relation is not composable: {x} ends at {names[x].target}, "
                    f"{y} starts at {names[y].source}", lineno, col)
        relations.append(r)
    try:
        return QuiverAlgebra(tuple(vertices), tuple(arrows), tuple(relations))
    except QuiverError as e:
        raise QuiverSyntaxError(str(e), 1) from e


def load_quiver(path) -> QuiverAlgebra:
    with open(path, encoding="utf-8") as fh:
        return parse_quiver_spec(fh.read())


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class ConditionReport:
    """Verdict of a single check.  ``witnesses`` is empty exactly when it passes."""

    tag: str
    passed: bool
    witnesses: tuple = field(default=())
    detail: str = ""

    def __post_init__(self):
        if self.passed == bool(self.witnesses):
            raise AssertionError(f"{self.tag}: verdict/witness mismatch")

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        return {"tag": self.tag, "passed": self.passed,
                "witnesses": json.loads(json.dumps(self.witnesses, default=str))}

    def __str__(self):
        s = f"{self.tag}: {'pass' if self.passed else 'FAIL'}"
        if self.witnesses:
            s += " " + "; ".join(_fmt_witness(w) for w in self.witnesses)
        return s


def _fmt_witness(w) -> str:
    if isinstance(w, (tuple, list)):
        return "(" + ", ".join(_fmt_witness(x) for x in w) + ")"
    return str(w)


def _report(tag, witnesses, detail=""):
    w = tuple(witnesses)
    return ConditionReport(tag, not w, w, detail)


# ---------------------------------------------------------------------------
# Ext-quiver and conditions


def ext1_matrix(qa: QuiverAlgebra) -> dict:
    """Mapping ``(i, j) -> number of arrows i -> j`` over all vertex pairs.

    Over a field every simple has endomorphism ring k, so both dimensions
    of Ext^1(S_i, S_j) equal this arrow count.
    """
    m = {(i, j): 0 for i in qa.vertices for j in qa.vertices}
    for a in qa.arrows:
        m[a.source, a.target] += 1
    return m


def ext1_array(qa: QuiverAlgebra):
    import numpy as np
    idx = {v: k for k, v in enumerate(qa.vertices)}
    out = np.zeros((len(idx), len(idx)), dtype=int)
    for a in qa.arrows:
        out[idx[a.source], idx[a.target]] += 1
    return out


def pumping_bound(qa: QuiverAlgebra) -> int:
    return max(1, len(qa.arrows)) * max(1, qa.max_relation_length)


def relation_free_cycle(qa: QuiverAlgebra):
    """A relation-free cyclic walk of arrows, or None.

    States are relation-free windows of the last ``max(1, L-1)`` arrows
    (L the longest relation); an infinite relation-free path exists iff the
    window graph has a cycle.
    """
    w = max(1, qa.max_relation_length - 1)

    def successors(state):
        last = state[-1]
        for b in qa.out_arrows[qa.target(last)]:
            path = state + (b,)
            if qa.has_relation_suffix(path):
                continue
            yield path[-w:]

    # relation-free paths of length exactly w; shorter maximal ones cannot
    # lie on an infinite path
    frontier = [(a,) for a in sorted(qa.arrow)]
    for _ in range(w - 1):
        nxt = []
        for p in frontier:
            for b in qa.out_arrows[qa.target(p[-1])]:
                q = p + (b,)
                if not qa.has_relation_suffix(q):
                    nxt.append(q)
        frontier = nxt
    starts = frontier

    WHITE, GREY, BLACK = 0, 1, 2
    color: dict = {}
    for s in starts:
        if color.get(s, WHITE) != WHITE:
            continue
        stack = [(s, successors(s))]
        trail = [s]
        color[s] = GREY
        while stack:
            node, it = stack[-1]
            for nxt in it:
                c = color.get(nxt, WHITE)
                if c == GREY:
                    cyc = trail[trail.index(nxt):]
                    return tuple(st[-1] for st in cyc)
                if c == WHITE:
                    color[nxt] = GREY
                    trail.append(nxt)
                    stack.append((nxt, successors(nxt)))
                    break
            else:
                color[node] = BLACK
                trail.pop()
                stack.pop()
    return None


def check_admissible(qa: QuiverAlgebra) -> ConditionReport:
    """Every sufficiently long path contains a relation.

    Witness on failure: a relation-free cyclic path (arrow names)."""
    cyc = relation_free_cycle(qa)
    return _report("admissible", [cyc] if cyc is not None else [])


def _length2_free(qa: QuiverAlgebra, first: str, then: str) -> bool:
    return (first, then) not in qa.relation_set


def is_string_algebra(qa: QuiverAlgebra) -> ConditionReport:
    """Axioms (1)-(4) of a string algebra (admissibility is checked separately).

    Witnesses are tuples ``(axiom, item, offenders)``.
    """
    wit = []
    for v in qa.vertices:
        if len(qa.out_arrows[v]) > 2:
            wit.append((1, v, qa.out_arrows[v]))
    for v in qa.vertices:
        if len(qa.in_arrows[v]) > 2:
            wit.append((2, v, qa.in_arrows[v]))
    for b in sorted(qa.arrow):
        before = tuple(g for g in qa.in_arrows[qa.source(b)] if _length2_free(qa, g, b))
        if len(before) > 1:
            wit.append((3, b, before))
    for g in sorted(qa.arrow):
        after = tuple(b for b in qa.out_arrows[qa.target(g)] if _length2_free(qa, g, b))
        if len(after) > 1:
            wit.append((4, g, after))
    return _report("string", wit)


def check_C1(qa: QuiverAlgebra) -> ConditionReport:
    """Sum over T of d1(S, T) <= 1: every vertex starts at most one arrow."""
    return _report("C1", [(v, qa.out_arrows[v]) for v in qa.vertices if len(qa.out_arrows[v]) > 1])


def check_C2(qa: QuiverAlgebra) -> ConditionReport:
    """Sum over T of d1(T, S) <= 2: every vertex ends at most two arrows."""
    return _report("C2", [(v, qa.in_arrows[v]) for v in qa.vertices if len(qa.in_arrows[v]) > 2])


def c3_arrows(qa: QuiverAlgebra, v) -> tuple:
    """Arrows ``a`` ending at ``v`` whose composite with the out-arrow of ``v`` survives."""
    outs = qa.out_arrows[v]
    if not outs:
        return ()
    if len(outs) > 1:
        raise PreconditionError(f"C3 needs C1: vertex {v} starts {len(outs)} arrows")
    b = outs[0]
    return tuple(a for a in qa.in_arrows[v] if _length2_free(qa, a, b))


def check_C3(qa: QuiverAlgebra) -> ConditionReport:
    """Only meaningful when C1 holds; raises :class:`PreconditionError` otherwise."""
    if not check_C1(qa):
        raise PreconditionError("C3 is evaluated only when C1 holds")
    wit = []
    for v in qa.vertices:
        arrs = c3_arrows(qa, v)
        if len(arrs) > 1:
            wit.append((v, qa.out_arrows[v][0], arrs))
    return _report("C3", wit)


def has_kronecker_subquiver(qa: QuiverAlgebra) -> bool:
    counts = Counter((a.source, a.target) for a in qa.arrows)
    return any(c >= 2 for c in counts.values())


def is_colocal_type_structural(qa: QuiverAlgebra) -> ConditionReport:
    """Admissible string algebra in which no vertex starts two arrows."""
    wit = []
    adm = check_admissible(qa)
    if not adm:
        wit += [("admissible",) + tuple(adm.witnesses)]
    sa = is_string_algebra(qa)
    if not sa:
        wit += [("string",) + tuple(sa.witnesses)]
    wit += [("out-degree", v, qa.out_arrows[v]) for v in qa.vertices if len(qa.out_arrows[v]) > 1]
    return _report("colocal", wit)


def is_colocal_by_conditions(qa: QuiverAlgebra) -> bool:
    """Admissible and C1, C2, C3 (C3 evaluated only under C1)."""
    return bool(check_admissible(qa)) and bool(check_C1(qa)) and bool(check_C2(qa)) and bool(check_C3(qa))


# ---------------------------------------------------------------------------
# maximal paths


@dataclass(frozen=True)
class VertexPathProfile:
    vertex: Vertex
    k: int
    l: int
    path_k: tuple
    path_l: tuple

    @property
    def box(self) -> tuple:
        return (self.k + 1, self.l + 1)

    def to_dict(self):
        return {"vertex": self.vertex, "k": self.k, "l": self.l,
                "path_k": list(self.path_k), "path_l": list(self.path_l)}


def maximal_path_through(qa: QuiverAlgebra, last: str) -> tuple:
    """The maximal relation-free path (traversal order) ending with arrow ``last``.

    Requires each backward extension to be unique, which holds for
    colocal-type algebras.
    """
    path = (last,)
    bound = pumping_bound(qa) + 1
    while True:
        cands = [x for x in qa.in_arrows[qa.source(path[0])]
                 if not qa.has_relation_prefix((x,) + path)]
        if not cands:
            return path
        if len(cands) > 1:
            raise PreconditionError(
                f"maximal path through {last!r} is not unique: {path} extends by {cands}")
        path = (cands[0],) + path
        if len(path) > bound:
            raise PreconditionError("relation-free path exceeds the admissibility bound")


def vertex_path_profile(qa: QuiverAlgebra, m) -> VertexPathProfile:
    if not is_colocal_type_structural(qa):
        raise PreconditionError("vertex_path_profile requires a colocal-type algebra")
    return _profile(qa, m)


def _profile(qa: QuiverAlgebra, m) -> VertexPathProfile:
    paths = sorted((maximal_path_through(qa, a) for a in qa.in_arrows[m]),
                   key=lambda p: (-len(p), p[-1]))
    if not paths:
        return VertexPathProfile(m, 0, 0, (), ())
    if len(paths) == 1:
        return VertexPathProfile(m, len(paths[0]), 0, paths[0], ())
    pk, pl = paths
    return VertexPathProfile(m, len(pk), len(pl), pk, pl)


def path_profiles(qa: QuiverAlgebra) -> dict:
    if not is_colocal_type_structural(qa):
        raise PreconditionError("path profiles require a colocal-type algebra")
    return {m: _profile(qa, m) for m in qa.vertices}
