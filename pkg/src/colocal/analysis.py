"""Cross-checks of the colocal-type characterization and the lattice of
subobject-closed subcategories.

Two routes are compared throughout:

* brute force -- enumerate string modules, order them by the submodule
  criterion, take down-sets;
* structural -- read off the maximal paths ending at each vertex and
  multiply the box-bounded Young lattices ``Y^{k_m+1, l_m+1}``.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import asdict, dataclass, field

from .lattice import (DEFAULT_MAX_SIZE, DownsetLattice, ProductLattice,
                      are_isomorphic)
from .quiver import (ConditionReport, PreconditionError, QuiverAlgebra,
                     check_admissible, check_C1, check_C2, check_C3,
                     has_kronecker_subquiver, is_colocal_type_structural,
                     is_string_algebra, path_profiles, vertex_key)
from .strings import (enumerate_strings, is_submodule, socle_class,
                      string_module, submodule_poset)
from .young import YoungLattice


class RouteDisagreement(AssertionError):
    """The condition route and the structural route gave different verdicts."""


class VerificationError(AssertionError):
    """A cross-check that must hold failed; signals an implementation bug."""


def _vstr(v):
    return str(v)


@dataclass
class AnalysisReport:
    admissible: ConditionReport
    string_axioms: ConditionReport
    C1: ConditionReport
    C2: ConditionReport
    C3: ConditionReport | None
    kronecker: bool
    colocal_by_conditions: bool
    colocal_structural: bool
    profiles: dict = field(default_factory=dict)
    factors: list = field(default_factory=list)
    lattice_size: int | None = None

    @property
    def colocal(self) -> bool:
        return self.colocal_structural

    def to_dict(self) -> dict:
        return {
            "colocal": self.colocal,
            "colocal_by_conditions": self.colocal_by_conditions,
            "colocal_structural": self.colocal_structural,
            "routes_agree": self.colocal_by_conditions == self.colocal_structural,
            "admissible": self.admissible.to_dict(),
            "string_axioms": self.string_axioms.to_dict(),
            "C1": self.C1.to_dict(),
            "C2": self.C2.to_dict(),
            "C3": self.C3.to_dict() if self.C3 is not None else None,
            "kronecker": self.kronecker,
            "profiles": {_vstr(m): p.to_dict() for m, p in self.profiles.items()},
            "factors": [list(f) for f in self.factors],
            "lattice_size": self.lattice_size,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [
            f"colocal: {'yes' if self.colocal else 'no'}"
            + (f"; lattice size {self.lattice_size}" if self.lattice_size is not None else ""),
            str(self.admissible),
            str(self.string_axioms),
            str(self.C1),
            str(self.C2),
            str(self.C3) if self.C3 is not None else "C3: n/a (C1 fails)",
            f"kronecker: {'yes' if self.kronecker else 'no'}",
        ]
        for m, p in self.profiles.items():
            lines.append(f"vertex {m}: k={p.k} l={p.l}  Y^{{{p.k + 1},{p.l + 1}}}")
        return "\n".join(lines) + "\n"


def analyze(qa: QuiverAlgebra) -> AnalysisReport:
    """Run every check; raise :class:`RouteDisagreement` if the two colocal
    verdicts differ."""
    adm = check_admissible(qa)
    sa = is_string_algebra(qa)
    c1 = check_C1(qa)
    c2 = check_C2(qa)
    c3 = check_C3(qa) if c1 else None
    by_cond = bool(adm) and bool(c1) and bool(c2) and bool(c3)
    structural = bool(is_colocal_type_structural(qa))
    if by_cond != structural:
        raise RouteDisagreement(f"conditions say {by_cond}, structure says {structural}:\n{qa}")
    rep = AnalysisReport(adm, sa, c1, c2, c3, has_kronecker_subquiver(qa), by_cond, structural)
    if structural:
        rep.profiles = path_profiles(qa)
        rep.factors = [p.box for p in rep.profiles.values()]
        rep.lattice_size = structural_size(qa)
    return rep


def structural_size(qa: QuiverAlgebra) -> int:
    """prod_m C(k_m + l_m + 2, k_m + 1), exact."""
    return math.prod(math.comb(p.k + p.l + 2, p.k + 1) for p in path_profiles(qa).values())


# ---------------------------------------------------------------------------
# the T-sets


@dataclass(frozen=True)
class TauSets:
    simple: object
    successor: object
    tau: frozenset
    tau_prime: frozenset
    tau_double_prime: frozenset

    def to_dict(self):
        key = lambda s: sorted((_vstr(v) for v in s))
        return {"S": _vstr(self.simple), "S_prime": _vstr(self.successor),
                "tau": key(self.tau), "tau_prime": key(self.tau_prime),
                "tau_double_prime": key(self.tau_double_prime)}


def _tau_preconditions(qa):
    if not check_admissible(qa):
        raise PreconditionError("tau sets need an admissible algebra")
    if not check_C1(qa):
        raise PreconditionError("tau sets need C1")


def tau_by_paths(qa: QuiverAlgebra, S) -> frozenset:
    """Vertices T with an arrow a: T -> S such that a followed by the out-arrow of S survives."""
    b = qa.out_arrows[S][0]
    return frozenset(qa.source(a) for a in qa.in_arrows[S] if (a, b) not in qa.relation_set)


def tau_sets(qa: QuiverAlgebra, S, strings=None) -> TauSets:
    """``tau`` from path combinatorics; ``tau_prime`` and ``tau_double_prime``
    by filtering all string modules with simple top ``T`` and simple socle ``S'``."""
    _tau_preconditions(qa)
    outs = qa.out_arrows[S]
    if not outs:
        raise PreconditionError(f"vertex {S} has no out-arrow; C3 is vacuous there")
    S2 = qa.target(outs[0])
    tau = tau_by_paths(qa, S)
    if strings is None:
        strings = enumerate_strings(qa)
    feeders = {qa.source(a) for a in qa.in_arrows[S]}
    tp, tpp = set(), set()
    for w in strings:
        M = string_module(qa, w)
        if len(M.top) != 1 or len(M.socle) != 1:
            continue
        T = M.positions[M.top[0]]
        if M.positions[M.socle[0]] != S2 or T not in feeders:
            continue
        tpp.add(T)
        if M.length >= 3:
            tp.add(T)
    return TauSets(S, S2, tau, frozenset(tp), frozenset(tpp))


@dataclass
class TauReport:
    sets: list
    violations: list

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self):
        return {"passed": self.passed, "sets": [t.to_dict() for t in self.sets],
                "violations": self.violations}


def verify_tau_equivalences(qa: QuiverAlgebra, strings=None) -> TauReport:
    """tau = tau' for every S with an out-arrow, and tau = tau'' when S != S'."""
    _tau_preconditions(qa)
    if strings is None:
        strings = enumerate_strings(qa)
    sets, bad = [], []
    for S in qa.vertices:
        if not qa.out_arrows[S]:
            continue
        t = tau_sets(qa, S, strings)
        sets.append(t)
        if not (t.tau <= t.tau_prime <= t.tau_double_prime):
            bad.append(f"S={S}: chain tau <= tau' <= tau'' broken")
        if t.tau != t.tau_prime:
            bad.append(f"S={S}: tau {sorted(t.tau, key=vertex_key)} != tau' "
                       f"{sorted(t.tau_prime, key=vertex_key)}")
        if t.simple != t.successor and t.tau != t.tau_double_prime:
            bad.append(f"S={S}: tau {sorted(t.tau, key=vertex_key)} != tau'' "
                       f"{sorted(t.tau_double_prime, key=vertex_key)}")
    return TauReport(sets, bad)


# ---------------------------------------------------------------------------
# the two lattices


def _require_colocal(qa):
    if not is_colocal_type_structural(qa):
        raise PreconditionError("the down-set model is only valid for colocal-type algebras")


def brute_force_lattice(qa: QuiverAlgebra, max_size: int | None = DEFAULT_MAX_SIZE,
                        strings=None) -> DownsetLattice:
    """Down-sets of the submodule poset of all string modules.

    Each element is a subobject-closed subcategory, recorded as the set of
    its indecomposables (bitmask over ``lattice.poset.items``).
    """
    _require_colocal(qa)
    if strings is None:
        strings = enumerate_strings(qa)
    return DownsetLattice(submodule_poset(qa, strings), max_size=max_size)


def structural_lattice(qa: QuiverAlgebra, max_size: int | None = DEFAULT_MAX_SIZE) -> ProductLattice:
    """prod over vertices (ascending) of Y^{k_m+1, l_m+1}, factored."""
    _require_colocal(qa)
    prof = path_profiles(qa)
    return ProductLattice([YoungLattice(p.k + 1, p.l + 1, max_size=max_size) for p in prof.values()],
                          max_size=max_size)


@dataclass
class MainTheoremResult:
    brute_force_size: int
    structural_size: int
    factors: list
    witness: dict

    def to_dict(self):
        return asdict(self)


def verify_main_theorem(qa: QuiverAlgebra, max_size: int | None = DEFAULT_MAX_SIZE,
                        strings=None) -> MainTheoremResult:
    """Both lattices, an isomorphism witness between them, or :class:`VerificationError`."""
    B = brute_force_lattice(qa, max_size=max_size, strings=strings)
    S = structural_lattice(qa, max_size=max_size)
    iso = are_isomorphic(B, S, max_size=max_size)
    if iso is None:
        raise VerificationError(f"lattices differ (sizes {B.size} vs {S.size}) for\n{qa}")
    return MainTheoremResult(B.size, S.size, [[f.m, f.n] for f in S.factors], iso.to_dict())


# ---------------------------------------------------------------------------
# socle classes


@dataclass
class PartitionReport:
    classes: dict
    covers: bool
    disjoint: bool
    closed: bool
    grid_sizes_ok: bool
    uncovered: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.covers and self.disjoint and self.closed and self.grid_sizes_ok

    def to_dict(self):
        return {"passed": self.passed, "M1_cover": self.covers, "M2_disjoint": self.disjoint,
                "M3_closed": self.closed, "grid_sizes": self.grid_sizes_ok,
                "classes": {_vstr(m): [str(w) for w in ws] for m, ws in self.classes.items()},
                "uncovered": [str(w) for w in self.uncovered]}


def verify_partition_M(qa: QuiverAlgebra, strings=None) -> PartitionReport:
    """(M1) the classes cover every string, (M2) they are disjoint,
    (M3) each class is closed under submodules; plus |class m| = (k+1)(l+1)."""
    _require_colocal(qa)
    if strings is None:
        strings = enumerate_strings(qa)
    prof = path_profiles(qa)
    classes = {m: socle_class(qa, m, strings) for m in qa.vertices}
    seen: dict = {}
    disjoint = True
    for m, ws in classes.items():
        for w in ws:
            if w in seen:
                disjoint = False
            seen[w] = m
    uncovered = [w for w in strings if w not in seen]
    closed = all(seen.get(v) == m
                 for m, ws in classes.items() for w in ws
                 for v in strings if is_submodule(qa, v, w))
    grid = all(len(classes[m]) == (p.k + 1) * (p.l + 1) for m, p in prof.items())
    return PartitionReport(classes, not uncovered, disjoint, closed, grid, uncovered)


# ---------------------------------------------------------------------------
# union property


def check_union_property(L: DownsetLattice, samples: int | None = None, seed: int = 0) -> bool:
    """ind(a v b) = ind a  u  ind b.

    Every element is first checked to be closed under taking submodules;
    then for each pair the union of the member sets must itself be an
    element and coincide with the lattice join.  ``samples`` restricts the
    pairs to a seeded random sample.
    """
    P = L.poset
    els = L.elements()
    for x in els:
        closure = 0
        for i in range(len(P)):
            if x >> i & 1:
                closure |= P.down_masks[i]
        if closure != x:
            return False
    if samples is None:
        pairs = ((a, b) for a in els for b in els)
    else:
        rng = random.Random(seed)
        pairs = ((rng.choice(els), rng.choice(els)) for _ in range(samples))
    for a, b in pairs:
        u = a | b
        if not L.contains(u) or L.join(a, b) != u:
            return False
    return True
