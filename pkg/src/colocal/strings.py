"""Strings, bands and string modules over a monomial quiver algebra.

Words are written as in the usual string-algebra notation: a word
``g_1 g_2 ... g_n`` satisfies ``s(g_i) = e(g_{i+1})`` where an inverse
letter swaps start and end.  Reading left to right, basis vectors
``z_0 .. z_n`` sit at the vertices ``u(0) = e(g_1)`` and ``u(i) = s(g_i)``.
A direct letter ``a`` at position i maps ``z_i -> z_{i-1}``; an inverse
letter maps ``z_{i-1} -> z_i``.

Text form: letters separated by spaces, inverses marked with ``~``
(``b~ a~ b``); trivial strings are ``e<vertex>``.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from .quiver import (PreconditionError, QuiverAlgebra, check_admissible,
                     is_colocal_type_structural, path_profiles, pumping_bound,
                     vertex_key)


class StringError(ValueError):
    pass


class InfiniteStringsError(StringError):
    """String enumeration did not terminate within the length cap."""


class Letter(NamedTuple):
    arrow: str
    inverse: bool = False

    def inv(self) -> "Letter":
        return Letter(self.arrow, not self.inverse)

    def __str__(self):
        return self.arrow + ("~" if self.inverse else "")


def _left(qa: QuiverAlgebra, x: Letter):
    a = qa.arrow[x.arrow]
    return a.source if x.inverse else a.target


def _right(qa: QuiverAlgebra, x: Letter):
    a = qa.arrow[x.arrow]
    return a.target if x.inverse else a.source


@dataclass(frozen=True, order=True)
class StringWord:
    """A string.  ``base`` is the left endpoint ``u(0)``; for trivial strings it is ``m`` of ``e_m``."""

    letters: tuple
    base: object

    @property
    def is_trivial(self) -> bool:
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return f"e{self.base}"
        return " ".join(str(x) for x in self.letters)

    def sort_key(self):
        return (len(self.letters), tuple(self.letters), vertex_key(self.base))


def inverse(w: StringWord, qa: QuiverAlgebra) -> StringWord:
    if w.is_trivial:
        return w
    letters = tuple(x.inv() for x in reversed(w.letters))
    return StringWord(letters, _left(qa, letters[0]))


def vertices_of(qa: QuiverAlgebra, w: StringWord) -> tuple:
    """u(0), ..., u(n)."""
    if w.is_trivial:
        return (w.base,)
    return (_left(qa, w.letters[0]),) + tuple(_right(qa, x) for x in w.letters)


def relation_patterns(qa: QuiverAlgebra) -> frozenset:
    """Letter blocks a string must avoid: each relation as a run of direct letters
    (reversed, since direct letters are read against the arrows) or of inverse
    letters (in traversal order)."""
    pats = set()
    for r in qa.relations:
        pats.add(tuple(Letter(x, False) for x in reversed(r)))
        pats.add(tuple(Letter(x, True) for x in r))
    return frozenset(pats)


class _Checker:
    """Incremental validity test for right extensions of words."""

    def __init__(self, qa: QuiverAlgebra):
        self.qa = qa
        self.patterns = relation_patterns(qa)
        self.lengths = sorted({len(p) for p in self.patterns})

    def can_append(self, letters: tuple, x: Letter) -> str | None:
        qa = self.qa
        if letters:
            last = letters[-1]
            if _right(qa, last) != _left(qa, x):
                return "walk"
            if last.arrow == x.arrow and last.inverse != x.inverse:
                return "backtracking"
        cand = letters + (x,)
        n = len(cand)
        for k in self.lengths:
            if k <= n and cand[n - k:] in self.patterns:
                return "relation"
        return None


def _parse_letter(tok: str) -> Letter:
    if tok.endswith("~"):
        return Letter(tok[:-1], True)
    return Letter(tok, False)


def parse_string(qa: QuiverAlgebra, text: str) -> StringWord:
    """Parse ``"b~ a~ b"`` or ``"e2"`` and validate it."""
    toks = text.split()
    if len(toks) == 1 and toks[0].startswith("e") and toks[0] not in qa.arrow:
        tail = toks[0][1:]
        for v in qa.vertices:
            if str(v) == tail:
                return StringWord((), v)
    return validate_string(qa, [_parse_letter(t) for t in toks])


def validate_string(qa: QuiverAlgebra, letters: Sequence, base=None) -> StringWord:
    """Return the word if it is a string; otherwise raise :class:`StringError`
    naming the violated clause (unknown arrow, walk, backtracking, relation)."""
    letters = tuple(Letter(*x) if not isinstance(x, Letter) else x for x in letters)
    if not letters:
        if base not in qa.vertices:
            raise StringError(f"trivial string needs a vertex, got {base!r}")
        return StringWord((), base)
    for x in letters:
        if x.arrow not in qa.arrow:
            raise StringError(f"unknown arrow {x.arrow!r}")
    chk = _Checker(qa)
    for i, x in enumerate(letters):
        why = chk.can_append(letters[:i], x)
        if why:
            raise StringError(f"{why} violation at letter {i + 1} ({x})")
    return StringWord(letters, _left(qa, letters[0]))


def canonical_string(w: StringWord, qa: QuiverAlgebra) -> StringWord:
    """The lexicographically smaller of ``w`` and its inverse (direct < inverse)."""
    if w.is_trivial:
        return w
    v = inverse(w, qa)
    return min(w, v, key=lambda s: tuple(s.letters))


def length_cap(qa: QuiverAlgebra) -> int:
    return 1 + max(1, len(qa.arrows)) * pumping_bound(qa)


def has_infinitely_many_strings(qa: QuiverAlgebra) -> bool:
    """Cycle search in the automaton whose states are the last
    ``max(1, L - 1)`` letters of a string (``L`` the longest relation)."""
    chk = _Checker(qa)
    w = max(1, max(chk.lengths, default=0) - 1)
    letters_all = sorted(Letter(a, inv) for a in qa.arrow for inv in (False, True))
    states = [()]
    for _ in range(w):
        states = [s + (x,) for s in states for x in letters_all if chk.can_append(s, x) is None]
    WHITE, GREY, BLACK = 0, 1, 2
    color = dict.fromkeys(states, WHITE)

    def succ(s):
        return [(s + (x,))[-w:] for x in letters_all if chk.can_append(s, x) is None]

    for root in states:
        if color[root] != WHITE:
            continue
        color[root] = GREY
        stack = [(root, iter(succ(root)))]
        while stack:
            node, it = stack[-1]
            for nxt in it:
                if color[nxt] == GREY:
                    return True
                if color[nxt] == WHITE:
                    color[nxt] = GREY
                    stack.append((nxt, iter(succ(nxt))))
                    break
            else:
                color[node] = BLACK
                stack.pop()
    return False


def enumerate_strings(qa: QuiverAlgebra, max_len: int | None = None) -> list:
    """All canonical strings, trivial ones included, sorted by (length, letters).

    With ``max_len`` the result is truncated to strings of at most that
    length.  Without it, enumeration runs to exhaustion and raises
    :class:`InfiniteStringsError` if a string exceeds :func:`length_cap`
    (which happens exactly when there are infinitely many strings, e.g. bands).
    """
    if max_len is None and not check_admissible(qa):
        raise InfiniteStringsError("non-admissible algebra has infinitely many strings")
    if max_len is None and has_infinitely_many_strings(qa):
        raise InfiniteStringsError("the algebra has infinitely many strings")
    cap = length_cap(qa) if max_len is None else max_len
    chk = _Checker(qa)
    letters_all = sorted(Letter(a, inv) for a in qa.arrow for inv in (False, True))
    found = {StringWord((), v) for v in qa.vertices}
    frontier = [()]
    depth = 0
    while frontier:
        if depth >= cap:
            if max_len is None:
                raise InfiniteStringsError(f"strings longer than {cap} letters exist")
            break
        nxt = []
        for word in frontier:
            for x in letters_all:
                if chk.can_append(word, x) is None:
                    nw = word + (x,)
                    nxt.append(nw)
                    found.add(canonical_string(StringWord(nw, _left(qa, nw[0])), qa))
        frontier = nxt
        depth += 1
    return sorted(found, key=StringWord.sort_key)


def detect_bands(qa: QuiverAlgebra, max_len: int | None = None) -> list:
    """Primitive bands up to rotation and inversion, of length <= ``max_len``.

    A band is a nonempty string whose every power is again a string.  The
    default bound is ``2 * |arrows|``.
    """
    if max_len is None:
        max_len = 2 * max(1, len(qa.arrows))
    chk = _Checker(qa)
    letters_all = sorted(Letter(a, inv) for a in qa.arrow for inv in (False, True))
    seen = set()
    out = []
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for word in frontier:
            for x in letters_all:
                if chk.can_append(word, x) is None:
                    nxt.append(word + (x,))
        frontier = nxt
        for word in frontier:
            if _is_band(chk, word) and _is_primitive(word):
                key = _band_key(word)
                if key not in seen:
                    seen.add(key)
                    out.append(StringWord(key, _left(qa, key[0])))
    return out


def _is_band(chk: _Checker, word: tuple) -> bool:
    # every window of w^k already occurs in a power long enough to cover the
    # longest relation plus one period
    reps = 2 + max(chk.lengths, default=0) // len(word) + 1
    acc: tuple = ()
    for x in word * reps:
        if chk.can_append(acc, x) is not None:
            return False
        acc = acc + (x,)
    return True


def _is_primitive(word: tuple) -> bool:
    n = len(word)
    return all(word != word[d:] + word[:d] for d in range(1, n) if n % d == 0)


def _band_key(word: tuple) -> tuple:
    inv = tuple(x.inv() for x in reversed(word))
    rots = [w[i:] + w[:i] for w in (word, inv) for i in range(len(word))]
    return min(rots)


# ---------------------------------------------------------------------------
# string modules


@dataclass(frozen=True)
class StringModuleData:
    word: StringWord
    positions: tuple  # vertex of each basis vector z_0..z_n
    actions: dict  # arrow -> tuple of (from_pos, to_pos)

    @cached_property
    def dimension_vector(self) -> dict:
        return dict(sorted(Counter(self.positions).items(), key=lambda kv: vertex_key(kv[0])))

    @cached_property
    def edges(self) -> tuple:
        return tuple(sorted((i, j, a) for a, pairs in self.actions.items() for i, j in pairs))

    @cached_property
    def socle(self) -> tuple:
        """Positions with no outgoing action."""
        srcs = {i for i, _, _ in self.edges}
        return tuple(i for i in range(len(self.positions)) if i not in srcs)

    @cached_property
    def top(self) -> tuple:
        """Positions not in the image of any action."""
        tgts = {j for _, j, _ in self.edges}
        return tuple(i for i in range(len(self.positions)) if i not in tgts)

    @property
    def length(self) -> int:
        return len(self.positions)

    @property
    def socle_vertices(self) -> tuple:
        return tuple(sorted((self.positions[i] for i in self.socle), key=vertex_key))

    @property
    def top_vertices(self) -> tuple:
        return tuple(sorted((self.positions[i] for i in self.top), key=vertex_key))

    @cached_property
    def loewy_length(self) -> int:
        """Number of radical layers: one more than the longest chain of actions."""
        n = len(self.positions)
        succ = {i: [] for i in range(n)}
        for i, j, _ in self.edges:
            succ[i].append(j)
        memo: dict = {}

        def depth(i):
            if i not in memo:
                memo[i] = 1 + max((depth(j) for j in succ[i]), default=0)
            return memo[i]
        return max(depth(i) for i in range(n))

    def to_dict(self) -> dict:
        return {
            "string": str(self.word),
            "dimension_vector": {str(k): v for k, v in self.dimension_vector.items()},
            "actions": [[a, i, j] for i, j, a in self.edges],
            "socle": [str(v) for v in self.socle_vertices],
            "top": [str(v) for v in self.top_vertices],
        }


def string_module(qa: QuiverAlgebra, w: StringWord) -> StringModuleData:
    pos = vertices_of(qa, w)
    acts: dict = {}
    for i, x in enumerate(w.letters, start=1):
        pair = (i - 1, i) if x.inverse else (i, i - 1)
        acts.setdefault(x.arrow, []).append(pair)
    return StringModuleData(w, pos, {a: tuple(p) for a, p in sorted(acts.items())})


# ---------------------------------------------------------------------------
# submodules


def _occurs_closed(qa: QuiverAlgebra, sub: StringWord, sup: StringWord) -> bool:
    """``sup = w1 a~ sub b w2`` (or one-sided / equal) with the neighbouring
    letters pointing into ``sub``."""
    n, k = len(sup.letters), len(sub.letters)
    verts = vertices_of(qa, sup) if sub.is_trivial else None
    for i in range(n - k + 1):
        j = i + k
        if sub.is_trivial:
            if verts[i] != sub.base:
                continue
        elif sup.letters[i:j] != sub.letters:
            continue
        if i > 0 and not sup.letters[i - 1].inverse:
            continue
        if j < n and sup.letters[j].inverse:
            continue
        return True
    return False


def is_submodule(qa: QuiverAlgebra, w_sub: StringWord, w_sup: StringWord) -> bool:
    """Whether M(w_sub) is a substring submodule of M(w_sup).

    Both orientations of both words are tried.  Over colocal-type algebras
    every embedding between string modules is of this form; in general the
    criterion is sufficient but not necessary.
    """
    if len(w_sub) > len(w_sup):
        return False
    sups = {w_sup, inverse(w_sup, qa)}
    subs = {w_sub, inverse(w_sub, qa)}
    return any(_occurs_closed(qa, s, t) for s in subs for t in sups)


def submodule_poset(qa: QuiverAlgebra, strings: Sequence):
    """Poset of strings ordered by ``is_submodule``."""
    from .lattice import FinitePoset, PosetError
    strings = list(strings)
    if len(set(strings)) != len(strings):
        raise ValueError("strings must be pairwise distinct")
    n = len(strings)
    rel = [[is_submodule(qa, strings[i], strings[j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rel[i][j] and rel[j][i]:
                raise PosetError(f"antisymmetry violated by {strings[i]} and {strings[j]}")
    return FinitePoset(strings, rel, names=[str(s) for s in strings], check=True)


# ---------------------------------------------------------------------------
# colocal classes


def _require_colocal(qa):
    if not is_colocal_type_structural(qa):
        raise PreconditionError("operation requires a colocal-type algebra")


def colocal_word(qa: QuiverAlgebra, m, profile=None) -> StringWord:
    """``w_m``: the longer maximal path ending at ``m`` as an inverse block,
    then the other one as a direct block."""
    if profile is None:
        profile = path_profiles(qa)[m]
    letters = tuple(Letter(a, True) for a in profile.path_k)
    letters += tuple(Letter(b, False) for b in reversed(profile.path_l))
    if not letters:
        return StringWord((), m)
    return validate_string(qa, letters)


def maximal_colocal_module(qa: QuiverAlgebra, m) -> StringWord:
    _require_colocal(qa)
    return colocal_word(qa, m)


def socle_class(qa: QuiverAlgebra, m, strings=None) -> list:
    """Canonical strings whose modules are submodules of ``M_m``."""
    _require_colocal(qa)
    wm = colocal_word(qa, m)
    if strings is None:
        strings = enumerate_strings(qa)
    return [w for w in strings if is_submodule(qa, w, wm)]


def grid_truncations(qa: QuiverAlgebra, m) -> list:
    """The (k+1)(l+1) words ``a_i~ .. a_1~ b_1 .. b_j`` read off the profile of ``m``."""
    prof = path_profiles(qa)[m]
    alphas = tuple(reversed(prof.path_k))  # a_1 ends at m
    betas = tuple(reversed(prof.path_l))
    out = []
    for i in range(prof.k + 1):
        for j in range(prof.l + 1):
            letters = tuple(Letter(a, True) for a in reversed(alphas[:i]))
            letters += tuple(Letter(b, False) for b in betas[:j])
            w = validate_string(qa, letters, base=m) if letters else StringWord((), m)
            out.append(canonical_string(w, qa))
    return out


def strings_from_vertex(qa: QuiverAlgebra, start) -> list:
    """Strings whose left endpoint is ``start`` (both orientations), breadth first."""
    chk = _Checker(qa)
    letters_all = sorted(Letter(a, inv) for a in qa.arrow for inv in (False, True))
    out = [StringWord((), start)]
    q = deque([()])
    cap = length_cap(qa)
    while q:
        word = q.popleft()
        if len(word) >= cap:
            raise InfiniteStringsError("string enumeration exceeded the length cap")
        for x in letters_all:
            if not word and _left(qa, x) != start:
                continue
            if chk.can_append(word, x) is None:
                nw = word + (x,)
                out.append(StringWord(nw, start))
                q.append(nw)
    return out
