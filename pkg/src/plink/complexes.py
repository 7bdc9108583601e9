"""Simplicial complexes, star/link/closure operators, and edge contraction.

Simplices are canonical ascending tuples of non-negative integer vertex ids.
Orientation signs are carried by chain coefficients, never by reordering the
stored vertices, so simplex identity is a pure set question.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

Simplex = tuple[int, ...]
# A chain is a dict mapping canonical simplices (all of one dimension) to
# nonzero integer or Fraction coefficients.
Chain = dict


class InvalidArgument(ValueError):
    """An operation was applied outside its stated domain."""


def canon(vertices: Iterable[int]) -> Simplex:
    """Canonical ascending form of a simplex given as any vertex iterable."""
    vs = tuple(sorted(vertices))
    if not vs:
        raise InvalidArgument("a simplex needs at least one vertex")
    if any(vs[i] == vs[i + 1] for i in range(len(vs) - 1)):
        raise InvalidArgument(f"duplicate vertices in {vertices!r}")
    if vs[0] < 0:
        raise InvalidArgument(f"negative vertex id in {vertices!r}")
    return vs


def faces_of(simplex: Simplex) -> Iterable[Simplex]:
    """All nonempty faces of a simplex, the simplex itself included."""
    for k in range(1, len(simplex) + 1):
        yield from itertools.combinations(simplex, k)


def boundary_of(simplex: Simplex) -> Chain:
    """Boundary chain of one canonically oriented simplex."""
    if len(simplex) == 1:
        return {}
    out = {}
    for j in range(len(simplex)):
        face = simplex[:j] + simplex[j + 1:]
        out[face] = 1 if j % 2 == 0 else -1
    return out


def chain_boundary(chain: Chain) -> Chain:
    out: Chain = {}
    for simplex, coeff in chain.items():
        for face, sign in boundary_of(simplex).items():
            c = out.get(face, 0) + sign * coeff
            if c:
                out[face] = c
            else:
                out.pop(face, None)
    return out


class SimplicialComplex:
    """Face-closed set of simplices with optional weights on one dimension."""

    def __init__(self, simplices: Iterable[Simplex],
                 weights: Optional[Mapping[Simplex, Fraction]] = None):
        ss = frozenset(canon(s) for s in simplices)
        for s in ss:
            for f in faces_of(s):
                if f not in ss:
                    raise InvalidArgument(
                        f"not face-closed: {f} missing (face of {s})")
        self.simplices = ss
        w = {}
        if weights:
            dims = set()
            for s, wt in weights.items():
                s = canon(s)
                if s not in ss:
                    raise InvalidArgument(f"weighted simplex {s} not in complex")
                wt = Fraction(wt)
                if wt < 0:
                    raise InvalidArgument(f"negative weight on {s}")
                dims.add(len(s))
                w[s] = wt
            if len(dims) > 1:
                raise InvalidArgument("weights must live on a single dimension")
        self.weights = w

    @classmethod
    def from_maximal(cls, simplices: Iterable[Iterable[int]],
                     weights: Optional[Mapping] = None) -> "SimplicialComplex":
        """Build from generators; the face closure is taken automatically."""
        closed = set()
        for s in simplices:
            closed.update(faces_of(canon(s)))
        wts = None
        if weights:
            wts = {canon(s): Fraction(w) for s, w in weights.items()}
        return cls(closed, wts)

    # -- basic queries ------------------------------------------------------

    @property
    def dim(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def p_simplices(self, p: int) -> list[Simplex]:
        """All p-simplices in canonical (lexicographic) order."""
        return sorted(s for s in self.simplices if len(s) == p + 1)

    @property
    def vertices(self) -> list[int]:
        return sorted(s[0] for s in self.simplices if len(s) == 1)

    @property
    def edges(self) -> list[Simplex]:
        return self.p_simplices(1)

    def weight(self, simplex: Simplex) -> Fraction:
        """Weight of a simplex; unweighted simplices default to 1."""
        return self.weights.get(simplex, Fraction(1))

    def __contains__(self, simplex) -> bool:
        return tuple(sorted(simplex)) in self.simplices

    def __eq__(self, other) -> bool:
        return (isinstance(other, SimplicialComplex)
                and self.simplices == other.simplices
                and self.weights == other.weights)

    def __hash__(self):
        return hash(self.simplices)

    def __repr__(self):
        return (f"SimplicialComplex({len(self.vertices)} vertices, "
                f"{len(self.simplices)} simplices, dim {self.dim})")

    def _require(self, subset) -> frozenset:
        sub = frozenset(canon(s) for s in subset)
        for s in sub:
            if s not in self.simplices:
                raise InvalidArgument(f"simplex {s} not in complex")
        return sub

    # -- neighborhood operators ---------------------------------------------

    def closure(self, subset: Iterable[Simplex]) -> frozenset:
        """Minimal face-closed superset of the given simplices."""
        sub = self._require(subset)
        out = set()
        for s in sub:
            out.update(faces_of(s))
        return frozenset(out)

    def star(self, subset: Iterable[Simplex]) -> frozenset:
        """All cofaces of the given simplices (themselves included)."""
        sub = self._require(subset)
        return frozenset(s for s in self.simplices
                         if any(set(x) <= set(s) for x in sub))

    def link(self, subset: Iterable[Simplex]) -> frozenset:
        """Lk X = closure(star X) minus star(closure X)."""
        sub = self._require(subset)
        return self.closure(self.star(sub)) - self.star(self.closure(sub))

    # -- link conditions ----------------------------------------------------

    def satisfies_p_link(self, edge: Iterable[int], p: int) -> bool:
        """True iff p <= 0 or every (p-1)-simplex of Lk a && Lk b is in Lk ab."""
        e = canon(edge)
        if len(e) != 2 or e not in self.simplices:
            raise InvalidArgument(f"{e} is not an edge of the complex")
        if p <= 0:
            return True
        a, b = e
        common = self.link([(a,)]) & self.link([(b,)])
        lk_ab = self.link([e])
        return all(x in lk_ab for x in common if len(x) == p)

    def satisfies_link_condition(self, edge: Iterable[int]) -> bool:
        """True iff Lk a && Lk b equals Lk ab as sets."""
        e = canon(edge)
        if len(e) != 2 or e not in self.simplices:
            raise InvalidArgument(f"{e} is not an edge of the complex")
        a, b = e
        return self.link([(a,)]) & self.link([(b,)]) == self.link([e])


# -- edge contraction -------------------------------------------------------

MIRROR = "mirror"
COLLAPSING = "collapsing"
INJECTIVE = "injective"


@dataclass(frozen=True)
class SimplexFate:
    """How one simplex behaves under a contraction."""
    kind: str                       # "mirror" | "collapsing" | "injective"
    partner: Optional[Simplex] = None  # the other mirror, when kind == mirror


@dataclass(frozen=True)
class EdgeContraction:
    source: SimplicialComplex
    target: SimplicialComplex
    a: int                       # surviving vertex
    b: int                       # removed vertex
    simplex_map: Mapping[Simplex, Simplex]
    classification: Mapping[Simplex, SimplexFate]

    def image(self, simplex: Simplex) -> Simplex:
        return self.simplex_map[canon(simplex)]


def _rename(simplex: Simplex, b: int, a: int) -> Simplex:
    return tuple(sorted(a if v == b else v for v in simplex))


def contract_edge(complex: SimplicialComplex, edge: Iterable[int],
                  keep: Optional[int] = None) -> EdgeContraction:
    """Contract an edge, identifying vertex b with vertex a.

    By default the smaller endpoint survives; pass keep= to override.
    """
    e = canon(edge)
    if len(e) != 2 or e not in complex.simplices:
        raise InvalidArgument(f"{e} is not an edge of the complex")
    if keep is None:
        a, b = e
    elif keep in e:
        a = keep
        b = e[0] if e[1] == keep else e[1]
    else:
        raise InvalidArgument(f"keep={keep} is not an endpoint of {e}")

    simplex_map = {}
    classification = {}
    for s in complex.simplices:
        vs = set(s)
        if a in vs and b in vs:
            classification[s] = SimplexFate(COLLAPSING)
            simplex_map[s] = tuple(v for v in s if v != b)
        elif b in vs:
            img = _rename(s, b, a)
            simplex_map[s] = img
            if img in complex.simplices:
                classification[s] = SimplexFate(MIRROR, partner=img)
            else:
                classification[s] = SimplexFate(INJECTIVE)
        else:
            simplex_map[s] = s
            partner = tuple(sorted(b if v == a else v for v in s))
            if a in vs and partner in complex.simplices:
                classification[s] = SimplexFate(MIRROR, partner=partner)
            else:
                classification[s] = SimplexFate(INJECTIVE)

    target_simplices = set(simplex_map.values())
    target_weights = None
    if complex.weights:
        wdim = len(next(iter(complex.weights)))
        target_weights = {}
        for s, img in simplex_map.items():
            if len(img) != wdim or len(s) != wdim:
                continue
            w = complex.weight(s)
            # mirror merges keep the smaller weight
            if img in target_weights:
                target_weights[img] = min(target_weights[img], w)
            else:
                target_weights[img] = w
    target = SimplicialComplex(target_simplices, target_weights)
    return EdgeContraction(source=complex, target=target, a=a, b=b,
                           simplex_map=simplex_map,
                           classification=classification)


def push_sign(simplex: Simplex, b: int, a: int) -> int:
    """Parity correction when b is renamed to a and vertices are re-sorted."""
    if b not in simplex:
        return 1
    i = simplex.index(b)
    others = [v for v in simplex if v != b]
    j = sum(1 for v in others if v < a)
    return 1 if (i - j) % 2 == 0 else -1


def push_chain(contraction: EdgeContraction, chain: Chain) -> Chain:
    """Transport a chain along the contraction's induced chain map.

    Collapsing simplices map to zero (dimension drops); mirror pairs merge
    with coefficient addition after sign correction.
    """
    out: Chain = {}
    for s, coeff in chain.items():
        s = canon(s)
        if s not in contraction.source.simplices:
            raise InvalidArgument(f"chain mentions unknown simplex {s}")
        fate = contraction.classification[s]
        if fate.kind == COLLAPSING:
            continue
        img = contraction.simplex_map[s]
        sign = push_sign(s, contraction.b, contraction.a)
        c = out.get(img, 0) + sign * coeff
        if c:
            out[img] = c
        else:
            out.pop(img, None)
    return out
