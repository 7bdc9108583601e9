"""Bipartite incidence graphs of boundary matrices, b-parity, chordless b-odd
circuit search, total-unimodularity tests, and the circuit transport maps that
carry circuits across an edge contraction.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .complexes import (COLLAPSING, INJECTIVE, MIRROR, EdgeContraction,
                        InvalidArgument, SimplicialComplex)
from .homology import IntegerMatrix, boundary_matrix

B_EVEN = "b-even"
B_ODD = "b-odd"
B_NEITHER = "neither"

# An edge of the bipartite graph is (row_label, col_label); a circuit is a
# frozenset of such edges.
Edge = tuple
Circuit = frozenset


class CircuitDomainError(ValueError):
    """Circuit is outside the domain of the contraction-induced map."""


class PreconditionError(ValueError):
    """A stated precondition of the operation does not hold."""


@dataclass
class IncidenceGraph:
    """Weighted bipartite graph: one vertex per row and per column of a 0/+-1
    matrix, one edge of weight a_ij per nonzero entry."""
    rows: tuple
    cols: tuple
    weights: dict                  # (row_label, col_label) -> +-1

    def __post_init__(self):
        adj = {v: set() for v in self.rows + self.cols}
        for (r, c) in self.weights:
            adj[r].add(c)
            adj[c].add(r)
        self.adj = adj

    @property
    def vertices(self) -> tuple:
        return self.rows + self.cols

    @property
    def edges(self) -> list:
        return sorted(self.weights)

    def has_edge(self, r, c) -> bool:
        return (r, c) in self.weights

    def degree_in(self, vertex, edge_set) -> int:
        return sum(1 for (r, c) in edge_set if r == vertex or c == vertex)

    @classmethod
    def from_matrix(cls, matrix: Union[IntegerMatrix, list]) -> "IncidenceGraph":
        if isinstance(matrix, IntegerMatrix):
            rows, cols, entries = matrix.rows, matrix.cols, matrix.entries
        else:
            entries = matrix
            rows = tuple(("r", i) for i in range(len(entries)))
            cols = tuple(("c", j) for j in range(len(entries[0]) if entries else 0))
        weights = {}
        for i, r in enumerate(rows):
            for j, c in enumerate(cols):
                if entries[i][j]:
                    if entries[i][j] not in (1, -1):
                        raise InvalidArgument(
                            f"entry {entries[i][j]} at {r},{c} not in 0,+-1")
                    weights[(r, c)] = entries[i][j]
        return cls(rows=rows, cols=cols, weights=weights)

    def adjacency_entries(self) -> list:
        return [[self.weights.get((r, c), 0) for c in self.cols]
                for r in self.rows]


def build_p_graph(complex: SimplicialComplex, p: int) -> IncidenceGraph:
    """The p-graph of a complex: duals of p- and (p-1)-simplices, edge weights
    equal to the entries of the p-boundary matrix."""
    return IncidenceGraph.from_matrix(boundary_matrix(complex, p))


# -- circuits and b-parity --------------------------------------------------

def circuit_vertices(circuit) -> set:
    out = set()
    for (r, c) in circuit:
        out.add(r)
        out.add(c)
    return out


def check_circuit(graph: IncidenceGraph, circuit) -> None:
    degrees = {}
    for e in circuit:
        if e not in graph.weights:
            raise InvalidArgument(f"edge {e} not in graph")
        for v in e:
            degrees[v] = degrees.get(v, 0) + 1
    for v, d in degrees.items():
        if d % 2:
            raise InvalidArgument(f"vertex {v} has odd degree {d}")


def b_parity(graph: IncidenceGraph, circuit) -> str:
    """b-even if the edge weights sum to 0 mod 4, b-odd if 2 mod 4."""
    check_circuit(graph, circuit)
    total = sum(graph.weights[e] for e in circuit) % 4
    if total == 0:
        return B_EVEN
    if total == 2:
        return B_ODD
    return B_NEITHER


def enumerate_chordless_cycles(graph: IncidenceGraph,
                               budget: Optional[int] = None
                               ) -> Iterator[Union[Circuit, None]]:
    """Yield every chordless (induced) cycle as an edge frozenset, each once.

    Depth-first extension of induced paths with a canonical smallest start
    vertex.  Yields None once if the node budget is exhausted.
    """
    order = {v: i for i, v in enumerate(graph.vertices)}
    adj = {v: sorted(graph.adj[v], key=order.get) for v in graph.vertices}
    spent = 0

    def extend(path, in_path):
        nonlocal spent
        s, u = path[0], path[-1]
        for w in adj[u]:
            if budget is not None and spent >= budget:
                yield None
                return
            spent += 1
            if order[w] <= order[s] or w in in_path:
                continue
            nbrs = graph.adj[w] & in_path
            if nbrs == {u}:
                path.append(w)
                in_path.add(w)
                yield from extend(path, in_path)
                in_path.discard(w)
                path.pop()
            elif nbrs == {u, s} and len(path) >= 3:
                if order[path[1]] < order[w]:   # one direction only
                    cycle = path + [w]
                    edges = set()
                    for i in range(len(cycle)):
                        a, b = cycle[i], cycle[(i + 1) % len(cycle)]
                        edges.add((a, b) if (a, b) in graph.weights else (b, a))
                    yield frozenset(edges)

    for s in graph.vertices:
        for t in adj[s]:
            if order[t] > order[s]:
                yield from extend([s, t], {s, t})


def enumerate_circuits(graph: IncidenceGraph, limit: int = 1 << 20
                       ) -> Iterator[Circuit]:
    """Every nonempty element of the cycle space (all circuits), via GF(2)
    combinations of fundamental cycles.  For small graphs only."""
    parent = {}
    parent_edge = {}
    seen = set()
    fundamentals = []
    for root in graph.vertices:
        if root in seen:
            continue
        seen.add(root)
        stack = [root]
        while stack:
            v = stack.pop()
            for w in sorted(graph.adj[v], key=str):
                if w not in seen:
                    seen.add(w)
                    parent[w] = v
                    parent_edge[w] = ((v, w) if (v, w) in graph.weights
                                      else (w, v))
                    stack.append(w)

    def path_to_root(v):
        out = set()
        while v in parent_edge:
            out.add(parent_edge[v])
            v = parent[v]
        return out

    # each non-tree edge closes one fundamental cycle of the spanning forest
    tree_edges = set(parent_edge.values())
    for e in graph.weights:
        if e in tree_edges:
            continue
        r, c = e
        cyc = path_to_root(r) ^ path_to_root(c)
        cyc.add(e)
        fundamentals.append(frozenset(cyc))
    k = len(fundamentals)
    if (1 << k) - 1 > limit:
        raise InvalidArgument(f"cycle space too large: 2^{k} circuits")
    for mask in range(1, 1 << k):
        acc: set = set()
        for i in range(k):
            if mask >> i & 1:
                acc ^= fundamentals[i]
        if acc:
            yield frozenset(acc)


def find_chordless_b_odd_circuit(graph: IncidenceGraph,
                                 budget: Optional[int] = None):
    """First chordless b-odd circuit in canonical search order.

    Returns (circuit, "found"), (None, "none") on exhaustive absence, or
    (None, "inconclusive") when the budget ran out.
    """
    for cyc in enumerate_chordless_cycles(graph, budget=budget):
        if cyc is None:
            return None, "inconclusive"
        if sum(graph.weights[e] for e in cyc) % 4 == 2:
            return cyc, "found"
    return None, "none"


# -- total unimodularity ----------------------------------------------------

def det_int(mat: list) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass
class TUVerdict:
    status: Optional[bool]         # True / False / None (inconclusive)
    strategy: str
    witness: object = None         # offending submatrix or b-odd circuit
    budget_used: Optional[int] = None

    def __bool__(self):
        if self.status is None:
            raise ValueError("inconclusive verdict has no truth value")
        return self.status

    def to_json(self) -> dict:
        w = self.witness
        if isinstance(w, frozenset):
            w = sorted([{"q": list(r), "p": list(c), "w": 0} for (r, c) in w],
                       key=lambda d: (d["q"], d["p"]))
        elif isinstance(w, dict):
            w = {k: (list(map(list, v)) if isinstance(v, tuple) else v)
                 for k, v in w.items()}
        return {"status": self.status, "strategy": self.strategy, "witness": w}


MAX_DET_ORDER = 8


def _tu_by_determinants(rows, cols, entries) -> TUVerdict:
    m, n = len(rows), len(cols)
    for i in range(m):
        for j in range(n):
            if entries[i][j] not in (-1, 0, 1):
                return TUVerdict(False, "determinant",
                                 witness={"rows": (rows[i],), "cols": (cols[j],),
                                          "det": entries[i][j]})
    cap = min(MAX_DET_ORDER, m, n)
    checked = 0
    for k in range(2, cap + 1):
        for ri in itertools.combinations(range(m), k):
            sub = [entries[i] for i in ri]
            for cj in itertools.combinations(range(n), k):
                d = det_int([[row[j] for j in cj] for row in sub])
                checked += 1
                if abs(d) >= 2:
                    return TUVerdict(False, "determinant",
                                     witness={"rows": tuple(rows[i] for i in ri),
                                              "cols": tuple(cols[j] for j in cj),
                                              "det": d},
                                     budget_used=checked)
    if min(m, n) > MAX_DET_ORDER:
        return TUVerdict(None, "determinant", budget_used=checked)
    return TUVerdict(True, "determinant", budget_used=checked)


def is_totally_unimodular(matrix: Union[IntegerMatrix, IncidenceGraph, list],
                          strategy: str = "circuit",
                          budget: Optional[int] = None) -> TUVerdict:
    """Decide total unimodularity of a 0/+-1 matrix.

    strategy="determinant" enumerates square submatrices up to order 8 and
    returns an offending submatrix as witness; strategy="circuit" searches the
    bipartite graph representation for a chordless b-odd circuit.
    """
    if isinstance(matrix, IncidenceGraph):
        graph = matrix
        rows, cols, entries = graph.rows, graph.cols, graph.adjacency_entries()
    else:
        if isinstance(matrix, IntegerMatrix):
            rows, cols, entries = matrix.rows, matrix.cols, matrix.entries
        else:
            entries = matrix
            rows = tuple(("r", i) for i in range(len(entries)))
            cols = tuple(("c", j) for j in
                         range(len(entries[0]) if entries else 0))
        graph = None
    if strategy == "determinant":
        return _tu_by_determinants(rows, cols, entries)
    if strategy != "circuit":
        raise InvalidArgument(f"unknown strategy {strategy!r}")
    for i, row in enumerate(entries):
        for j, v in enumerate(row):
            if v not in (-1, 0, 1):
                return TUVerdict(False, "circuit",
                                 witness={"rows": (rows[i],), "cols": (cols[j],),
                                          "det": v})
    if graph is None:
        graph = IncidenceGraph.from_matrix(
            IntegerMatrix(rows=rows, cols=cols, entries=entries))
    circuit, state = find_chordless_b_odd_circuit(graph, budget=budget)
    if state == "found":
        return TUVerdict(False, "circuit", witness=circuit)
    if state == "inconclusive":
        return TUVerdict(None, "circuit")
    return TUVerdict(True, "circuit")


# -- dual classification under a contraction --------------------------------

MIRROR_EDGE = "mirror-edge"
MIRROR_CONNECTION = "mirror-connection"
COLLAPSING_EDGE = "collapsing-edge"
PLAIN = "plain"


@dataclass
class DualClassification:
    vertex_tags: dict              # simplex -> SimplexFate
    edge_tags: dict                # (tau, sigma) -> (kind, partner or None)


def _mirror_image(contraction: EdgeContraction, simplex):
    """Partner of a simplex under the a<->b swap; identity off a and b."""
    fate = contraction.classification[simplex]
    if fate.kind == MIRROR:
        return fate.partner
    return simplex


def classify_duals(contraction: EdgeContraction,
                   graph: IncidenceGraph) -> DualClassification:
    """Tag the dual vertices and edges of G_{p+1}(source) by how the
    contraction treats the underlying simplices."""
    cls = contraction.classification
    for v in graph.vertices:
        if v not in cls:
            raise InvalidArgument(f"graph vertex {v} is not a source simplex")
    vertex_tags = {v: cls[v] for v in graph.vertices}
    edge_tags = {}
    for (tau, sigma) in graph.weights:
        ft, fs = cls[tau], cls[sigma]
        if fs.kind == COLLAPSING and ft.kind == COLLAPSING:
            edge_tags[(tau, sigma)] = (COLLAPSING_EDGE, None)
        elif fs.kind == COLLAPSING and ft.kind == MIRROR:
            edge_tags[(tau, sigma)] = (MIRROR_CONNECTION, (ft.partner, sigma))
        elif fs.kind == MIRROR:
            # the common injective face pairs with itself
            edge_tags[(tau, sigma)] = (
                MIRROR_EDGE, (_mirror_image(contraction, tau), fs.partner))
        else:
            edge_tags[(tau, sigma)] = (PLAIN, None)
    return DualClassification(vertex_tags=vertex_tags, edge_tags=edge_tags)


def _graph_dim(circuit) -> int:
    """p of the G_{p+1} graph a circuit lives in, from its column labels."""
    for (tau, sigma) in circuit:
        return len(tau) - 1
    raise InvalidArgument("empty circuit has no dimension")


def map_circuit_f(contraction: EdgeContraction, circuit) -> Circuit:
    """Image of a circuit of G_{p+1}(source) in G_{p+1}(target).

    Mirror connections collapse to a vertex; every other edge maps through the
    contraction.  The circuit must avoid collapsing p-vertices and mirror
    (p+1)-vertex pairs.
    """
    cls = contraction.classification
    taus = {tau for (tau, _) in circuit}
    sigmas = {sigma for (_, sigma) in circuit}
    for tau in taus:
        if cls[tau].kind == COLLAPSING:
            raise CircuitDomainError(
                f"circuit contains collapsing p-vertex {tau}")
    for sigma in sigmas:
        fate = cls[sigma]
        if fate.kind == MIRROR and fate.partner in sigmas:
            raise CircuitDomainError(
                f"circuit contains mirror (p+1)-vertex pair "
                f"{sigma}, {fate.partner}")
    image = set()
    for (tau, sigma) in circuit:
        if cls[sigma].kind == COLLAPSING:
            continue                      # mirror connection -> vertex
        e = (contraction.simplex_map[tau], contraction.simplex_map[sigma])
        if e in image:
            raise InvalidArgument(f"unexpected edge collision on {e}")
        image.add(e)
    degrees = {}
    for e in image:
        for v in e:
            degrees[v] = degrees.get(v, 0) + 1
    if any(d % 2 for d in degrees.values()):
        raise InvalidArgument("image is not a circuit")
    return frozenset(image)


def construct_preimage_circuit(contraction: EdgeContraction,
                               target_circuit) -> Circuit:
    """Build a domain circuit whose image equals the given target circuit.

    Starts from the full preimage subgraph and repairs it in four passes:
    drop collapsing edges, push mirror edges to the surviving side, then
    toggle mirror connections and single edges until all degrees are even.
    """
    if not target_circuit:
        return frozenset()
    p = _graph_dim(target_circuit)
    a, b = contraction.a, contraction.b
    src = contraction.source
    if not src.satisfies_p_link(tuple(sorted((a, b))), p):
        raise PreconditionError(
            f"edge ({a},{b}) does not satisfy the {p}-link condition")
    cls = contraction.classification
    gmap = contraction.simplex_map
    target_edges = set(target_circuit)

    # full preimage, collapsing edges already left out (Step I)
    S = set()
    for sigma in src.p_simplices(p + 1):
        if cls[sigma].kind == COLLAPSING:
            continue
        for k in range(len(sigma)):
            tau = sigma[:k] + sigma[k + 1:]
            if cls[tau].kind == COLLAPSING:
                continue
            if (gmap[tau], gmap[sigma]) in target_edges:
                S.add((tau, sigma))

    # Step II: push mirror edges whose (p+1)-simplex adjoins b to the a side
    for (tau, sigma) in sorted(S):
        if cls[sigma].kind == MIRROR and b in sigma:
            mirror = (_mirror_image(contraction, tau), cls[sigma].partner)
            S.discard((tau, sigma))
            if mirror not in S:
                S.add(mirror)

    def degrees():
        out = {}
        for e in S:
            for v in e:
                out[v] = out.get(v, 0) + 1
        return out

    # Step III: for odd mirror p-vertex pairs, toggle their mirror connection
    deg = degrees()
    odd_taus = sorted(v for v, d in deg.items()
                      if d % 2 and len(v) == p + 1 and cls[v].kind == MIRROR)
    for tau1 in odd_taus:
        tau2 = cls[tau1].partner
        if tau1 > tau2 or deg.get(tau2, 0) % 2 == 0:
            continue
        sigma = tuple(sorted(set(tau1) | set(tau2)))
        if sigma not in src.simplices:
            raise PreconditionError(
                f"mirror connection coface {sigma} missing from source")
        for e in ((tau1, sigma), (tau2, sigma)):
            if e in S:
                S.discard(e)
            else:
                S.add(e)

    # Step IV: pair any remaining odd vertices across a shared single edge
    deg = degrees()
    for sigma in sorted(v for v, d in deg.items()
                        if d % 2 and len(v) == p + 2):
        for k in range(len(sigma)):
            tau = sigma[:k] + sigma[k + 1:]
            if deg.get(tau, 0) % 2 and cls[tau].kind != COLLAPSING:
                e = (tau, sigma)
                if e in S:
                    S.discard(e)
                else:
                    S.add(e)
                deg = degrees()
                break

    deg = degrees()
    if any(d % 2 for d in deg.values()):
        raise InvalidArgument("preimage construction left odd degrees")
    circuit = frozenset(S)
    if map_circuit_f(contraction, circuit) != frozenset(target_edges):
        raise InvalidArgument("preimage circuit does not map onto the target")
    return circuit
