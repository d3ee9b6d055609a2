"""Coxeter diagrams of hyperbolic polyhedra.

A diagram has one node per mirror.  Bonds encode dihedral angles through the
normalized squared inner product g2 = B(r,s)^2 / (Q(r) Q(s)):

    g2 = 0    no bond      angle pi/2
    g2 = 1/4  bond 3       angle pi/3
    g2 = 1/2  bond 4       angle pi/4
    g2 = 3/4  bond 6       angle pi/6
    g2 = 1    bond inf     parallel at infinity (heavy)
    g2 > 1    dashed       ultraparallel mirrors

Any other rational value in (0, 1) is not realizable by reflections of an
integral lattice and is rejected.  Hand-built diagrams may carry general
finite bond orders m >= 3 (dihedral angle pi/m), which is how triangle-group
test diagrams are written.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial


class NonCrystallographicAngleError(ValueError):
    """Two mirrors meet at an angle no reflection lattice can realize."""


@dataclass(frozen=True)
class BondLabel:
    kind: str  # "m" (finite order), "inf", "dashed"
    m: int | None = None
    weight: Fraction | None = None  # exact g2 for dashed bonds

    @classmethod
    def finite(cls, m: int) -> "BondLabel":
        if m < 3:
            raise ValueError("finite bond orders start at 3")
        return cls("m", m=int(m))

    @classmethod
    def infinity(cls) -> "BondLabel":
        return cls("inf")

    @classmethod
    def dashed(cls, weight) -> "BondLabel":
        weight = Fraction(weight)
        if weight <= 1:
            raise ValueError("dashed bonds carry a weight greater than 1")
        return cls("dashed", weight=weight)

    def display(self) -> str:
        if self.kind == "m":
            return str(self.m) if self.m in (3, 4, 6) else f"m:{self.m}"
        if self.kind == "inf":
            return "inf"
        w = self.weight
        return f"dashed:{w.numerator}/{w.denominator}"


_G2_TO_BOND = {
    Fraction(1, 4): 3,
    Fraction(1, 2): 4,
    Fraction(3, 4): 6,
}


def label_from_g2(g2: Fraction, context: str = "") -> BondLabel | None:
    """Bond label for an exact normalized squared inner product; None means no bond."""
    g2 = Fraction(g2)
    if g2 == 0:
        return None
    if g2 in _G2_TO_BOND:
        return BondLabel.finite(_G2_TO_BOND[g2])
    if g2 == 1:
        return BondLabel.infinity()
    if g2 > 1:
        return BondLabel.dashed(g2)
    raise NonCrystallographicAngleError(
        f"normalized squared inner product {g2} is not crystallographic{context}"
    )


class CoxeterDiagram:
    """Immutable labeled graph: node norms plus bond labels, optionally with exact g2 data."""

    def __init__(self, norms, bonds, g2=None):
        self.norms = tuple(int(k) for k in norms)
        self.node_count = len(self.norms)
        clean = {}
        for (i, j), label in bonds.items():
            if i == j:
                raise ValueError("no self-bonds")
            key = (min(i, j), max(i, j))
            if key[1] >= self.node_count or key[0] < 0:
                raise ValueError("bond endpoint out of range")
            clean[key] = label
        self.bonds = {k: clean[k] for k in sorted(clean)}
        self.g2_table = None
        if g2 is not None:
            self.g2_table = {
                (min(i, j), max(i, j)): Fraction(v) for (i, j), v in g2.items()
            }
        self._class_cache: dict[int, SubdiagramClass] = {}

    @classmethod
    def from_bond_spec(cls, norms, bonds) -> "CoxeterDiagram":
        """Hand-built diagram; bond values may be 3/4/6/any int >= 3, 'inf', or a Fraction > 1."""
        labels = {}
        for pair, value in bonds.items():
            if isinstance(value, BondLabel):
                labels[pair] = value
            elif value == "inf":
                labels[pair] = BondLabel.infinity()
            elif isinstance(value, Fraction):
                labels[pair] = BondLabel.dashed(value)
            else:
                m = int(value)
                if m == 2:
                    continue  # angle pi/2: no bond
                labels[pair] = BondLabel.finite(m)
        return cls(norms, labels)

    def bond(self, i: int, j: int) -> BondLabel | None:
        return self.bonds.get((min(i, j), max(i, j)))

    def g2(self, i: int, j: int) -> Fraction | None:
        if self.g2_table is None:
            return None
        return self.g2_table.get((min(i, j), max(i, j)), Fraction(0))

    def neighbors(self, i: int) -> list[int]:
        out = []
        for (a, b) in self.bonds:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return sorted(out)

    # -- classification ------------------------------------------------

    def classify_mask(self, mask: int) -> "SubdiagramClass":
        got = self._class_cache.get(mask)
        if got is None:
            nodes = [i for i in range(self.node_count) if mask >> i & 1]
            got = classify_subdiagram(self, nodes)
            self._class_cache[mask] = got
        return got

    # -- serialization ---------------------------------------------------

    def to_text(self) -> str:
        lines = [f"node {i} norm={k}" for i, k in enumerate(self.norms)]
        for (i, j), label in self.bonds.items():
            lines.append(f"bond {i} {j} {label.display()}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "CoxeterDiagram":
        norms: dict[int, int] = {}
        bonds: dict[tuple[int, int], BondLabel] = {}
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "node":
                if len(parts) != 3 or not parts[2].startswith("norm="):
                    raise ValueError(f"bad node line: {raw!r}")
                norms[int(parts[1])] = int(parts[2][len("norm="):])
            elif parts[0] == "bond":
                if len(parts) != 4:
                    raise ValueError(f"bad bond line: {raw!r}")
                i, j, tok = int(parts[1]), int(parts[2]), parts[3]
                if tok == "inf":
                    label = BondLabel.infinity()
                elif tok.startswith("dashed:"):
                    num, _, den = tok[len("dashed:"):].partition("/")
                    label = BondLabel.dashed(Fraction(int(num), int(den or "1")))
                elif tok.startswith("m:"):
                    label = BondLabel.finite(int(tok[2:]))
                else:
                    label = BondLabel.finite(int(tok))
                bonds[(i, j)] = label
            else:
                raise ValueError(f"unrecognized diagram line: {raw!r}")
        if sorted(norms) != list(range(len(norms))):
            raise ValueError("node indices must be 0..n-1")
        return cls([norms[i] for i in range(len(norms))], bonds)

    def to_dot(self, name: str = "coxeter") -> str:
        """Graphviz rendering: bond order as edge label, dashed/heavy styles."""
        lines = [f"graph {name} {{"]
        for i, k in enumerate(self.norms):
            lines.append(f'  n{i} [label="{i} (norm {k})"];')
        for (i, j), label in self.bonds.items():
            if label.kind == "inf":
                attrs = 'label="inf", style=bold'
            elif label.kind == "dashed":
                w = label.weight
                attrs = f'label="{w.numerator}/{w.denominator}", style=dashed'
            else:
                attrs = f'label="{label.m}"'
            lines.append(f"  n{i} -- n{j} [{attrs}];")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"CoxeterDiagram(nodes={self.node_count}, bonds={len(self.bonds)})"


def build_diagram(roots, form) -> CoxeterDiagram:
    """Diagram of a set of pairwise non-acute roots, with the exact g2 table attached."""
    vectors = [r.vector for r in roots]
    norms = [r.norm for r in roots]
    bonds = {}
    g2 = {}
    n = len(vectors)
    for i in range(n):
        for j in range(i + 1, n):
            b = form.bilinear(vectors[i], vectors[j])
            if b > 0:
                raise ValueError(
                    f"roots {i} and {j} have positive inner product {b}; not a chamber"
                )
            value = Fraction(b * b, norms[i] * norms[j])
            g2[(i, j)] = value
            label = label_from_g2(value, context=f" (roots {i}, {j})")
            if label is not None:
                bonds[(i, j)] = label
    return CoxeterDiagram(norms, bonds, g2=g2)


# -- finite and affine catalogs ------------------------------------------

Component = tuple[str, int]  # (family, parameter), e.g. ("A", 3), ("C~", 2), ("I2", 7)

_FINITE_FAMILIES = {"A", "B", "D", "E", "F", "G", "H", "I2"}
_AFFINE_FAMILIES = {"A~", "B~", "C~", "D~", "E~", "F~", "G~"}


def component_symbol(comp: Component) -> str:
    family, n = comp
    if family == "I2":
        return f"I2({n})"
    return f"{family}{n}"


def _classify_path(seq: list[int], n: int) -> Component:
    """Classify a path component from its edge label sequence (length n-1)."""
    if all(m == 3 for m in seq):
        return ("A", n)
    if n == 2:
        m = seq[0]
        if m == 4:
            return ("B", 2)
        if m == 6:
            return ("G", 2)
        return ("I2", m)
    big = [m for m in seq if m != 3]
    if len(big) == 1 and big[0] == 4:
        if seq[0] == 4 or seq[-1] == 4:
            return ("B", n)
        if n == 4 and seq[1] == 4:
            return ("F", 4)
        if n == 5 and (seq[1] == 4 or seq[2] == 4):
            return ("F~", 4)
        return ("other", n)
    if seq[0] == 4 and seq[-1] == 4 and all(m == 3 for m in seq[1:-1]):
        return ("C~", n - 1)
    if len(big) == 1 and big[0] == 5 and (seq[0] == 5 or seq[-1] == 5):
        if n == 3:
            return ("H", 3)
        if n == 4:
            return ("H", 4)
        return ("other", n)
    if len(big) == 1 and big[0] == 6 and n == 3 and (seq[0] == 6 or seq[-1] == 6):
        return ("G~", 2)
    return ("other", n)


def _classify_tree_with_branch(nodes, adj, labels, n: int) -> Component:
    """Classify a connected tree that has at least one node of degree >= 3."""
    branch = [v for v in nodes if len(adj[v]) >= 3]
    if len(branch) == 1:
        center = branch[0]
        deg = len(adj[center])
        # walk each arm away from the center
        arms = []
        for first in adj[center]:
            length = 1
            prev, cur = center, first
            arm_labels = [labels[(min(prev, cur), max(prev, cur))]]
            while len(adj[cur]) == 2:
                nxt = next(v for v in adj[cur] if v != prev)
                arm_labels.append(labels[(min(cur, nxt), max(cur, nxt))])
                prev, cur = cur, nxt
                length += 1
            if len(adj[cur]) > 2:
                return ("other", n)  # second branch point handled elsewhere
            arms.append((length, arm_labels))
        if deg == 4:
            if all(l == 1 for l, _ in arms) and all(
                lab == [3] for _, lab in arms
            ):
                return ("D~", 4)
            return ("other", n)
        if deg != 3:
            return ("other", n)
        lengths = sorted(l for l, _ in arms)
        all_labels = [m for _, lab in arms for m in lab]
        if all(m == 3 for m in all_labels):
            if lengths[0] == 1 and lengths[1] == 1:
                return ("D", n)
            if lengths == [1, 2, 2]:
                return ("E", 6)
            if lengths == [1, 2, 3]:
                return ("E", 7)
            if lengths == [1, 2, 4]:
                return ("E", 8)
            if lengths == [2, 2, 2]:
                return ("E~", 6)
            if lengths == [1, 3, 3]:
                return ("E~", 7)
            if lengths == [1, 2, 5]:
                return ("E~", 8)
            return ("other", n)
        if sorted(all_labels, reverse=True)[0] == 4 and all_labels.count(4) == 1:
            # fork of two single-bond arms of length 1, long arm ending in the 4
            short = [a for a in arms if a[0] == 1 and a[1] == [3]]
            long = [a for a in arms if a not in short]
            if len(short) >= 2 and len(long) == 1:
                length, lab = long[0]
                if all(m == 3 for m in lab[:-1]) and lab[-1] == 4:
                    return ("B~", n - 1)
            # B~3 degenerate case: three arms of length 1, one labeled 4
            if lengths == [1, 1, 1] and sorted(all_labels) == [3, 3, 4]:
                return ("B~", 3)
        return ("other", n)
    if len(branch) == 2 and all(len(adj[v]) == 3 for v in branch):
        # candidate D~n: all labels 3, each branch node carries two length-1 arms
        if any(m != 3 for m in labels.values()):
            return ("other", n)
        for v in branch:
            leaf_arms = [u for u in adj[v] if len(adj[u]) == 1]
            if len(leaf_arms) != 2:
                return ("other", n)
        return ("D~", n - 1)
    return ("other", n)


def _classify_component(nodes, adj, labels) -> Component:
    """Classify one connected component against the finite and affine catalogs.

    labels maps sorted node pairs to an int bond order, "inf", or "dashed".
    Returns ("other", size) when the component matches neither catalog.
    """
    n = len(nodes)
    if any(v == "dashed" for v in labels.values()):
        return ("other", n)
    if any(v == "inf" for v in labels.values()):
        if n == 2 and len(labels) == 1:
            return ("A~", 1)
        return ("other", n)
    if n == 1:
        return ("A", 1)
    edge_count = len(labels)
    if edge_count >= n:
        # a connected component with a cycle; only the all-3 simple cycle is affine
        if edge_count == n and all(len(adj[v]) == 2 for v in nodes) and all(
            m == 3 for m in labels.values()
        ):
            return ("A~", n - 1)
        return ("other", n)
    # tree
    if all(len(adj[v]) <= 2 for v in nodes):
        ends = [v for v in nodes if len(adj[v]) == 1]
        start = min(ends)
        seq = []
        prev, cur = None, start
        while True:
            nxt = [v for v in adj[cur] if v != prev]
            if not nxt:
                break
            seq.append(labels[(min(cur, nxt[0]), max(cur, nxt[0]))])
            prev, cur = cur, nxt[0]
        return _classify_path(seq, n)
    return _classify_tree_with_branch(nodes, adj, labels, n)


@dataclass(frozen=True)
class SubdiagramClass:
    """A node subset classified as elliptic, parabolic or other."""

    kind: str  # "elliptic" | "parabolic" | "other"
    components: tuple[Component, ...]
    rank: int | None

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(component_symbol(c) for c in self.components)


def classify_subdiagram(diagram: CoxeterDiagram, nodes) -> SubdiagramClass:
    """Split the induced subdiagram into components and match each against the catalogs.

    elliptic: every component is a finite Coxeter diagram (rank = node count);
    parabolic: every component is affine (rank = node count - component count);
    other: anything else, in particular any subset containing a dashed bond.
    """
    nodes = sorted(set(nodes))
    node_set = set(nodes)
    adj = {v: [] for v in nodes}
    labels = {}
    for (i, j), label in diagram.bonds.items():
        if i in node_set and j in node_set:
            adj[i].append(j)
            adj[j].append(i)
            if label.kind == "m":
                labels[(i, j)] = label.m
            else:
                labels[(i, j)] = label.kind
    comps = []
    seen = set()
    for v in nodes:
        if v in seen:
            continue
        queue, comp = [v], []
        seen.add(v)
        while queue:
            u = queue.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        comp = sorted(comp)
        comp_labels = {
            (i, j): labels[(i, j)]
            for (i, j) in labels
            if i in comp and j in comp
        }
        comps.append(_classify_component(comp, adj, comp_labels))
    comps.sort()
    families = [c[0] for c in comps]
    if all(f in _FINITE_FAMILIES for f in families):
        return SubdiagramClass("elliptic", tuple(comps), len(nodes))
    if comps and all(f in _AFFINE_FAMILIES for f in families):
        return SubdiagramClass("parabolic", tuple(comps), len(nodes) - len(comps))
    return SubdiagramClass("other", tuple(comps), None)


@lru_cache(maxsize=None)
def _finite_order(family: str, n: int) -> int:
    if family == "A":
        return factorial(n + 1)
    if family == "B":
        return 2**n * factorial(n)
    if family == "D":
        return 2 ** (n - 1) * factorial(n)
    if family == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[n]
    if family == "F":
        return 1152
    if family == "G":
        return 12
    if family == "H":
        return {3: 120, 4: 14400}[n]
    if family == "I2":
        return 2 * n
    raise ValueError(f"not a finite family: {family}")


def finite_group_order(sub: SubdiagramClass) -> int:
    """Order of the finite Coxeter group of an elliptic subdiagram (product over components)."""
    if sub.kind != "elliptic":
        raise ValueError(f"subdiagram is {sub.kind}, not elliptic")
    order = 1
    for family, n in sub.components:
        order *= _finite_order(family, n)
    return order


def finite_volume_check(diagram: CoxeterDiagram, n: int) -> bool:
    """Vinberg's termination test for a Coxeter polyhedron in hyperbolic n-space.

    (a) some vertex exists: an elliptic subdiagram of rank n or a parabolic
        subdiagram of rank n-1;
    (b) every elliptic subdiagram of rank n-1 extends in exactly two ways to
        an elliptic subdiagram of rank n or a parabolic subdiagram of rank
        n-1, i.e. every edge of the polyhedron joins two (possibly ideal)
        vertices.
    """
    size = diagram.node_count
    elliptic_full = []
    parabolic_cusps = []
    elliptic_edges = []
    for mask in range(1, 1 << size):
        sub = diagram.classify_mask(mask)
        if sub.kind == "elliptic":
            if sub.rank == n:
                elliptic_full.append(mask)
            elif sub.rank == n - 1:
                elliptic_edges.append(mask)
        elif sub.kind == "parabolic" and sub.rank == n - 1:
            parabolic_cusps.append(mask)
    if not elliptic_full and not parabolic_cusps:
        return False
    for edge in elliptic_edges:
        count = sum(1 for v in elliptic_full if v & edge == edge)
        count += sum(1 for c in parabolic_cusps if c & edge == edge)
        if count != 2:
            return False
    return True


def diagram_automorphism_order(diagram: CoxeterDiagram) -> int:
    """Number of node permutations preserving norms and exact bond data.

    Bond equality includes dashed weights, so an automorphism preserves the
    full table of normalized inner products, which is what a lattice isometry
    inducing the symmetry must do.
    """
    size = diagram.node_count
    if size == 0:
        return 1

    def bond_key(i, j):
        label = diagram.bond(i, j)
        if label is None:
            return None
        return (label.kind, label.m, label.weight)

    def node_key(i):
        incident = sorted(
            (bond_key(i, j) or ("none", None, None)) for j in range(size) if j != i
        )
        return (diagram.norms[i], tuple(incident))

    keys = [node_key(i) for i in range(size)]
    candidates = [
        [j for j in range(size) if keys[j] == keys[i]] for i in range(size)
    ]
    count = 0
    image = [-1] * size
    used = [False] * size

    def extend(i):
        nonlocal count
        if i == size:
            count += 1
            return
        for j in candidates[i]:
            if used[j]:
                continue
            ok = all(
                bond_key(i, t) == bond_key(j, image[t]) for t in range(i)
            )
            if ok:
                used[j] = True
                image[i] = j
                extend(i + 1)
                used[j] = False
                image[i] = -1

    extend(0)
    return count
