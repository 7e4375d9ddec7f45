"""Root systems of the simple Lie algebras, in exact integer arithmetic.

Node numbering follows Bourbaki throughout:

* ``A_n``: chain ``1 - 2 - ... - n``.
* ``B_n``: chain, node ``n`` short.   ``C_n``: chain, node ``n`` long.
* ``D_n``: chain ``1 - ... - (n-2)``, nodes ``n-1`` and ``n`` both attached
  to ``n-2``.
* ``E_n``: chain ``1 - 3 - 4 - ... - n``, node ``2`` attached to ``4``.
* ``F_4``: ``1 - 2 => 3 - 4`` with ``1, 2`` long.
* ``G_2``: ``1 <= 2`` with ``1`` short, ``2`` long.

Roots are integer tuples of coordinates in the simple-root basis.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

LEGAL_RANKS = {"A": 1, "B": 2, "C": 3, "D": 4}
EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SimpleType:
    """A simple type such as ``A3`` or ``E8``; ranges are validated."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family in LEGAL_RANKS:
            if self.rank < LEGAL_RANKS[self.family]:
                raise RootSystemError(f"illegal rank {self.rank} for family {self.family}")
        elif self.family in EXCEPTIONAL_RANKS:
            if self.rank not in EXCEPTIONAL_RANKS[self.family]:
                raise RootSystemError(f"illegal rank {self.rank} for family {self.family}")
        else:
            raise RootSystemError(f"unknown family {self.family!r}")

    @property
    def dimension(self) -> int:
        n = self.rank
        if self.family == "A":
            return n * n + 2 * n
        if self.family in "BC":
            return n * (2 * n + 1)
        if self.family == "D":
            return n * (2 * n - 1)
        return {("G", 2): 14, ("F", 4): 52, ("E", 6): 78, ("E", 7): 133, ("E", 8): 248}[
            (self.family, n)
        ]

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True, order=True)
class Factor:
    """One simple factor of a semisimple type, with an optional root-length tag.

    The tag (``"short"``/``"long"``) is set when the factor sits inside a
    non-simply-laced algebra and all of its roots have one length.
    """

    type: SimpleType
    tag: str = ""

    def untagged(self) -> Factor:
        return Factor(self.type)


@dataclass(frozen=True)
class SemisimpleType:
    """A multiset of simple factors, stored in canonical sorted order."""

    factors: tuple[Factor, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(sorted(self.factors)))

    @property
    def dimension(self) -> int:
        return sum(f.type.dimension for f in self.factors)

    @property
    def rank(self) -> int:
        return sum(f.type.rank for f in self.factors)

    @property
    def tagged(self) -> bool:
        return any(f.tag for f in self.factors)

    def untagged(self) -> SemisimpleType:
        return SemisimpleType(tuple(f.untagged() for f in self.factors))

    def __mul__(self, other: SemisimpleType) -> SemisimpleType:
        return SemisimpleType(self.factors + other.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "0"
        return "x".join(str(f.type) + (f"^{f.tag}" if f.tag else "") for f in self.factors)


TRIVIAL = SemisimpleType()


def semisimple(family: str, rank: int, tag: str = "") -> SemisimpleType:
    """Build a one-factor semisimple type, canonicalising low-rank coincidences.

    ``A0, B0, C0, D0, D1`` are trivial (``D1 = SO_2`` is a torus); ``B1 = C1 = A1``;
    ``C2 = B2``; ``D2 = A1 x A1``; ``D3 = A3``.
    """
    if rank <= 0 or (family == "D" and rank == 1):
        return TRIVIAL
    if family in "BC" and rank == 1:
        return SemisimpleType((Factor(SimpleType("A", 1), tag),))
    if family == "C" and rank == 2:
        return SemisimpleType((Factor(SimpleType("B", 2), tag),))
    if family == "D" and rank == 2:
        a1 = Factor(SimpleType("A", 1), tag)
        return SemisimpleType((a1, a1))
    if family == "D" and rank == 3:
        return SemisimpleType((Factor(SimpleType("A", 3), tag),))
    return SemisimpleType((Factor(SimpleType(family, rank), tag),))


def canonical_simple(family: str, rank: int) -> SimpleType:
    """The canonical simple type for a possibly low-rank label (e.g. ``D3 -> A3``)."""
    t = semisimple(family, rank)
    if len(t.factors) != 1:
        raise RootSystemError(f"{family}{rank} is not simple")
    return t.factors[0].type


# --------------------------------------------------------------------------
# Gram matrices of simple roots, (alpha_i, alpha_j), integer-scaled.


def _chain(n: int, diag: list[int], bonds: dict[tuple[int, int], int]) -> list[list[int]]:
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = diag[i]
    for (i, j), v in bonds.items():
        g[i][j] = g[j][i] = v
    return g


def gram_matrix(t: SimpleType | tuple[str, int]) -> list[list[int]]:
    """Gram matrix for a simple type, or for a raw ``(family, rank)`` label
    (low-rank aliases such as ``B1`` or ``D2`` included)."""
    f, n = (t.family, t.rank) if isinstance(t, SimpleType) else t
    if f == "A":
        return _chain(n, [2] * n, {(i, i + 1): -1 for i in range(n - 1)})
    if f == "B":
        return _chain(n, [4] * (n - 1) + [2], {(i, i + 1): -2 for i in range(n - 1)})
    if f == "C":
        bonds = {(i, i + 1): -1 for i in range(n - 2)}
        if n >= 2:
            bonds[(n - 2, n - 1)] = -2
        return _chain(n, [2] * (n - 1) + [4], bonds)
    if f == "D":
        bonds = {(i, i + 1): -1 for i in range(n - 2)}
        if n >= 3:
            bonds[(n - 3, n - 1)] = -1
        return _chain(n, [2] * n, bonds)
    if f == "E":
        bonds = {(0, 2): -1, (1, 3): -1}
        bonds.update({(i, i + 1): -1 for i in range(2, n - 1)})
        return _chain(n, [2] * n, bonds)
    if f == "F":
        return _chain(4, [4, 4, 2, 2], {(0, 1): -2, (1, 2): -2, (2, 3): -1})
    if f == "G":
        return _chain(2, [2, 6], {(0, 1): -3})
    raise RootSystemError(f"unknown family {f!r}")


def cartan_matrix(t: SimpleType) -> list[list[int]]:
    """``A[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)``."""
    g = gram_matrix(t)
    n = t.rank
    return [[2 * g[i][j] // g[j][j] for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class RootSystem:
    type: SimpleType
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    highest_root: tuple[int, ...]
    marks: tuple[int, ...]
    gram: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    def node_lengths(self) -> tuple[str, ...]:
        """``"short"``/``"long"`` per node for non-simply-laced types, else ``""``."""
        diag = [self.gram[i][i] for i in range(self.rank)]
        if len(set(diag)) == 1:
            return ("",) * self.rank
        lo = min(diag)
        return tuple("short" if d == lo else "long" for d in diag)


def _pairing(root: tuple[int, ...], i: int, gram: list[list[int]]) -> int:
    """``<root, alpha_i^vee>``."""
    s = sum(c * gram[j][i] for j, c in enumerate(root) if c)
    return 2 * s // gram[i][i]


def root_closure(gram: list[list[int]], seed: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Close a set of positive roots under simple-root strings.

    ``beta + alpha_i`` is a root iff ``p - <beta, alpha_i^vee> >= 1`` where
    ``p`` is the length of the downward ``alpha_i``-string through ``beta``.
    Processing by height guarantees the downward string is already known.
    """
    n = len(gram)
    roots = set(seed)
    frontier = sorted(roots, key=lambda r: (sum(r), r))
    while frontier:
        nxt = set()
        for beta in frontier:
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - _pairing(beta, i, gram) >= 1:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        nxt.add(up)
        roots |= nxt
        frontier = sorted(nxt, key=lambda r: (sum(r), r))
    return sorted(roots, key=lambda r: (sum(r), r))


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType) -> RootSystem:
    gram = gram_matrix(t)
    n = t.rank
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = root_closure(gram, simple)
    top = max(sum(r) for r in roots)
    highest = [r for r in roots if sum(r) == top]
    if len(highest) != 1:
        raise RootSystemError(f"no unique highest root for {t}")
    mu = highest[0]
    return RootSystem(
        type=t,
        cartan=tuple(map(tuple, cartan_matrix(t))),
        positive_roots=tuple(roots),
        highest_root=mu,
        marks=mu,
        gram=tuple(map(tuple, gram)),
    )


def dynkin_marks(rs: RootSystem) -> tuple[int, ...]:
    mu = rs.highest_root
    if any(m < 1 for m in mu):
        raise RootSystemError("marks must be positive")
    for beta in rs.positive_roots:
        if any(b > m for b, m in zip(beta, mu)):
            raise RootSystemError(f"{beta} is not dominated by the highest root")
    return mu


# --------------------------------------------------------------------------
# Dynkin subdiagrams


def _components(nodes: list[int], gram) -> list[list[int]]:
    left = set(nodes)
    comps = []
    while left:
        start = min(left)
        stack, comp = [start], {start}
        left.discard(start)
        while stack:
            u = stack.pop()
            for v in list(left):
                if gram[u][v]:
                    left.discard(v)
                    comp.add(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def classify_component(nodes: list[int], gram) -> SimpleType:
    """Identify a connected Dynkin subdiagram from its Gram block."""
    k = len(nodes)
    if k == 1:
        return SimpleType("A", 1)
    lengths = {gram[i][i] for i in nodes}
    degree = {i: sum(1 for j in nodes if j != i and gram[i][j]) for i in nodes}
    if len(lengths) == 1:
        branch = [i for i in nodes if degree[i] == 3]
        if not branch:
            return SimpleType("A", k)
        centre = branch[0]
        arms = []
        for start in (j for j in nodes if j != centre and gram[centre][j]):
            length, prev, cur = 1, centre, start
            while True:
                nxt = [j for j in nodes if j not in (prev, cur) and gram[cur][j]]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[:2] == [1, 1]:
            return canonical_simple("D", k)
        if arms == [1, 2, 2]:
            return SimpleType("E", 6)
        if arms == [1, 2, 3]:
            return SimpleType("E", 7)
        if arms == [1, 2, 4]:
            return SimpleType("E", 8)
        raise RootSystemError(f"unrecognised branched diagram with arms {arms}")
    lo, hi = min(lengths), max(lengths)
    if hi == 3 * lo:
        return SimpleType("G", 2)
    if k == 4 and any(gram[i][i] == hi for i in nodes) and sum(1 for i in nodes if gram[i][i] == lo) == 2:
        return SimpleType("F", 4)
    n_short = sum(1 for i in nodes if gram[i][i] == lo)
    if n_short == 1:
        return canonical_simple("B", k)
    return canonical_simple("C", k)


def subdiagram_type(t: SimpleType, nodes: list[int]) -> SemisimpleType:
    """Semisimple type of the subdiagram on the given 0-based nodes."""
    rs = build_root_system(t)
    gram = rs.gram
    lengths = rs.node_lengths()
    factors = []
    for comp in _components(nodes, gram):
        st = classify_component(comp, gram)
        tags = {lengths[i] for i in comp}
        tag = tags.pop() if len(tags) == 1 else ""
        factors.append(Factor(st, tag))
    return SemisimpleType(tuple(factors))


def delete_vertex(t: SimpleType, node: int) -> SemisimpleType:
    """Type of the diagram with the (1-based) ``node`` removed."""
    if not 1 <= node <= t.rank:
        raise RootSystemError(f"node {node} out of range for {t}")
    return subdiagram_type(t, [i for i in range(t.rank) if i != node - 1])


def diagram_automorphisms(t: SimpleType) -> list[tuple[int, ...]]:
    """Node permutations (0-based images) preserving the Gram matrix."""
    n = t.rank
    if n > 8:
        raise RootSystemError("rank too large for brute-force automorphisms")
    gram = gram_matrix(t)
    if t.family in "BCFG" or (t.family == "E" and n != 6):
        return [tuple(range(n))]
    if t.family == "A":
        return [tuple(range(n)), tuple(reversed(range(n)))]
    if t.family == "E":
        return [tuple(range(6)), (5, 1, 4, 3, 2, 0)]
    # D_n: the swap of the two spin nodes, plus triality for D4.
    out = []
    for perm in permutations((0, 2, 3)) if n == 4 else [(n - 2, n - 1), (n - 1, n - 2)]:
        p = list(range(n))
        if n == 4:
            p[0], p[2], p[3] = perm
        else:
            p[n - 2], p[n - 1] = perm
        if all(gram[p[i]][p[j]] == gram[i][j] for i in range(n) for j in range(n)):
            out.append(tuple(p))
    return sorted(out)


def node_orbit_representatives(t: SimpleType) -> list[int]:
    """Smallest (1-based) node of each orbit of the diagram automorphism group."""
    reps = []
    seen = set()
    for i in range(t.rank):
        if i in seen:
            continue
        orbit = {p[i] for p in diagram_automorphisms(t)}
        seen |= orbit
        reps.append(min(orbit) + 1)
    return reps


# --------------------------------------------------------------------------
# Compact group names


def _factor_name(f: Factor, spin: bool) -> str:
    t = f.type
    n = t.rank
    if t.family == "A":
        base = f"SU_{n + 1}"
    elif t.family == "B":
        base = f"{'Spin' if spin else 'SO'}_{2 * n + 1}"
    elif t.family == "C":
        base = f"Sp_{n}"
    elif t.family == "D":
        base = f"{'Spin' if spin else 'SO'}_{2 * n}"
    else:
        base = f"{t.family}_{n}"
    return base + (f"^{f.tag}" if f.tag else "")


def compact_name(t: SemisimpleType | SimpleType, spin: bool = True) -> str:
    """Compact-group name, largest factor first (``SU_3 x SU_3 x SU_2``).

    ``spin`` picks ``Spin_n`` over ``SO_n`` for orthogonal factors.
    """
    if isinstance(t, SimpleType):
        t = SemisimpleType((Factor(t),))
    if not t.factors:
        return "{e}"
    ordered = sorted(t.factors, key=lambda f: (-f.type.dimension, f.type, f.tag))
    return " x ".join(_factor_name(f, spin) for f in ordered)


_NAME_RE = re.compile(r"^\s*(SU|SO|Spin|Sp|[A-G])_?\{?(\d+)\}?\s*$", re.IGNORECASE)


def parse_group(name: str) -> SemisimpleType:
    """Inverse of :func:`compact_name` for one factor, accepting ``A3``,
    ``SU4``, ``SU_4``, ``Spin10``, ``Spin_{10}``, ``SO7``, ``Sp3``, ``G2``..."""
    m = _NAME_RE.match(name)
    if not m:
        raise RootSystemError(f"cannot parse group name {name!r}")
    kind, k = m.group(1), int(m.group(2))
    low = kind.lower()
    if low == "su":
        return semisimple("A", k - 1)
    if low in ("so", "spin"):
        if k % 2:
            return semisimple("B", (k - 1) // 2)
        return semisimple("D", k // 2)
    if low == "sp":
        return semisimple("C", k)
    fam = kind.upper()
    if fam in LEGAL_RANKS:
        return semisimple(fam, k)
    SimpleType(fam, k)
    return semisimple(fam, k)


def parse_semisimple(name: str) -> SemisimpleType:
    """Product names such as ``SU_3^short x SU_2^long`` or ``{e}``.

    Torus factors (``SO_2``, ``U_1``, ``T^1``) contribute nothing.
    """
    name = name.strip()
    if name in ("", "{e}", "e", "0"):
        return TRIVIAL
    out = TRIVIAL
    for part in re.split(r"\s*(?:\bx\b|\u00d7|\*)\s*", name):
        base, _, tag = part.partition("^")
        if tag and tag not in ("short", "long"):
            raise RootSystemError(f"unknown tag {tag!r} in {name!r}")
        if re.fullmatch(r"\s*(T\^?1|U_?1)\s*", part):
            continue
        t = parse_group(base)
        if tag:
            t = SemisimpleType(tuple(Factor(f.type, tag) for f in t.factors))
        out = out * t
    return out


def parse_type(label: str) -> SemisimpleType:
    """Inverse of ``str(SemisimpleType)`` (``A1^longxA2^short``, ``0``)."""
    if label == "0":
        return TRIVIAL
    factors = []
    for fam, rank, tag in re.findall(r"([A-G])(\d+)(?:\^(short|long))?", label):
        factors.append(Factor(SimpleType(fam, int(rank)), tag))
    t = SemisimpleType(tuple(factors))
    if str(t) != label:
        raise RootSystemError(f"cannot parse type label {label!r}")
    return t


def parse_simple(name: str) -> SimpleType:
    t = parse_group(name)
    if len(t.factors) != 1:
        raise RootSystemError(f"{name!r} is not a simple group")
    return t.factors[0].type


def positive_root_count(family: str, rank: int) -> int:
    """Number of positive roots for a raw Cartan label, aliases allowed."""
    gram = gram_matrix((family, rank))
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    return len(root_closure(gram, simple))


def label_dimension(family: str, rank: int) -> int:
    """Classical dimension formula evaluated on a raw label (``D2 -> 6``)."""
    n = rank
    if family == "A":
        return n * n + 2 * n
    if family in "BC":
        return n * (2 * n + 1)
    if family == "D":
        return n * (2 * n - 1)
    return SimpleType(family, rank).dimension


def all_labels(max_rank: int = 8) -> list[tuple[str, int]]:
    """All Cartan labels of rank <= max_rank: A1-, B1-, C1-, D2- and E/F/G."""
    out = [(f, n) for f, lo in (("A", 1), ("B", 1), ("C", 1), ("D", 2)) for n in range(lo, max_rank + 1)]
    out += [(f, n) for f, ranks in EXCEPTIONAL_RANKS.items() for n in ranks if n <= max_rank]
    return out


def all_simple_types(max_rank: int = 8) -> list[SimpleType]:
    """Every legal simple type of rank <= max_rank (low-rank coincidences excluded)."""
    out = []
    for fam, lo in LEGAL_RANKS.items():
        out += [SimpleType(fam, n) for n in range(lo, max_rank + 1)]
    for fam, ranks in EXCEPTIONAL_RANKS.items():
        out += [SimpleType(fam, n) for n in ranks if n <= max_rank]
    return out
