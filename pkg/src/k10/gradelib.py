"""Group gradings on K10: weights, pushforwards, eigenspaces and checks."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Callable, Iterable, Sequence

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp

from . import linalg
from .algebra import SuperAlgebra, k10_tensor
from .cyclo import ORDER, ZERO, CycNum, zeta
from .linalg import Subspace
from .report import Report


class NotCommuting(ValueError):
    """The matrices given for a simultaneous decomposition do not commute."""


class NotDiagonalizable(ValueError):
    """Eigenspaces over the 120th roots of unity do not fill the space."""


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


# -- abelian groups -------------------------------------------------------------

@dataclass(frozen=True)
class AbGroup:
    """Product of cyclic factors in a fixed order; 0 stands for Z.

    ``AbGroup((2, 0))`` is Z2 x Z with elements ``(k mod 2, n)``.
    """

    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(f) for f in self.factors))
        if any(f == 1 or f < 0 for f in self.factors):
            raise ValueError(f"factors must be 0 (for Z) or at least 2: {self.factors}")

    @classmethod
    def from_invariants(cls, free_rank: int, torsion: Sequence[int] = ()) -> "AbGroup":
        return cls((0,) * free_rank + tuple(torsion))

    @classmethod
    def parse(cls, text: str) -> "AbGroup":
        """``"Z2xZ"``, ``"Z^2"``, ``"Z4 x Z2"`` or ``"1"``."""
        s = text.replace(" ", "").replace("×", "x")
        if s in ("1", ""):
            return cls(())
        out = []
        for part in s.split("x"):
            m = re.fullmatch(r"Z(\d*)(?:\^(\d+))?", part)
            if not m:
                raise ValueError(f"bad group {text!r}")
            n = int(m.group(1)) if m.group(1) else 0
            out.extend([n] * int(m.group(2) or 1))
        return cls(tuple(out))

    @property
    def free_rank(self) -> int:
        return sum(1 for f in self.factors if f == 0)

    @property
    def torsion(self) -> tuple:
        return tuple(f for f in self.factors if f)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def zero(self) -> tuple:
        return (0,) * self.rank

    def normalize(self, v: Sequence[int]) -> tuple:
        if len(v) != self.rank:
            raise ValueError(f"element {tuple(v)} has wrong length for {self}")
        return tuple(int(x) % f if f else int(x) for x, f in zip(v, self.factors))

    def add(self, a: Sequence[int], b: Sequence[int]) -> tuple:
        return self.normalize([x + y for x, y in zip(a, b)])

    def neg(self, a: Sequence[int]) -> tuple:
        return self.normalize([-x for x in a])

    def scale(self, k: int, a: Sequence[int]) -> tuple:
        return self.normalize([k * x for x in a])

    def element_order(self, a: Sequence[int]) -> int:
        """Order of a, with 0 for infinite order."""
        a = self.normalize(a)
        out = 1
        for x, f in zip(a, self.factors):
            if f == 0:
                if x:
                    return 0
            else:
                out = _lcm(out, f // gcd(x, f))
        return out

    @property
    def exponent(self) -> int:
        """lcm of the torsion moduli, 0 when the group is infinite."""
        if self.free_rank:
            return 0
        return reduce(_lcm, self.torsion, 1)

    def invariants(self) -> tuple:
        """(free rank, invariant factors) as a canonical isomorphism key."""
        return _quotient_invariants([[f if i == j else 0 for j in range(self.rank)]
                                     for i, f in enumerate(self.factors)], self.rank)

    def is_isomorphic(self, other: "AbGroup") -> bool:
        return self.invariants() == other.invariants()

    def _relations(self) -> list[list[int]]:
        # columns n_i e_i for the torsion factors
        cols = []
        for i, f in enumerate(self.factors):
            if f:
                cols.append([f if r == i else 0 for r in range(self.rank)])
        return cols

    def generated_by(self, elems: Iterable[Sequence[int]]) -> bool:
        """True iff the elements generate the whole group."""
        cols = [list(self.normalize(e)) for e in elems] + self._relations()
        if self.rank == 0:
            return True
        free, tors = _quotient_invariants(cols, self.rank)
        return free == 0 and not tors

    def subgroup_invariants(self, elems: Iterable[Sequence[int]]) -> tuple:
        """(free rank, invariant factors) of the subgroup the elements generate."""
        gens = [list(self.normalize(e)) for e in elems]
        k = len(gens)
        if k == 0:
            return (0, ())
        rel = self._relations()
        # lattice of integer relations c with sum c_j g_j = 0 in the group
        cols = gens + [[-x for x in r] for r in rel]
        a = Matrix(self.rank, len(cols), lambda i, j: cols[j][i]) if self.rank else Matrix.zeros(0, len(cols))
        kernel = _integer_kernel(a, len(cols))
        lattice = [v[:k] for v in kernel]
        return _quotient_invariants(lattice, k)

    def subgroup(self, elems: Iterable[Sequence[int]]) -> "AbGroup":
        free, tors = self.subgroup_invariants(elems)
        return AbGroup.from_invariants(free, tors)

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion), "factors": list(self.factors)}

    def __str__(self):
        if not self.factors:
            return "1"
        return " x ".join("Z" if f == 0 else f"Z{f}" for f in self.factors)


def _integer_kernel(a: Matrix, ncols: int) -> list[list[int]]:
    if a.rows == 0:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    s, u, v = smith_normal_decomp(a, domain=ZZ)
    rank = sum(1 for i in range(min(s.rows, s.cols)) if s[i, i] != 0)
    return [[int(v[i, j]) for i in range(ncols)] for j in range(rank, ncols)]


def _quotient_invariants(cols: Sequence[Sequence[int]], n: int) -> tuple:
    """Invariants of Z^n modulo the span of the given column vectors."""
    if n == 0:
        return (0, ())
    cols = [c for c in cols if any(c)]
    if not cols:
        return (n, ())
    a = Matrix(n, len(cols), lambda i, j: cols[j][i])
    s, _, _ = smith_normal_decomp(a, domain=ZZ)
    diag = [abs(int(s[i, i])) for i in range(min(s.rows, s.cols)) if s[i, i] != 0]
    return (n - len(diag), tuple(sorted(d for d in diag if d > 1)))


Z2_LATTICE = AbGroup((0, 0))


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism out of ``source`` given by the images of its factor generators."""

    source: AbGroup
    target: AbGroup
    images: tuple

    def __post_init__(self):
        imgs = tuple(self.target.normalize(v) for v in self.images)
        object.__setattr__(self, "images", imgs)
        if len(imgs) != self.source.rank:
            raise ValueError("need one image per source factor")
        for f, img in zip(self.source.factors, imgs):
            if f and any(self.target.scale(f, img)):
                raise ValueError(f"image {img} of a Z{f} generator has order not dividing {f}")

    def __call__(self, v: Sequence[int]) -> tuple:
        v = self.source.normalize(v)
        acc = [0] * self.target.rank
        for x, img in zip(v, self.images):
            for i, y in enumerate(img):
                acc[i] += x * y
        return self.target.normalize(acc)

    def then(self, other: "GroupHom") -> "GroupHom":
        """other after self."""
        return GroupHom(self.source, other.target, tuple(other(img) for img in self.images))


def weight_hom(target: AbGroup, img_a: Sequence[int], img_b: Sequence[int]) -> GroupHom:
    """Hom Z^2 -> target sending (1,0) to img_a and (0,1) to img_b."""
    return GroupHom(Z2_LATTICE, target, (tuple(img_a), tuple(img_b)))


# -- gradings -------------------------------------------------------------------

@dataclass
class Grading:
    algebra: SuperAlgebra
    group: AbGroup
    components: dict = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        self.components = {self.group.normalize(k): v for k, v in self.components.items() if v.dim}

    @property
    def support(self) -> list[tuple]:
        return sorted(self.components)

    def component(self, label) -> Subspace:
        label = self.group.normalize(label)
        return self.components.get(label, Subspace([], self.algebra.dim))

    def component_set(self) -> frozenset:
        return frozenset(self.components.values())

    def dims(self) -> dict:
        return {k: v.dim for k, v in self.components.items()}

    def to_json(self) -> dict:
        comps = []
        for label in self.support:
            comps.append({"label": list(label),
                          "basis": [[str(x) for x in v] for v in self.components[label].basis],
                          "named": [self.algebra.format(v) for v in self.components[label].basis]})
        return {"group": self.group.to_json(), "type": list(grading_type(self)), "components": comps}

    def describe(self) -> list[str]:
        lines = []
        for label in self.support:
            names = ", ".join(self.algebra.format(v) for v in self.components[label].basis)
            lines.append(f"J^{_label_str(label)} = <{names}>")
        return lines


def _label_str(label: tuple) -> str:
    if not label:
        return "0"
    return str(label[0]) if len(label) == 1 else "(" + ",".join(str(x) for x in label) + ")"


_TENSOR = None


def tensor_algebra() -> SuperAlgebra:
    global _TENSOR
    if _TENSOR is None:
        _TENSOR = k10_tensor()
    return _TENSOR


# Weights of the tensor basis under t_{lambda,mu}: lambda^a mu^b.
BASIS_WEIGHTS = ((0, 0), (0, 0), (1, 1), (1, -1), (-1, 1), (-1, -1), (0, 1), (1, 0), (0, -1), (-1, 0))


def weight_of(index: int) -> tuple:
    return BASIS_WEIGHTS[index]


def weight_decomposition() -> dict:
    """Weight -> subspace of the tensor presentation (the fine toral grading)."""
    alg = tensor_algebra()
    out: dict = {}
    for i, w in enumerate(BASIS_WEIGHTS):
        out.setdefault(w, []).append(alg.basis_vector(i))
    return {w: Subspace(vs, alg.dim) for w, vs in out.items()}


def grading_from_hom(hom: GroupHom, name: str = "") -> Grading:
    """Push the weight grading forward along a hom Z^2 -> G."""
    if hom.source.factors != (0, 0):
        raise ValueError("source must be Z^2")
    alg = tensor_algebra()
    groups: dict = {}
    for w, space in weight_decomposition().items():
        g = hom(w)
        groups.setdefault(g, []).extend(space.basis)
    comps = {g: Subspace(vs, alg.dim) for g, vs in groups.items()}
    return Grading(alg, hom.target, comps, name)


def pushforward(g: Grading, hom: GroupHom) -> Grading:
    """Coarsening of g along a group hom."""
    if hom.source != g.group:
        raise ValueError("hom source must be the grading group")
    groups: dict = {}
    for label, space in g.components.items():
        groups.setdefault(hom(label), []).extend(space.basis)
    return Grading(g.algebra, hom.target, {k: Subspace(v, g.algebra.dim) for k, v in groups.items()}, g.name)


def _mat_pow(m, k: int):
    n = len(m)
    out = linalg.identity(n)
    base = m
    while k:
        if k & 1:
            out = linalg.matmul(out, base)
        k >>= 1
        if k:
            base = linalg.matmul(base, base)
    return out


def matrix_order(m) -> int:
    """Multiplicative order, required to divide 120."""
    n = len(m)
    ident = linalg.identity(n)
    if _mat_pow(m, ORDER) != ident:
        raise NotDiagonalizable("matrix order does not divide 120")
    order = ORDER
    for p in (2, 3, 5):
        while order % p == 0 and _mat_pow(m, order // p) == ident:
            order //= p
    return order


def _split(m, space: Subspace, candidates: Iterable[CycNum]) -> list[tuple[int, Subspace]]:
    """Eigenspaces of m inside an invariant subspace, as (120th-root exponent, space)."""
    n = len(m)
    basis = space.basis
    images = [linalg.matvec(m, b) for b in basis]
    out = []
    found = 0
    for c in candidates:
        cols = [linalg.sub(img, linalg.scale(c, b)) for img, b in zip(images, basis)]
        rows = [tuple(col[r] for col in cols) for r in range(n)]
        ker = linalg.nullspace(rows, len(basis))
        if ker:
            vecs = [reduce(linalg.add, (linalg.scale(x, b) for x, b in zip(coef, basis) if x), linalg.zero_vector(n))
                    for coef in ker]
            exp = c.root_exponent()
            if exp is None:
                raise NotDiagonalizable(f"eigenvalue {c} is not a 120th root of unity")
            out.append((exp, Subspace(vecs, n)))
            found += len(ker)
            if found == space.dim:
                break
    if found != space.dim:
        raise NotDiagonalizable(f"eigenspaces fill {found} of {space.dim} dimensions")
    return out


def eigenspace_decomposition(mats: Sequence, algebra: SuperAlgebra | None = None,
                             start: Grading | None = None, method: str = "auto",
                             name: str = "") -> Grading:
    """Simultaneous eigenspaces of commuting finite-order matrices.

    Each matrix of order n contributes a Z_n factor; eigenvalue zeta_n^j gives
    label coordinate j.  ``start`` refines an existing grading instead of the
    whole algebra, prefixing its labels.  With ``method="auto"`` a diagonal
    matrix only tries its own diagonal entries; ``"eliminate"`` always scans
    every n-th root of unity by exact elimination.
    """
    alg = algebra or (start.algebra if start else tensor_algebra())
    mats = [linalg.mat(m) for m in mats]
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if linalg.matmul(mats[i], mats[j]) != linalg.matmul(mats[j], mats[i]):
                raise NotCommuting(f"matrices {i} and {j} do not commute")
    if start is not None:
        parts = [(label, space) for label, space in sorted(start.components.items())]
        factors = list(start.group.factors)
    else:
        parts = [((), Subspace([alg.basis_vector(i) for i in range(alg.dim)], alg.dim))]
        factors = []
    for m in mats:
        if method == "auto" and linalg.is_diagonal(m):
            seen = []
            for i in range(len(m)):
                if m[i][i] not in seen:
                    seen.append(m[i][i])
            candidates = sorted(seen, key=lambda c: c.root_exponent() if c.root_exponent() is not None else -1)
        else:
            n = matrix_order(m)
            candidates = [zeta(k * (ORDER // n)) for k in range(n)]
        split = [(label, _split(m, space, candidates)) for label, space in parts]
        order = 1
        for _, pieces in split:
            for exp, _ in pieces:
                order = _lcm(order, ORDER // gcd(exp, ORDER))
        step = ORDER // order
        new_parts = []
        for label, pieces in split:
            for exp, space in pieces:
                new_parts.append((label + ((exp // step) % order,) if order > 1 else label, space))
        if order > 1:
            factors.append(order)
        parts = new_parts
    comps: dict = {}
    for label, space in parts:
        if label in comps:
            comps[label] = comps[label] + space
        else:
            comps[label] = space
    return Grading(alg, AbGroup(tuple(factors)), comps, name)


def eigenvalue_group(g: Grading) -> AbGroup:
    """Subgroup of the grading group generated by the support."""
    return g.group.subgroup(g.support)


def verify_grading(g: Grading) -> Report:
    rep = Report(f"grading axioms [{g.name or g.group}]")
    alg = g.algebra
    n = alg.dim
    with rep.timed():
        dims = sum(s.dim for s in g.components.values())
        rep.record("direct sum: dimensions", n, dims)
        everything = [v for s in g.components.values() for v in s.basis]
        rep.record("direct sum: independence", n, linalg.rank(everything) if everything else 0)
        bad = []
        count = 0
        zero = Subspace([], n)
        for a, sa in g.components.items():
            for b, sb in g.components.items():
                target = g.components.get(g.group.add(a, b), zero)
                for u in sa.basis:
                    for v in sb.basis:
                        count += 1
                        p = alg.mul(u, v)
                        if any(p) and p not in target:
                            bad.append((a, b))
        rep.record("closure: basis products checked", "all in J^(g+h)",
                   "all in J^(g+h)" if not bad else f"{len(bad)} outside, first {sorted(bad)[0]}", not bad)
        rep.notes.append(f"closure products: {count}")
        split_bad = []
        for label, s in g.components.items():
            for v in s.basis:
                even = tuple(x if alg.parity[i] == 0 else ZERO for i, x in enumerate(v))
                if even not in s:
                    split_bad.append(label)
                    break
        rep.record("super-compatibility", [], sorted(split_bad))
        rep.record("support generates the group", True, g.group.generated_by(g.support))
    return rep


def grading_type(g: Grading) -> tuple:
    counts = [0] * g.algebra.dim
    for s in g.components.values():
        counts[s.dim - 1] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def _parity_dims(alg: SuperAlgebra, s: Subspace) -> tuple[int, int]:
    out = []
    for p in (0, 1):
        proj = [tuple(x if alg.parity[i] == p else ZERO for i, x in enumerate(v)) for v in s.basis]
        proj = [v for v in proj if any(v)]
        out.append(linalg.rank(proj) if proj else 0)
    return tuple(out)


def parity_refined_type(g: Grading) -> tuple:
    """Sorted (even dim, odd dim) of each component."""
    return tuple(sorted(_parity_dims(g.algebra, s) for s in g.components.values()))


def is_refinement(fine: Grading, coarse: Grading) -> bool:
    """Every coarse component is the sum of the fine components inside it."""
    n = coarse.algebra.dim
    for c in coarse.components.values():
        inside = [f for f in fine.components.values() if c.contains_space(f)]
        total = Subspace([v for f in inside for v in f.basis], n) if inside else Subspace([], n)
        if total != c:
            return False
    return True


def same_components(a: Grading, b: Grading) -> bool:
    return a.component_set() == b.component_set()


def apply_automorphism(g: Grading, m) -> Grading:
    comps = {k: v.image(linalg.mat(m)) for k, v in g.components.items()}
    return Grading(g.algebra, g.group, comps, g.name)


def relabel(g: Grading, fn: Callable[[tuple], tuple], group: AbGroup) -> Grading:
    return Grading(g.algebra, group, {fn(k): v for k, v in g.components.items()}, g.name)


def grading_to_json(g: Grading) -> str:
    return json.dumps(g.to_json(), sort_keys=True, ensure_ascii=False)
