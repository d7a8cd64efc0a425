"""Finite-dimensional superalgebras given by structure constants.

Constructors for the Kaplansky superalgebra ``K``, the Kac superalgebra in
the Racine basis and in the tensor presentation ``F1 + K (x) K``, plus the
table-level checks (parity closure, supercommutativity, Jordan identity in
the Grassmann envelope) and an isomorphism search between presentations.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Iterable, Iterator, Mapping, Sequence

from . import linalg
from .cyclo import ONE, ZERO, CycNum, as_scalar
from .report import Report


class AlgebraMismatch(ValueError):
    """Operands belong to different algebras."""


class TooManyGenerators(ValueError):
    """The Grassmann envelope is capped at four generators."""


class NoIsomorphismFound(RuntimeError):
    """The isomorphism search was exhausted without a solution."""


class SuperAlgebra:
    """Structure constants ``b_i b_j = sum_k c[i][j][k] b_k`` plus parities.

    The table is stored sparsely: ``table[i][j]`` is a tuple of
    ``(k, coefficient)`` pairs with nonzero coefficients.
    """

    def __init__(self, name: str, basis_names: Sequence[str], parity: Sequence[int],
                 products: Mapping[tuple[int, int], Mapping[int, object]]):
        self.name = name
        self.basis_names = tuple(basis_names)
        self.parity = tuple(int(p) for p in parity)
        n = len(self.basis_names)
        if len(self.parity) != n:
            raise ValueError("parity vector length differs from basis size")
        table = [[() for _ in range(n)] for _ in range(n)]
        for (i, j), out in products.items():
            terms = tuple(sorted((k, as_scalar(c)) for k, c in out.items() if as_scalar(c)))
            table[i][j] = terms
        self.table = tuple(tuple(row) for row in table)
        self._aliases = {}
        for idx, nm in enumerate(self.basis_names):
            self._aliases[nm] = idx
            self._aliases.setdefault(nm.replace("⊗", ""), idx)

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    @property
    def structure(self) -> list[list[list[CycNum]]]:
        """Dense c[i][j][k]."""
        n = self.dim
        dense = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                for k, c in self.table[i][j]:
                    dense[i][j][k] = c
        return dense

    def even_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.parity) if p == 0]

    def odd_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.parity) if p == 1]

    def index(self, name: str) -> int:
        try:
            return self._aliases[name]
        except KeyError:
            raise KeyError(f"{self.name} has no basis element {name!r}") from None

    def basis_vector(self, i: int | str) -> tuple:
        if isinstance(i, str):
            i = self.index(i)
        return linalg.unit_vector(self.dim, i)

    def mul(self, u: Sequence[CycNum], v: Sequence[CycNum]) -> tuple:
        """Bilinear product of coordinate vectors."""
        acc = [ZERO] * self.dim
        vnz = [(j, b) for j, b in enumerate(v) if b]
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.table[i]
            for j, b in vnz:
                terms = row[j]
                if terms:
                    ab = a * b
                    for k, c in terms:
                        acc[k] = acc[k] + ab * c
        return tuple(acc)

    _TERM = re.compile(r"(?P<coef>\d+(?:/\d+)?)?\s*\*?\s*(?P<name>.*)")

    def vector(self, text: str) -> tuple:
        """Parse a combination such as ``"e-3f"`` or ``"x⊗y - y⊗x"``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty element")
        if s == "0":
            return (ZERO,) * self.dim
        pieces = re.findall(r"[+-]?[^+-]+", s)
        if "".join(pieces) != s:
            raise ValueError(f"cannot parse {text!r}")
        out = [ZERO] * self.dim
        for piece in pieces:
            sign = -1 if piece.startswith("-") else 1
            body = piece.lstrip("+-")
            m = self._TERM.fullmatch(body)
            coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
            name = m.group("name")
            if not name:
                if "1" not in self._aliases:
                    raise ValueError(f"bare scalar in {text!r} but {self.name} has no unit basis element")
                name = "1"
            k = self.index(name)
            out[k] = out[k] + sign * coef
        return tuple(out)

    def element(self, text_or_coords) -> "AlgElement":
        if isinstance(text_or_coords, str):
            return AlgElement(self, self.vector(text_or_coords))
        return AlgElement(self, linalg.vec(text_or_coords))

    def format(self, v: Sequence[CycNum]) -> str:
        """Named combination with exact coefficients, e.g. ``x⊗y - y⊗x``."""
        parts = []
        for name, c in zip(self.basis_names, v):
            if not c:
                continue
            if c.is_rational():
                q = c.to_fraction()
                mag = "" if abs(q) == 1 else f"{abs(q)}*"
                parts.append(("-" if q < 0 else "+", f"{mag}{name}"))
            else:
                parts.append(("+", f"({c})*{name}"))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"SuperAlgebra({self.name!r}, dim={self.dim})"


@dataclass(frozen=True)
class AlgElement:
    algebra: SuperAlgebra
    coords: tuple

    def _check(self, other: "AlgElement") -> None:
        if other.algebra is not self.algebra:
            raise AlgebraMismatch(f"{self.algebra.name} vs {other.algebra.name}")

    def __add__(self, other: "AlgElement") -> "AlgElement":
        self._check(other)
        return AlgElement(self.algebra, linalg.add(self.coords, other.coords))

    def __sub__(self, other: "AlgElement") -> "AlgElement":
        self._check(other)
        return AlgElement(self.algebra, linalg.sub(self.coords, other.coords))

    def __neg__(self) -> "AlgElement":
        return AlgElement(self.algebra, linalg.scale(-1, self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return product(self.algebra, self, other)
        return AlgElement(self.algebra, linalg.scale(other, self.coords))

    def __rmul__(self, scalar):
        return AlgElement(self.algebra, linalg.scale(scalar, self.coords))

    def __eq__(self, other):
        if isinstance(other, AlgElement):
            return self.algebra is other.algebra and self.coords == other.coords
        if other == 0:
            return not any(self.coords)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def __str__(self):
        return self.algebra.format(self.coords)


def product(alg: SuperAlgebra, u: AlgElement, v: AlgElement) -> AlgElement:
    if u.algebra is not alg or v.algebra is not alg:
        raise AlgebraMismatch(f"operands do not belong to {alg.name}")
    return AlgElement(alg, alg.mul(u.coords, v.coords))


# -- constructors ---------------------------------------------------------------

def _from_strings(name: str, basis: Sequence[str], parity: Sequence[int],
                  rows: Mapping[str, Sequence[str]]) -> SuperAlgebra:
    stub = SuperAlgebra(name, basis, parity, {})
    products = {}
    for left, cells in rows.items():
        i = stub.index(left)
        for j, cell in enumerate(cells):
            if cell != "0":
                v = stub.vector(cell)
                products[(i, j)] = {k: c for k, c in enumerate(v) if c}
    return SuperAlgebra(name, basis, parity, products)


def kaplansky() -> SuperAlgebra:
    """The 3-dimensional Kaplansky superalgebra on (e, x, y)."""
    return _from_strings("K", ("e", "x", "y"), (0, 1, 1), {
        "e": ("e", "1/2x", "1/2y"),
        "x": ("1/2x", "0", "e"),
        "y": ("1/2y", "-e", "0"),
    })


RACINE_BASIS = ("e", "v1", "v2", "v3", "v4", "f", "x1", "x2", "y1", "y2")

# Row = left factor, column = right factor, columns in RACINE_BASIS order.
RACINE_ROWS = {
    "e":  ("e", "v1", "v2", "v3", "v4", "0", "1/2x1", "1/2x2", "1/2y1", "1/2y2"),
    "v1": ("v1", "0", "2e", "0", "0", "0", "0", "0", "x2", "-x1"),
    "v2": ("v2", "2e", "0", "0", "0", "0", "-y2", "y1", "0", "0"),
    "v3": ("v3", "0", "0", "0", "2e", "0", "0", "x1", "y2", "0"),
    "v4": ("v4", "0", "0", "2e", "0", "0", "x2", "0", "0", "y1"),
    "f":  ("0", "0", "0", "0", "0", "f", "1/2x1", "1/2x2", "1/2y1", "1/2y2"),
    "x1": ("1/2x1", "0", "-y2", "0", "x2", "1/2x1", "0", "v1", "e-3f", "v3"),
    "x2": ("1/2x2", "0", "y1", "x1", "0", "1/2x2", "-v1", "0", "v4", "e-3f"),
    # y1*f is printed as -1/2 y1; f*y1 = 1/2 y1 and supercommutativity force +.
    "y1": ("1/2y1", "x2", "0", "y2", "0", "1/2y1", "3f-e", "-v4", "0", "v2"),
    "y2": ("1/2y2", "-x1", "0", "0", "y1", "1/2y2", "-v3", "3f-e", "-v2", "0"),
}

# Cells of RACINE_ROWS that differ from the printed table.
RACINE_ERRATA = {("y1", "f"): "-1/2y1"}


def k10_racine(rows: Mapping[str, Sequence[str]] | None = None, name: str = "K10-racine") -> SuperAlgebra:
    """K10 on (e, v1..v4, f, x1, x2, y1, y2); ``rows`` overrides the table."""
    return _from_strings(name, RACINE_BASIS, (0,) * 6 + (1,) * 4, rows or RACINE_ROWS)


def k10_racine_printed() -> SuperAlgebra:
    """The table exactly as printed, errata included (fails supercommutativity)."""
    rows = {k: list(v) for k, v in RACINE_ROWS.items()}
    for (r, c), cell in RACINE_ERRATA.items():
        rows[r][RACINE_BASIS.index(c)] = cell
    return k10_racine(rows, name="K10-racine-printed")


K_NAMES = ("e", "x", "y")
K_PARITY = (0, 1, 1)
TENSOR_PAIRS = ("ee", "xx", "xy", "yx", "yy", "ex", "xe", "ey", "ye")
TENSOR_BASIS = ("1",) + tuple(f"{a}⊗{b}" for a, b in TENSOR_PAIRS)

# supersymmetric form on K: symmetric on K0, alternating on K1
KAPLANSKY_FORM = {("e", "e"): Fraction(1, 2), ("x", "y"): Fraction(1), ("y", "x"): Fraction(-1)}


def k10_tensor() -> SuperAlgebra:
    """K10 as F1 + K (x) K with the twisted tensor product.

    ``(a(x)b)(c(x)d) = (-1)^{|b||c|} (ac (x) bd - 3/4 (a|c)(b|d) 1)`` on
    homogeneous a, b, c, d in K, and 1 is the unit.
    """
    k = kaplansky()
    pair_index = {(a, b): 1 + n for n, (a, b) in enumerate(TENSOR_PAIRS)}
    parity = (0,) + tuple((K_PARITY[K_NAMES.index(a)] + K_PARITY[K_NAMES.index(b)]) % 2
                          for a, b in TENSOR_PAIRS)
    products: dict[tuple[int, int], dict[int, CycNum]] = {}
    for i in range(10):
        products[(0, i)] = {i: ONE}
        products[(i, 0)] = {i: ONE}
    for (a, b), i in pair_index.items():
        for (c, d), j in pair_index.items():
            ac = k.mul(k.basis_vector(a), k.basis_vector(c))
            bd = k.mul(k.basis_vector(b), k.basis_vector(d))
            sign = -1 if K_PARITY[K_NAMES.index(b)] and K_PARITY[K_NAMES.index(c)] else 1
            out: dict[int, CycNum] = {}
            for p, cp in zip(K_NAMES, ac):
                for q, cq in zip(K_NAMES, bd):
                    if cp and cq:
                        idx = pair_index[(p, q)]
                        out[idx] = out.get(idx, ZERO) + sign * cp * cq
            form = KAPLANSKY_FORM.get((a, c), 0) * KAPLANSKY_FORM.get((b, d), 0)
            if form:
                out[0] = out.get(0, ZERO) - sign * Fraction(3, 4) * form
            products[(i, j)] = out
    return SuperAlgebra("K10-tensor", TENSOR_BASIS, parity, products)


def abelian(dim: int, parity: Sequence[int] | None = None) -> SuperAlgebra:
    """Zero product on ``dim`` basis vectors; a negative control."""
    parity = parity or (0,) * dim
    return SuperAlgebra(f"abelian{dim}", [f"a{i}" for i in range(dim)], parity, {})


# -- table checks -----------------------------------------------------------------

def check_parity_closure(alg: SuperAlgebra) -> Report:
    rep = Report(f"parity closure [{alg.name}]")
    with rep.timed():
        for i in range(alg.dim):
            for j in range(alg.dim):
                for k, _ in alg.table[i][j]:
                    want = (alg.parity[i] + alg.parity[j]) % 2
                    if alg.parity[k] != want:
                        rep.record(f"{alg.basis_names[i]}*{alg.basis_names[j]} -> {alg.basis_names[k]}",
                                   want, alg.parity[k], False)
        rep.record("pairs checked", alg.dim ** 2, alg.dim ** 2)
    return rep


def check_supercommutativity(alg: SuperAlgebra) -> Report:
    """b_i b_j == (-1)^{|i||j|} b_j b_i for every ordered basis pair."""
    rep = Report(f"supercommutativity [{alg.name}]")
    checked = 0
    with rep.timed():
        for i in range(alg.dim):
            for j in range(alg.dim):
                checked += 1
                sign = -1 if alg.parity[i] and alg.parity[j] else 1
                lhs = alg.mul(alg.basis_vector(i), alg.basis_vector(j))
                rhs = linalg.scale(sign, alg.mul(alg.basis_vector(j), alg.basis_vector(i)))
                if lhs != rhs:
                    rep.record(f"({alg.basis_names[i]},{alg.basis_names[j]})",
                               alg.format(rhs), alg.format(lhs), False)
        rep.record("pairs checked", alg.dim ** 2, checked)
    return rep


def find_unit(alg: SuperAlgebra) -> tuple | None:
    """The two-sided identity, or None."""
    n = alg.dim
    rows, rhs = [], []
    for j in range(n):
        bj = alg.basis_vector(j)
        left = [alg.mul(alg.basis_vector(i), bj) for i in range(n)]
        right = [alg.mul(bj, alg.basis_vector(i)) for i in range(n)]
        for k in range(n):
            rows.append(tuple(left[i][k] for i in range(n)))
            rhs.append(ONE if k == j else ZERO)
            rows.append(tuple(right[i][k] for i in range(n)))
            rhs.append(ONE if k == j else ZERO)
    sol, kernel = linalg.solve(rows, tuple(rhs))
    return sol


def check_racine_unit(alg: SuperAlgebra) -> Report:
    """e, f orthogonal idempotents and e + f the identity."""
    rep = Report(f"idempotents and unit [{alg.name}]")
    with rep.timed():
        e, f = alg.vector("e"), alg.vector("f")
        rep.record("e*e = e", alg.format(e), alg.format(alg.mul(e, e)))
        rep.record("f*f = f", alg.format(f), alg.format(alg.mul(f, f)))
        rep.record("e*f = 0", "0", alg.format(alg.mul(e, f)))
        rep.record("f*e = 0", "0", alg.format(alg.mul(f, e)))
        unit = linalg.add(e, f)
        for i in range(alg.dim):
            b = alg.basis_vector(i)
            name = alg.basis_names[i]
            rep.record(f"(e+f)*{name}", name, alg.format(alg.mul(unit, b)))
            rep.record(f"{name}*(e+f)", name, alg.format(alg.mul(b, unit)))
    return rep


# -- Grassmann envelope -----------------------------------------------------------

MAX_GENERATORS = 4


def _merge_sign(m1: int, m2: int) -> int:
    # sign of sorting the concatenation of two sorted generator lists
    inv = 0
    b = m2
    while b:
        low = b & -b
        inv += bin(m1 & ~((low << 1) - 1)).count("1")
        b ^= low
    return -1 if inv & 1 else 1


class EnvelopeElement:
    """Sum of terms ``c * (b_i (x) g_S)`` with |S| parity equal to parity(b_i)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], CycNum] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    def __add__(self, other: "EnvelopeElement") -> "EnvelopeElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return EnvelopeElement(out)

    def __sub__(self, other: "EnvelopeElement") -> "EnvelopeElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) - v
        return EnvelopeElement(out)

    def __eq__(self, other):
        if isinstance(other, EnvelopeElement):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"EnvelopeElement({self.terms})"


class GrassmannEnvelope:
    """Multiplication in J0 (x) G0 + J1 (x) G1 with G on ``g`` generators.

    ``(a (x) m)(b (x) m') = ab (x) mm'``; generator monomials are kept sorted
    and the sign comes from sorting the concatenation.
    """

    def __init__(self, alg: SuperAlgebra, g: int = MAX_GENERATORS):
        if g > MAX_GENERATORS:
            raise TooManyGenerators(f"at most {MAX_GENERATORS} generators, got {g}")
        self.algebra = alg
        self.generators = g

    def element(self, basis: int | str, gens: Iterable[int] = ()) -> EnvelopeElement:
        alg = self.algebra
        i = alg.index(basis) if isinstance(basis, str) else basis
        gens = list(gens)
        if any(not 0 <= s < self.generators for s in gens) or len(set(gens)) != len(gens):
            raise ValueError(f"bad generator list {gens}")
        if len(gens) % 2 != alg.parity[i]:
            raise ValueError("parity of the Grassmann monomial must match the basis element")
        mask = 0
        for s in gens:
            mask |= 1 << s
        sign = _sort_sign(gens)
        return EnvelopeElement({(i, mask): CycNum(sign)})

    def mul(self, u: EnvelopeElement, v: EnvelopeElement) -> EnvelopeElement:
        table = self.algebra.table
        out: dict[tuple[int, int], CycNum] = {}
        for (i, m1), a in u.terms.items():
            row = table[i]
            for (j, m2), b in v.terms.items():
                if m1 & m2:
                    continue
                terms = row[j]
                if not terms:
                    continue
                ab = a * b
                if _merge_sign(m1, m2) < 0:
                    ab = -ab
                m = m1 | m2
                for k, c in terms:
                    key = (k, m)
                    out[key] = out.get(key, ZERO) + ab * c
        return EnvelopeElement(out)


def _sort_sign(gens: Sequence[int]) -> int:
    inv = sum(1 for a in range(len(gens)) for b in range(a + 1, len(gens)) if gens[a] > gens[b])
    return -1 if inv & 1 else 1


def grassmann_envelope(alg: SuperAlgebra, g: int = MAX_GENERATORS) -> GrassmannEnvelope:
    return GrassmannEnvelope(alg, g)


# Jordan identity of a commutative algebra, (x^2 y) x = x^2 (y x), as product trees.
JORDAN_LHS = ((("x", "x"), "y"), "x")
JORDAN_RHS = (("x", "x"), ("y", "x"))
_LINEAR_VARS = 3  # x -> alpha u + beta v + gamma w


def _evaluate_truncated(tree, env: GrassmannEnvelope, values: Mapping[str, dict]) -> dict:
    """Evaluate a product tree in J_env[alpha, beta, gamma]/(alpha^2, beta^2, gamma^2).

    Values map a bitmask of the auxiliary scalars to an envelope element.
    """
    cache: dict = {}

    def ev(node):
        if isinstance(node, str):
            return values[node]
        key = node
        if key in cache:
            return cache[key]
        left, right = ev(node[0]), ev(node[1])
        out: dict[int, EnvelopeElement] = {}
        for ma, a in left.items():
            for mb, b in right.items():
                if ma & mb:
                    continue
                prod = env.mul(a, b)
                if prod:
                    m = ma | mb
                    out[m] = out[m] + prod if m in out else prod
        cache[key] = out
        return out

    return ev(tree)


def linearized_jordan(env: GrassmannEnvelope, u, v, w, y) -> EnvelopeElement:
    """Coefficient of alpha*beta*gamma in (x^2 y)x - x^2(yx) at x = alpha u + beta v + gamma w."""
    values = {"x": {1: u, 2: v, 4: w}, "y": {0: y}}
    full = (1 << _LINEAR_VARS) - 1
    lhs = _evaluate_truncated(JORDAN_LHS, env, values).get(full, EnvelopeElement())
    rhs = _evaluate_truncated(JORDAN_RHS, env, values).get(full, EnvelopeElement())
    return lhs - rhs


def _slot_element(env: GrassmannEnvelope, i: int, slot: int) -> EnvelopeElement:
    return env.element(i, (slot,) if env.algebra.parity[i] else ())


def check_envelope_commutativity(alg: SuperAlgebra) -> Report:
    env = GrassmannEnvelope(alg, 2)
    rep = Report(f"envelope commutativity [{alg.name}]")
    with rep.timed():
        count = 0
        for i in range(alg.dim):
            for j in range(alg.dim):
                a, b = _slot_element(env, i, 0), _slot_element(env, j, 1)
                count += 1
                if env.mul(a, b) != env.mul(b, a):
                    rep.record(f"({alg.basis_names[i]},{alg.basis_names[j]})", "uv = vu", "uv != vu", False)
        rep.record("pairs checked", alg.dim ** 2, count)
    return rep


def check_jordan_envelope(alg: SuperAlgebra) -> Report:
    """Commutativity of G(J) plus the linearized Jordan identity on all basis quadruples.

    Each slot (u, v, w, y) is a basis element of J, tensored with its own
    Grassmann generator when odd.
    """
    rep = Report(f"super-Jordan identity via Grassmann envelope [{alg.name}]")
    with rep.timed():
        rep.merge(check_envelope_commutativity(alg))
        env = GrassmannEnvelope(alg, MAX_GENERATORS)
        n = alg.dim
        slots = [[_slot_element(env, i, s) for i in range(n)] for s in range(4)]
        bad = []
        count = 0
        for a, b, c, d in iproduct(range(n), repeat=4):
            count += 1
            val = linearized_jordan(env, slots[0][a], slots[1][b], slots[2][c], slots[3][d])
            if val:
                bad.append((a, b, c, d))
        rep.record("quadruples checked", n ** 4, count)
        if bad:
            a, b, c, d = sorted(bad)[0]
            names = alg.basis_names
            rep.record("first counterexample (u,v,w,y)", "none",
                       f"({names[a]},{names[b]},{names[c]},{names[d]}); {len(bad)} total", False)
        else:
            rep.record("linearized Jordan identity", "0 on all quadruples", "0 on all quadruples")
    return rep


# -- isomorphism search -------------------------------------------------------------

@dataclass(frozen=True)
class LinearMap:
    """Columns of ``matrix`` are the images of the source basis."""

    source: str
    target: str
    matrix: tuple

    def __call__(self, v):
        return linalg.matvec(self.matrix, v)


def is_homomorphism(src: SuperAlgebra, dst: SuperAlgebra, m) -> Report:
    rep = Report(f"homomorphism {src.name} -> {dst.name}")
    images = linalg.columns(m)
    for i in range(src.dim):
        for j in range(src.dim):
            lhs = linalg.matvec(m, src.mul(src.basis_vector(i), src.basis_vector(j)))
            rhs = dst.mul(images[i], images[j])
            if lhs != rhs:
                rep.record(f"phi({src.basis_names[i]}*{src.basis_names[j]})", dst.format(rhs), dst.format(lhs), False)
    rep.record("pairs checked", src.dim ** 2, src.dim ** 2)
    for i, col in enumerate(images):
        wrong = [k for k, c in enumerate(col) if c and dst.parity[k] != src.parity[i]]
        rep.record(f"parity of phi({src.basis_names[i]})", [], wrong)
    rep.record("invertible", src.dim, linalg.rank(images))
    return rep


def even_center(alg: SuperAlgebra) -> list[tuple]:
    """Basis of {z in J0 : (za)b = z(ab) for all a, b in J0}."""
    even = alg.even_indices()
    evecs = [alg.basis_vector(i) for i in even]

    def defect(z, a, b):
        return linalg.sub(alg.mul(alg.mul(z, a), b), alg.mul(z, alg.mul(a, b)))

    rows = []
    for a in evecs:
        for b in evecs:
            cols = [defect(z, a, b) for z in evecs]
            for k in range(alg.dim):
                rows.append(tuple(col[k] for col in cols))
    coeffs = linalg.nullspace(rows, len(even))
    out = []
    for c in coeffs:
        v = [ZERO] * alg.dim
        for idx, x in zip(even, c):
            v[idx] = x
        out.append(tuple(v))
    return out


def _rational_sqrt(c: CycNum) -> CycNum | None:
    if not c.is_rational():
        return None
    q = c.to_fraction()
    if q < 0:
        return None
    from math import isqrt
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return CycNum(Fraction(n, d))
    return None


def central_idempotents(alg: SuperAlgebra, unit: tuple) -> list[tuple]:
    """Nontrivial idempotents of a 2-dimensional unital even center."""
    center = even_center(alg)
    if len(center) != 2:
        return []
    space = linalg.Subspace(center)
    if unit not in space:
        return []
    w = next(v for v in space.basis if linalg.rank([v, unit]) == 2)
    # w^2 = s w + t 1
    sq = alg.mul(w, w)
    sol, _ = linalg.solve(linalg.from_columns([w, unit]), sq)
    if sol is None:
        return []
    s, t = sol
    disc = _rational_sqrt(s * s + 4 * t)
    if disc is None or not disc:
        return []
    r1, r2 = (s + disc) / 2, (s - disc) / 2
    p1 = linalg.scale((r1 - r2).inverse(), linalg.sub(w, linalg.scale(r2, unit)))
    p2 = linalg.sub(unit, p1)
    return sorted([p1, p2], key=lambda v: [str(x) for x in v])


class _PartialMap:
    """A linear map known on a spanning list; detects inconsistency."""

    def __init__(self, n_src: int, n_dst: int, pairs: Sequence[tuple[tuple, tuple]] = ()):
        self.n_src, self.n_dst = n_src, n_dst
        self.pairs = list(pairs)
        self._rows = None

    def extend(self, more: Iterable[tuple[tuple, tuple]]) -> "_PartialMap":
        return _PartialMap(self.n_src, self.n_dst, self.pairs + list(more))

    def _reduced(self):
        if self._rows is None:
            aug = [s + t for s, t in self.pairs]
            if aug:
                rows, piv = linalg.rref(aug, self.n_src + self.n_dst)
            else:
                rows, piv = (), ()
            self._rows = (rows, piv)
        return self._rows

    def consistent(self) -> bool:
        _, piv = self._reduced()
        return all(c < self.n_src for c in piv)

    def image(self, v: tuple) -> tuple | None:
        rows, piv = self._reduced()
        v = list(v) + [ZERO] * self.n_dst
        for row, c in zip(rows, piv):
            a = v[c]
            if a:
                v = [x - a * y if y else x for x, y in zip(v, row)]
        if any(v[: self.n_src]):
            return None
        return tuple(-x for x in v[self.n_src:])


def _linear_trees():
    # product trees with exactly one occurrence of the unknown "u"
    yield ("s", "u")
    yield ("u", "s")
    yield (("s", "u"), "t")
    yield (("u", "s"), "t")
    yield ("t", ("s", "u"))
    yield ("t", ("u", "s"))


def _eval_tree(alg: SuperAlgebra, tree, env: Mapping[str, tuple]) -> tuple:
    if isinstance(tree, str):
        return env[tree]
    return alg.mul(_eval_tree(alg, tree[0], env), _eval_tree(alg, tree[1], env))


def iter_isomorphisms(src: SuperAlgebra, dst: SuperAlgebra) -> Iterator[LinearMap]:
    """Parity-preserving isomorphisms src -> dst in a deterministic search order.

    Unit goes to unit and the nontrivial idempotents of the 2-dimensional
    even centers are matched; then odd basis images are chosen one at a time
    from the solution set of every constraint that is linear in the new
    image, backtracking on inconsistency.  Even basis images follow from the
    center and from products of odd elements.  Each candidate is checked on
    all basis pairs before it is yielded.
    """
    if src.dim != dst.dim or sorted(src.parity) != sorted(dst.parity):
        return
    n = src.dim
    u_src, u_dst = find_unit(src), find_unit(dst)
    if u_src is None or u_dst is None:
        return
    idem_src = central_idempotents(src, u_src)
    idem_dst = central_idempotents(dst, u_dst)
    if len(idem_src) != 2 or len(idem_dst) != 2:
        return
    odd_src = src.odd_indices()
    odd_dst = dst.odd_indices()

    def lift(coords):
        v = [ZERO] * n
        for idx, x in zip(odd_dst, coords):
            v[idx] = x
        return tuple(v)

    for q in (idem_dst, idem_dst[::-1]):
        base = _PartialMap(n, n, [(u_src, u_dst), (idem_src[0], q[0]), (idem_src[1], q[1])])
        if not base.consistent():
            continue
        yield from _extend(src, dst, base, [], odd_src, odd_dst, lift)


def _generators(src, dst, pm: _PartialMap, assigned: list, odd_src) -> list[tuple[tuple, tuple]]:
    gens = [(s, t) for s, t in pm.pairs[:3]]
    for k, img in enumerate(assigned):
        gens.append((src.basis_vector(odd_src[k]), img))
    for a in range(len(assigned)):
        for b in range(len(assigned)):
            sa, sb = src.basis_vector(odd_src[a]), src.basis_vector(odd_src[b])
            gens.append((src.mul(sa, sb), dst.mul(assigned[a], assigned[b])))
    return gens


def _extend(src, dst, pm: _PartialMap, assigned: list, odd_src, odd_dst, lift) -> Iterator[LinearMap]:
    n = src.dim
    k = len(assigned)
    if k == len(odd_src):
        full = pm.extend(_generators(src, dst, pm, assigned, odd_src)[3:])
        cols = []
        for i in range(n):
            img = full.image(src.basis_vector(i))
            if img is None:
                return
            cols.append(img)
        m = linalg.from_columns(cols)
        if is_homomorphism(src, dst, m).passed:
            yield LinearMap(src.name, dst.name, m)
        return

    target = src.basis_vector(odd_src[k])
    gens = _generators(src, dst, pm, assigned, odd_src)
    known = pm.extend(gens)
    m_odd = len(odd_dst)
    probes = [lift(linalg.unit_vector(m_odd, i)) for i in range(m_odd)]
    zero = linalg.zero_vector(n)
    rows, rhs = [], []
    for tree in _linear_trees():
        for s_src, s_dst in gens:
            for t_src, t_dst in (gens if _uses(tree, "t") else [(zero, zero)]):
                val = _eval_tree(src, tree, {"s": s_src, "t": t_src, "u": target})
                if not any(val):
                    coeff_u, rest = ZERO, zero
                else:
                    coeff_u = val[odd_src[k]] if src.parity[odd_src[k]] == 1 else ZERO
                    rest = linalg.sub(val, linalg.scale(coeff_u, target))
                rest_img = known.image(rest)
                if rest_img is None:
                    continue
                # F(u) = tree_dst(u) - coeff_u * u - phi(rest), affine in u
                f0 = linalg.sub(_eval_tree(dst, tree, {"s": s_dst, "t": t_dst, "u": zero}), rest_img)
                cols = []
                for p in probes:
                    fp = linalg.sub(_eval_tree(dst, tree, {"s": s_dst, "t": t_dst, "u": p}),
                                    linalg.scale(coeff_u, p))
                    cols.append(linalg.sub(linalg.sub(fp, rest_img), f0))
                for r in range(n):
                    row = tuple(c[r] for c in cols)
                    if any(row) or f0[r]:
                        rows.append(row)
                        rhs.append(-f0[r])
    if rows:
        part, kernel = linalg.solve(rows, tuple(rhs))
    else:
        part, kernel = linalg.zero_vector(m_odd), [linalg.unit_vector(m_odd, i) for i in range(m_odd)]
    if part is None:
        return
    candidates = []
    if any(part):
        candidates.append(part)
    candidates.extend(linalg.add(part, kv) for kv in kernel)
    seen = set()
    for cand in candidates:
        if cand in seen:
            continue
        seen.add(cand)
        img = lift(cand)
        if linalg.rank(assigned + [img]) != k + 1:
            continue
        new_assigned = assigned + [img]
        nxt = pm.extend(_generators(src, dst, pm, new_assigned, odd_src)[3:])
        if not nxt.consistent():
            continue
        yield from _extend(src, dst, _PartialMap(n, n, pm.pairs[:3]), new_assigned, odd_src, odd_dst, lift)


def _uses(tree, name: str) -> bool:
    if isinstance(tree, str):
        return tree == name
    return _uses(tree[0], name) or _uses(tree[1], name)


def find_isomorphism(src: SuperAlgebra, dst: SuperAlgebra) -> LinearMap:
    for phi in iter_isomorphisms(src, dst):
        return phi
    raise NoIsomorphismFound(f"no isomorphism {src.name} -> {dst.name}")


# -- serialization ----------------------------------------------------------------

def algebra_to_json(alg: SuperAlgebra) -> dict:
    triples = []
    for i in range(alg.dim):
        for j in range(alg.dim):
            for k, c in alg.table[i][j]:
                triples.append([i, j, k, str(c)])
    return {"name": alg.name, "basis_names": list(alg.basis_names),
            "parity": list(alg.parity), "structure": triples}


def algebra_from_json(data: Mapping) -> SuperAlgebra:
    products: dict[tuple[int, int], dict[int, CycNum]] = {}
    for i, j, k, c in data["structure"]:
        products.setdefault((i, j), {})[k] = CycNum.parse(c)
    return SuperAlgebra(data.get("name", "algebra"), data["basis_names"], data["parity"], products)


def dumps(alg: SuperAlgebra) -> str:
    return json.dumps(algebra_to_json(alg), sort_keys=True, ensure_ascii=False)
