"""Concrete automorphisms of K10 acting on the tensor basis.

Aut(K) is SL2 acting on span{x, y} and fixing e.  A matrix ``m`` sends
``x -> m11 x + m12 y`` and ``y -> m21 x + m22 y`` (the row vector ``(x, y)``
is multiplied by ``m``), which is the reading under which
``sigma = [[0, 1], [-1, 0]]`` is ``x -> y -> -x``.  Composing the maps of
``m`` and ``n`` therefore gives the map of the matrix product ``n m``.

``AutElement(a, b, swap)`` is the map ``(a, b)`` after ``delta`` when
``swap`` is set; ``compose`` is composition of maps, so ``aut_to_matrix``
is a homomorphism.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from . import linalg
from .algebra import SuperAlgebra, is_homomorphism, k10_tensor, K_NAMES, K_PARITY, TENSOR_PAIRS
from .cyclo import ONE, ZERO, CycNum, RootSpec, as_scalar, zeta
from .report import Report


class NotUnimodular(ValueError):
    """A 2x2 matrix with determinant other than 1."""


@dataclass(frozen=True)
class SL2Matrix:
    m11: CycNum
    m12: CycNum
    m21: CycNum
    m22: CycNum

    @classmethod
    def of(cls, rows, check: bool = True) -> "SL2Matrix":
        (a, b), (c, d) = rows
        m = cls(as_scalar(a), as_scalar(b), as_scalar(c), as_scalar(d))
        if check and m.det() != 1:
            raise NotUnimodular(f"determinant {m.det()}")
        return m

    def det(self) -> CycNum:
        return self.m11 * self.m22 - self.m12 * self.m21

    @property
    def rows(self) -> tuple:
        return ((self.m11, self.m12), (self.m21, self.m22))

    def __mul__(self, o: "SL2Matrix") -> "SL2Matrix":
        return SL2Matrix(self.m11 * o.m11 + self.m12 * o.m21, self.m11 * o.m12 + self.m12 * o.m22,
                         self.m21 * o.m11 + self.m22 * o.m21, self.m21 * o.m12 + self.m22 * o.m22)

    def inverse(self) -> "SL2Matrix":
        d = self.det()
        if d != 1:
            raise NotUnimodular(f"determinant {d}")
        return SL2Matrix(self.m22, -self.m12, -self.m21, self.m11)

    def __pow__(self, k: int) -> "SL2Matrix":
        base = self if k >= 0 else self.inverse()
        out = IDENTITY2
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_diagonal(self) -> bool:
        return not self.m12 and not self.m21

    def to_json(self) -> list:
        return [[str(x) for x in row] for row in self.rows]

    def __str__(self):
        return "[[{}, {}], [{}, {}]]".format(self.m11, self.m12, self.m21, self.m22)


IDENTITY2 = SL2Matrix(ONE, ZERO, ZERO, ONE)
SIGMA = SL2Matrix(ZERO, ONE, -ONE, ZERO)


def toral(lam) -> SL2Matrix:
    """t_lambda = diag(lambda, 1/lambda)."""
    lam = as_scalar(lam)
    return SL2Matrix(lam, ZERO, ZERO, lam.inverse())


def k_matrix(m: SL2Matrix) -> tuple:
    """3x3 matrix on (e, x, y) with columns the images."""
    if m.det() != 1:
        raise NotUnimodular(f"determinant {m.det()}")
    return ((ONE, ZERO, ZERO), (ZERO, m.m11, m.m21), (ZERO, m.m12, m.m22))


def act_on_k(m: SL2Matrix, v):
    """Image of an element of K (coordinates on e, x, y, or an AlgElement)."""
    km = k_matrix(m)
    if hasattr(v, "coords"):
        return type(v)(v.algebra, linalg.matvec(km, v.coords))
    return linalg.matvec(km, linalg.vec(v))


@dataclass(frozen=True)
class ToralParam:
    lam: RootSpec
    mu: RootSpec

    @classmethod
    def parse(cls, a: str, b: str) -> "ToralParam":
        return cls(RootSpec.parse(a), RootSpec.parse(b))

    def element(self) -> "AutElement":
        return AutElement.toral(self.lam.value, self.mu.value)

    def __str__(self):
        return f"({self.lam}, {self.mu})"


@dataclass(frozen=True)
class AutElement:
    a: SL2Matrix
    b: SL2Matrix
    swap: bool = False

    @classmethod
    def identity(cls) -> "AutElement":
        return cls(IDENTITY2, IDENTITY2, False)

    @classmethod
    def toral(cls, lam, mu) -> "AutElement":
        return cls(toral(lam), toral(mu), False)

    @classmethod
    def delta(cls) -> "AutElement":
        return cls(IDENTITY2, IDENTITY2, True)

    def __mul__(self, other: "AutElement") -> "AutElement":
        return compose(self, other)

    def matrix(self) -> tuple:
        return aut_to_matrix(self)

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "b": self.b.to_json(), "swap": self.swap}

    def __str__(self):
        tail = " delta" if self.swap else ""
        return f"({self.a}, {self.b}){tail}"


def compose(g: AutElement, h: AutElement) -> AutElement:
    """The map g after h."""
    c, d = (h.b, h.a) if g.swap else (h.a, h.b)
    return AutElement(c * g.a, d * g.b, g.swap != h.swap)


def inverse(g: AutElement) -> AutElement:
    ai, bi = g.a.inverse(), g.b.inverse()
    if g.swap:
        return AutElement(bi, ai, True)
    return AutElement(ai, bi, False)


def conjugate(g: AutElement, h: AutElement) -> AutElement:
    """g h g^-1."""
    return compose(compose(g, h), inverse(g))


def power(g: AutElement, k: int) -> AutElement:
    base = g if k >= 0 else inverse(g)
    out = AutElement.identity()
    for _ in range(abs(k)):
        out = compose(out, base)
    return out


_PAIR_INDEX = {tuple(pair): 1 + n for n, pair in enumerate(TENSOR_PAIRS)}
_K_INDEX = {name: n for n, name in enumerate(K_NAMES)}


def _pair_matrix(ka: tuple, kb: tuple) -> list[list[CycNum]]:
    m = [[ZERO] * 10 for _ in range(10)]
    m[0][0] = ONE
    for (p, q), j in _PAIR_INDEX.items():
        for (r, s), i in _PAIR_INDEX.items():
            c = ka[_K_INDEX[r]][_K_INDEX[p]]
            if c:
                d = kb[_K_INDEX[s]][_K_INDEX[q]]
                if d:
                    m[i][j] = c * d
    return m


def delta_matrix() -> tuple:
    """delta(a (x) b) = (-1)^{|a||b|} b (x) a, fixing 1."""
    m = [[ZERO] * 10 for _ in range(10)]
    m[0][0] = ONE
    for (p, q), j in _PAIR_INDEX.items():
        sign = -1 if K_PARITY[_K_INDEX[p]] and K_PARITY[_K_INDEX[q]] else 1
        m[_PAIR_INDEX[(q, p)]][j] = CycNum(sign)
    return tuple(tuple(r) for r in m)


def aut_to_matrix(g: AutElement) -> tuple:
    """10x10 matrix on the tensor basis; columns are images."""
    m = tuple(tuple(r) for r in _pair_matrix(k_matrix(g.a), k_matrix(g.b)))
    if g.swap:
        m = linalg.matmul(m, delta_matrix())
    return m


def toral_diagonal(lam, mu) -> tuple:
    """Expected diagonal of t_{lam,mu} in the tensor basis."""
    lam, mu = as_scalar(lam), as_scalar(mu)
    li, mi = lam.inverse(), mu.inverse()
    return (ONE, ONE, lam * mu, lam * mi, mu * li, li * mi, mu, lam, mi, li)


_TENSOR = None


def _tensor() -> SuperAlgebra:
    global _TENSOR
    if _TENSOR is None:
        _TENSOR = k10_tensor()
    return _TENSOR


def verify_automorphism(m, alg: SuperAlgebra | None = None) -> Report:
    alg = alg or _tensor()
    rep = is_homomorphism(alg, alg, linalg.mat(m))
    rep.check_name = f"automorphism of {alg.name}"
    return rep


# -- Weyl orbits ------------------------------------------------------------

WEYL_GENERATORS = (
    ("(sigma,1)", AutElement(SIGMA, IDENTITY2, False)),
    ("(1,sigma)", AutElement(IDENTITY2, SIGMA, False)),
    ("delta", AutElement.delta()),
)


def weyl_step(name: str, p: ToralParam) -> ToralParam:
    if name == "(sigma,1)":
        return ToralParam(p.lam.inverse(), p.mu)
    if name == "(1,sigma)":
        return ToralParam(p.lam, p.mu.inverse())
    return ToralParam(p.mu, p.lam)


@dataclass(frozen=True)
class OrbitPoint:
    param: ToralParam
    witness: AutElement
    word: tuple

    @property
    def witness_name(self) -> str:
        return " * ".join(reversed(self.word)) if self.word else "1"


def weyl_orbit(p: ToralParam, verify: bool = True) -> list[OrbitPoint]:
    """All t_q conjugate to t_p under (sigma,1), (1,sigma), delta, with witnesses.

    Breadth-first from p; each witness w satisfies conjugate(w, t_p) = t_q and,
    when ``verify`` is set, this is also checked on 10x10 matrices.
    """
    start = OrbitPoint(p, AutElement.identity(), ())
    seen = {p: start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for name, g in WEYL_GENERATORS:
            q = weyl_step(name, cur.param)
            if q not in seen:
                pt = OrbitPoint(q, compose(g, cur.witness), cur.word + (name,))
                seen[q] = pt
                queue.append(pt)
    points = list(seen.values())
    if verify:
        t = p.element()
        for pt in points:
            if not witness_holds(pt.witness, t, pt.param.element()):
                raise AssertionError(f"bad witness for {pt.param}")
    return points


def witness_holds(w: AutElement, t: AutElement, target: AutElement) -> bool:
    """conjugate(w, t) == target, as group elements and as matrices."""
    if conjugate(w, t) != target:
        return False
    mw = aut_to_matrix(w)
    lhs = linalg.matmul(linalg.matmul(mw, aut_to_matrix(t)), linalg.inverse(mw))
    return lhs == aut_to_matrix(target)


def canonical_param(p: ToralParam) -> ToralParam:
    """Least orbit point by (lam.exponent, mu.exponent)."""
    return min((pt.param for pt in weyl_orbit(p, verify=False)),
               key=lambda q: (q.lam.exponent, q.mu.exponent))


# -- toralization witnesses ---------------------------------------------------

def sigma_toralization_witness() -> SL2Matrix:
    """p with p sigma p^-1 = diag(i, -i).

    The columns (1, i) and (1, -i) are eigenvectors of sigma; both are scaled
    by c = zeta8 / sqrt2 so that the change of basis has determinant 1.
    """
    z8 = zeta(15)
    sqrt2 = z8 + z8.inverse()
    c = z8 / sqrt2
    i = zeta(30)
    big_p = SL2Matrix(c, c, c * i, -(c * i))
    return big_p.inverse()


def toralization_witness(t: SL2Matrix, s: SL2Matrix) -> SL2Matrix:
    """q with q (t sigma) q^-1 diagonal, given s toral with s^2 = t."""
    if s * s != t:
        raise ValueError("s must square to t")
    return sigma_toralization_witness() * s.inverse()


# -- N_120 as integers ---------------------------------------------------------

N = 120
_HALF = N // 2


def _sl2_code(a: int, s: int) -> SL2Matrix:
    return toral(zeta(a)) * (SIGMA if s else IDENTITY2)


def _sl2_mul(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    # matrix product (t_a sigma^s)(t_b sigma^r); sigma t_b = t_{-b} sigma, sigma^2 = t_{60}
    a, s = x
    b, r = y
    c = a + (-b if s else b) + (_HALF if s and r else 0)
    return (c % N, (s + r) % 2)


def n120_compose(g: tuple, h: tuple) -> tuple:
    """Composition of maps on codes (a, s, b, r, swap) for (t_a sigma^s, t_b sigma^r) delta^swap."""
    a1, s1, b1, r1, w1 = g
    a2, s2, b2, r2, w2 = h
    c, d = ((b2, r2), (a2, s2)) if w1 else ((a2, s2), (b2, r2))
    x = _sl2_mul(c, (a1, s1))
    y = _sl2_mul(d, (b1, r1))
    return (x[0], x[1], y[0], y[1], w1 ^ w2)


def n120_element(code: tuple) -> AutElement:
    a, s, b, r, w = code
    return AutElement(_sl2_code(a, s), _sl2_code(b, r), bool(w))


def n120_elements() -> Iterator[tuple]:
    for a in range(N):
        for s in (0, 1):
            for b in range(N):
                for r in (0, 1):
                    for w in (0, 1):
                        yield (a, s, b, r, w)


def _centralizer(gens: Sequence[tuple]) -> set[tuple]:
    out = set()
    for g in n120_elements():
        if all(n120_compose(g, h) == n120_compose(h, g) for h in gens):
            out.add(g)
    return out


def mad_sections(seed: int = 0, samples: int = 10) -> list[Report]:
    """The three parts of the MAD-group check as separate reports."""
    rng = random.Random(seed)
    d = AutElement.delta()
    dm = aut_to_matrix(d)

    gens = Report("MAD (a): generators of M commute")
    with gens.timed():
        ok = True
        for k in range(N):
            tm = aut_to_matrix(AutElement.toral(zeta(k), zeta(k)))
            if linalg.matmul(tm, dm) != linalg.matmul(dm, tm):
                ok = False
                gens.record(f"t_(z^{k},z^{k}) commutes with delta", True, False)
        gens.record("120 diagonal generators commute with delta", True, ok)
        codes = [(k, 0, k, 0, 0) for k in range(N)] + [(0, 0, 0, 0, 1)]
        pair_ok = all(n120_compose(x, y) == n120_compose(y, x) for x in codes for y in codes)
        gens.record("all generator pairs commute", True, pair_ok)

    cent = Report("MAD (b): centralizers inside N120")
    with cent.timed():
        # the integer law agrees with 10x10 matrices
        law_ok = True
        for _ in range(samples):
            g = (rng.randrange(N), rng.randrange(2), rng.randrange(N), rng.randrange(2), rng.randrange(2))
            h = (rng.randrange(N), rng.randrange(2), rng.randrange(N), rng.randrange(2), rng.randrange(2))
            lhs = aut_to_matrix(n120_element(n120_compose(g, h)))
            rhs = linalg.matmul(aut_to_matrix(n120_element(g)), aut_to_matrix(n120_element(h)))
            law_ok &= lhs == rhs
        cent.record("integer composition law matches matrices", True, law_ok)
        m_gens = [(1, 0, 1, 0, 0), (0, 0, 0, 0, 1)]
        m_group = {(a, 0, a, 0, w) for a in range(N) for w in (0, 1)}
        cm = _centralizer(m_gens)
        cent.record("|C(M ∩ N120)|", len(m_group), len(cm))
        cent.record("C(M ∩ N120) = M ∩ N120", True, cm == m_group)
        t_gens = [(1, 0, 0, 0, 0), (0, 0, 1, 0, 0)]
        t_group = {(a, 0, b, 0, 0) for a in range(N) for b in range(N)}
        ct = _centralizer(t_gens)
        cent.record("|C(T2 ∩ N120)|", len(t_group), len(ct))
        cent.record("C(T2 ∩ N120) = T2 ∩ N120", True, ct == t_group)

    ids = Report("MAD (c): conjugation identities")
    with ids.timed():
        for _ in range(samples):
            f, g = random_sl2(rng), random_sl2(rng)
            lhs = conjugate(d, AutElement(f, g))
            mats = linalg.matmul(linalg.matmul(dm, aut_to_matrix(AutElement(f, g))), dm)
            ids.record(f"delta (f,g) delta^-1 = (g,f) for f={f}, g={g}",
                       True, lhs == AutElement(g, f) and mats == aut_to_matrix(AutElement(g, f)))
        for k in sorted({rng.randrange(1, N) for _ in range(samples)} | {24}):
            lam = zeta(k)
            got = SIGMA * toral(lam) * SIGMA.inverse()
            ids.record(f"sigma t_(z^{k}) sigma^-1 = t_(z^{-k % N})", str(toral(lam.inverse())), str(got))
        ids.record("sigma^2 = t_-1", str(toral(-1)), str(SIGMA * SIGMA))
        p = sigma_toralization_witness()
        ids.record("det p = 1", "1", str(p.det()))
        ids.record("p sigma p^-1 = t_i", str(toral(zeta(30))), str(p * SIGMA * p.inverse()))
        t, s = toral(zeta(20)), toral(zeta(10))
        q = toralization_witness(t, s)
        ids.record("q (t_z6 sigma) q^-1 = t_i with s = t_z12",
                   str(toral(zeta(30))), str(q * (t * SIGMA) * q.inverse()))
    return [gens, cent, ids]


def mad_desk_check(seed: int = 0, samples: int = 10) -> Report:
    rep = Report("MAD-group desk check")
    for part in mad_sections(seed, samples):
        rep.merge(part, part.check_name[4:7] + " ")
        rep.elapsed_ms += part.elapsed_ms
    return rep


def random_sl2(rng: random.Random) -> SL2Matrix:
    """Product of a toral element, an optional sigma and a unipotent factor."""
    m = toral(zeta(rng.randrange(N)))
    if rng.randrange(2):
        m = m * SIGMA
    c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return m * SL2Matrix(ONE, CycNum(c), ZERO, ONE)


def random_aut(rng: random.Random) -> AutElement:
    return AutElement(random_sl2(rng), random_sl2(rng), bool(rng.randrange(2)))


def root_param(k1: int, n1: int, k2: int, n2: int) -> ToralParam:
    return ToralParam(RootSpec(k1, n1), RootSpec(k2, n2))
