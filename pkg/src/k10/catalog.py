"""The 21 gradings on K10 and the gradings on K, with their verification."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as iproduct

from . import linalg
from .algebra import kaplansky
from .autos import (AutElement, ToralParam, aut_to_matrix, compose, k_matrix, toral,
                    weyl_orbit)
from .cyclo import ORDER, RootSpec, zeta
from .gradelib import (AbGroup, Grading, GroupHom, BASIS_WEIGHTS, eigenspace_decomposition,
                       eigenvalue_group, grading_from_hom, grading_type, is_refinement, parity_refined_type,
                       same_components, tensor_algebra, verify_grading, weight_hom)
from .linalg import Subspace
from .report import Report


class UnknownEntry(KeyError):
    """Catalog ids run from 1 to 21."""


class NoMatch(RuntimeError):
    """A cyclic grading matched no catalog entry."""


TRIVIAL = 0


@dataclass(frozen=True)
class HomGenerator:
    """Pushforward along Z^2 -> G, plus concrete toral elements realizing it."""

    hom: GroupHom
    formula: str
    toral_params: tuple  # tuples of RootSpec pairs as "k/n" strings

    def describe(self) -> str:
        return self.formula


@dataclass(frozen=True)
class AutGenerator:
    """Eigenspaces of automorphisms, optionally after a weight pushforward."""

    auts: tuple  # of (name, AutElement)
    start: GroupHom | None = None
    formula: str = ""

    def describe(self) -> str:
        names = ", ".join(n for n, _ in self.auts)
        if self.start is not None:
            return f"weight {self.formula}, then eigenvalues of {names}"
        return f"eigenvalues of {names}"


@dataclass
class CatalogEntry:
    id: int
    group: AbGroup
    generator: object
    expected_components: dict  # label -> tuple of named combinations
    expected_type: tuple
    toral: bool
    fine: bool
    verbatim_components: dict = field(default_factory=dict)
    errata: dict = field(default_factory=dict)

    @property
    def nontoral(self) -> bool:
        return not self.toral

    def expected_subspaces(self, components: dict | None = None) -> dict:
        alg = tensor_algebra()
        comps = components if components is not None else self.expected_components
        return {self.group.normalize(k): Subspace([alg.vector(s) for s in v], alg.dim) for k, v in comps.items()}

    def expected_grading(self) -> Grading:
        return Grading(tensor_algebra(), self.group, self.expected_subspaces(), f"entry {self.id}")

    def to_json(self) -> dict:
        alg = tensor_algebra()
        comps = []
        for label in sorted(self.expected_components):
            names = self.expected_components[label]
            comps.append({"label": list(label), "named": list(names),
                          "vectors": [[str(x) for x in alg.vector(s)] for s in names]})
        out = {"id": self.id, "group": self.group.to_json(), "group_name": str(self.group),
               "generator": self.generator.describe(), "expected_type": list(self.expected_type),
               "toral": self.toral, "fine": self.fine, "nontoral": self.nontoral, "components": comps}
        if self.errata:
            out["errata"] = [{"printed": list(k), "corrected": list(v)} for k, v in sorted(self.errata.items())]
        return out


def _hom(factors, a, b, formula, *torals) -> HomGenerator:
    return HomGenerator(weight_hom(AbGroup(factors), a, b), formula, tuple(torals))


_T = AutElement.toral


def _delta_t(lam) -> AutElement:
    return compose(AutElement.delta(), _T(lam, lam))


I = zeta(30)
OMEGA = zeta(40)

# label -> basis of the component, as named combinations
_COMPONENTS = {
    1: {(0, 0): ("1", "e⊗e"), (1, 1): ("x⊗x",), (1, -1): ("x⊗y",), (-1, 1): ("y⊗x",), (-1, -1): ("y⊗y",),
        (0, 1): ("e⊗x",), (1, 0): ("x⊗e",), (0, -1): ("e⊗y",), (-1, 0): ("y⊗e",)},
    2: {(-2,): ("y⊗y",), (-1,): ("e⊗y", "y⊗e"), (0,): ("1", "e⊗e", "x⊗y", "y⊗x"), (2,): ("x⊗x",),
        (1,): ("e⊗x", "x⊗e")},
    3: {(0,): ("1", "e⊗e", "x⊗y", "y⊗x", "x⊗x", "y⊗y"), (1,): ("e⊗y", "y⊗e", "e⊗x", "x⊗e")},
    4: {(2,): ("x⊗x", "e⊗y", "y⊗e"), (0,): ("1", "e⊗e", "x⊗y", "y⊗x"), (1,): ("y⊗y", "e⊗x", "x⊗e")},
    5: {(2,): ("x⊗x", "y⊗y"), (3,): ("e⊗y", "y⊗e"), (0,): ("1", "e⊗e", "x⊗y", "y⊗x"), (1,): ("e⊗x", "x⊗e")},
    6: {(-1,): ("y⊗x", "y⊗y", "y⊗e"), (0,): ("1", "e⊗e", "e⊗x", "e⊗y"), (1,): ("x⊗x", "x⊗y", "x⊗e")},
    7: {(0,): ("1", "e⊗e", "e⊗x", "e⊗y"), (1,): ("x⊗x", "x⊗y", "y⊗x", "y⊗y", "x⊗e", "y⊗e")},
    8: {(0, 0): ("1", "e⊗e"), (1, 0): ("e⊗x", "e⊗y"), (0, 1): ("x⊗e",), (1, 1): ("x⊗x", "x⊗y"),
        (0, -1): ("y⊗e",), (1, -1): ("y⊗y", "y⊗x")},
    9: {(0,): ("1", "e⊗e"), (2,): ("e⊗x", "e⊗y"), (1,): ("x⊗e", "y⊗y", "y⊗x"), (3,): ("y⊗e", "x⊗x", "x⊗y")},
    10: {(0, 0): ("1", "e⊗e"), (1, 0): ("x⊗y", "y⊗x"), (0, 1): ("x⊗e",), (1, 1): ("e⊗x",), (0, -1): ("y⊗e",),
         (1, -1): ("e⊗y",), (1, 2): ("x⊗x",), (1, -2): ("y⊗y",)},
    11: {(0,): ("1", "e⊗e"), (3,): ("x⊗y", "y⊗x"), (2,): ("x⊗e",), (5,): ("y⊗y", "e⊗x"), (4,): ("y⊗e",),
         (1,): ("x⊗x", "e⊗y")},
    12: {(-3,): ("y⊗y",), (-2,): ("e⊗y",), (-1,): ("x⊗y", "y⊗e"), (0,): ("1", "e⊗e"), (1,): ("y⊗x", "x⊗e"),
         (2,): ("e⊗x",), (3,): ("x⊗x",)},
    13: {(4,): ("x⊗y", "y⊗e"), (3,): ("x⊗x", "e⊗y"), (2,): ("y⊗y", "e⊗x"), (1,): ("y⊗x", "x⊗e"),
         (0,): ("1", "e⊗e")},
    14: {(0, 0): ("1", "e⊗e"), (0, 1): ("x⊗x", "x⊗y", "y⊗x", "y⊗y"), (1, 0): ("e⊗x", "e⊗y"),
         (1, 1): ("x⊗e", "y⊗e")},
    15: {(2, 1): ("x⊗x", "y⊗y"), (3, 0): ("e⊗y",), (3, 1): ("y⊗e",), (0, 0): ("1", "e⊗e"),
         (0, 1): ("x⊗y", "y⊗x"), (1, 0): ("e⊗x",), (1, 1): ("x⊗e",)},
    16: {(0, 0): ("1", "e⊗e", "x⊗y-y⊗x"), (-1, 1): ("e⊗y-y⊗e",), (2, 1): ("x⊗x",), (-2, 1): ("y⊗y",),
         (1, 1): ("e⊗x-x⊗e",), (0, 1): ("x⊗y+y⊗x",), (1, 0): ("e⊗x+x⊗e",), (-1, 0): ("e⊗y+y⊗e",)},
    17: {(0, 0): ("1", "e⊗e", "x⊗y-y⊗x"), (1, 0): ("e⊗x+x⊗e",), (2, 0): ("x⊗x", "y⊗y"), (3, 0): ("e⊗y+y⊗e",),
         (0, 1): ("x⊗y+y⊗x",), (1, 1): ("e⊗x-x⊗e",), (3, 1): ("e⊗y-y⊗e",)},
    18: {(0, 0): ("1", "e⊗e", "x⊗y-y⊗x"), (0, 1): ("x⊗y+y⊗x", "x⊗x", "y⊗y"), (1, 0): ("e⊗x+x⊗e", "e⊗y+y⊗e"),
         (1, 1): ("e⊗x-x⊗e", "e⊗y-y⊗e")},
    19: {(0,): ("1", "e⊗e", "x⊗y-y⊗x", "e⊗x+x⊗e", "e⊗y+y⊗e"),
         (1,): ("e⊗x-x⊗e", "e⊗y-y⊗e", "x⊗y+y⊗x", "x⊗x", "y⊗y")},
    20: {(0,): ("1", "e⊗e", "x⊗y-y⊗x", "x⊗x", "y⊗y"), (1,): ("x⊗e+e⊗x", "y⊗e-e⊗y"), (2,): ("x⊗y+y⊗x",),
         (3,): ("y⊗e+e⊗y", "x⊗e-e⊗x")},
    21: {(0,): ("1", "e⊗e", "x⊗y-y⊗x"), (1,): ("x⊗x", "y⊗e-e⊗y"), (2,): ("x⊗e+e⊗x",), (3,): ("x⊗y+y⊗x",),
         (4,): ("y⊗e+e⊗y",), (5,): ("y⊗y", "x⊗e-e⊗x")},
}

# Printed labels that contradict the generators: delta acts by -1 on x⊗x and y⊗y.
ERRATA = {17: {(2, 0): (2, 1)}}

_TYPES = {1: (8, 1), 2: (2, 2, 0, 1), 3: (0, 0, 0, 1, 0, 1), 4: (0, 0, 2, 1), 5: (0, 3, 0, 1), 6: (0, 0, 2, 1),
          7: (0, 0, 0, 1, 0, 1), 8: (2, 4), 9: (0, 2, 2), 10: (6, 2), 11: (2, 4), 12: (4, 3), 13: (0, 5),
          14: (0, 3, 0, 1), 15: (4, 3), 16: (7, 0, 1), 17: (5, 1, 1), 18: (0, 2, 2), 19: (0, 0, 0, 0, 2),
          20: (1, 2, 0, 0, 1), 21: (3, 2, 1)}

_GENERATORS = {
    1: _hom((0, 0), (1, 0), (0, 1), "(a, b)", ("1/5", "1/1"), ("1/1", "1/5")),
    2: _hom((0,), (1,), (1,), "a+b", ("1/5", "1/5")),
    3: _hom((2,), (1,), (1,), "(a+b) mod 2", ("1/2", "1/2")),
    4: _hom((3,), (1,), (1,), "(a+b) mod 3", ("1/3", "1/3")),
    5: _hom((4,), (1,), (1,), "(a+b) mod 4", ("1/4", "1/4")),
    6: _hom((0,), (1,), (0,), "a", ("1/5", "1/1")),
    7: _hom((2,), (1,), (0,), "a mod 2", ("1/2", "1/1")),
    8: _hom((2, 0), (0, 1), (1, 0), "(b mod 2, a)", ("1/5", "1/2")),
    9: _hom((4,), (1,), (2,), "(a+2b) mod 4", ("1/4", "1/2")),
    10: _hom((2, 0), (0, 1), (1, 1), "(b mod 2, a+b)", ("1/5", "7/10")),
    11: _hom((6,), (2,), (5,), "(2a+5b) mod 6", ("1/3", "5/6")),
    12: _hom((0,), (1,), (2,), "a+2b", ("1/8", "1/4")),
    13: _hom((5,), (1,), (2,), "(a+2b) mod 5", ("1/5", "2/5")),
    14: _hom((2, 2), (1, 1), (1, 0), "((a+b) mod 2, a mod 2)", ("1/2", "1/2"), ("1/2", "1/1")),
    15: _hom((4, 2), (1, 1), (1, 0), "((a+b) mod 4, a mod 2)", ("1/4", "1/4"), ("1/2", "1/1")),
    16: AutGenerator((("delta", AutElement.delta()),), weight_hom(AbGroup((0,)), (1,), (1,)), "a+b"),
    17: AutGenerator((("t_(i,i)", _T(I, I)), ("delta", AutElement.delta()))),
    18: AutGenerator((("t_(-1,-1)", _T(-1, -1)), ("delta", AutElement.delta()))),
    19: AutGenerator((("delta", AutElement.delta()),)),
    20: AutGenerator((("delta t_(i,i)", _delta_t(I)),)),
    21: AutGenerator((("delta t_(w,w)", _delta_t(OMEGA)),)),
}

_GROUPS = {1: (0, 0), 2: (0,), 3: (2,), 4: (3,), 5: (4,), 6: (0,), 7: (2,), 8: (2, 0), 9: (4,), 10: (2, 0),
           11: (6,), 12: (0,), 13: (5,), 14: (2, 2), 15: (4, 2), 16: (0, 2), 17: (4, 2), 18: (2, 2), 19: (2,),
           20: (4,), 21: (6,)}


def _corrected(eid: int) -> dict:
    fix = ERRATA.get(eid, {})
    return {fix.get(k, k): v for k, v in _COMPONENTS[eid].items()}


@lru_cache(maxsize=None)
def _catalog() -> tuple:
    out = []
    for eid in range(1, 22):
        out.append(CatalogEntry(
            id=eid, group=AbGroup(_GROUPS[eid]), generator=_GENERATORS[eid],
            expected_components=_corrected(eid), expected_type=_TYPES[eid],
            toral=eid <= 15, fine=eid in (1, 16),
            verbatim_components=dict(_COMPONENTS[eid]), errata=dict(ERRATA.get(eid, {}))))
    return tuple(out)


def build_catalog() -> list[CatalogEntry]:
    return list(_catalog())


def get_entry(eid: int) -> CatalogEntry:
    if not 1 <= eid <= 21:
        raise UnknownEntry(f"no catalog entry {eid}; ids run from 1 to 21")
    return _catalog()[eid - 1]


@lru_cache(maxsize=None)
def generate(eid: int) -> Grading:
    """Regenerate an entry's grading from its generator."""
    entry = get_entry(eid)
    gen = entry.generator
    if isinstance(gen, HomGenerator):
        return grading_from_hom(gen.hom, f"entry {eid}")
    start = grading_from_hom(gen.start) if gen.start is not None else None
    mats = [aut_to_matrix(g) for _, g in gen.auts]
    return eigenspace_decomposition(mats, start=start, name=f"entry {eid}")


def toral_eigen_grading(eid: int, method: str = "eliminate") -> Grading:
    """Eigenspaces of the concrete toral elements attached to a toral entry."""
    entry = get_entry(eid)
    if not entry.toral:
        raise ValueError(f"entry {eid} is not toral")
    mats = [aut_to_matrix(ToralParam.parse(a, b).element()) for a, b in entry.generator.toral_params]
    return eigenspace_decomposition(mats, method=method, name=f"entry {eid} (eigenspaces)")


def fingerprint(g: Grading) -> tuple:
    return (g.group.invariants(), grading_type(g), parity_refined_type(g))


def verify_entry(entry: CatalogEntry | int) -> Report:
    if isinstance(entry, int):
        entry = get_entry(entry)
    rep = Report(f"catalog entry {entry.id} [{entry.group}]")
    with rep.timed():
        g = generate(entry.id)
        expected = entry.expected_subspaces()
        dims = sum(s.dim for s in expected.values())
        rep.record("expected dimensions sum", 10, dims)
        rep.record("group", str(entry.group), str(g.group))
        rep.record("support", sorted(expected), g.support)
        for label in sorted(set(expected) | set(g.components)):
            want = expected.get(label)
            got = g.components.get(label)
            ok = want is not None and got is not None and want == got
            rep.record(f"component {label}",
                       ", ".join(entry.expected_components.get(label, ())),
                       ", ".join(g.algebra.format(v) for v in got.basis) if got else "absent", ok)
        rep.record("type", entry.expected_type, grading_type(g))
        axioms = verify_grading(g)
        rep.merge(axioms, "axioms: ")
        g1 = generate(1)
        rep.record("toral flag matches coarsening of the weight grading", entry.toral, is_refinement(g1, g))
        if entry.fine:
            proper = [e.id for e in _catalog() if e.id != entry.id
                      and is_refinement(generate(e.id), g) and not same_components(generate(e.id), g)]
            rep.record("fine: no proper refinement in the catalog", [], proper)
        for printed, fixed in sorted(entry.errata.items()):
            rep.notes.append(f"label {printed} read as {fixed}")
    return rep


def verify_catalog() -> list[Report]:
    return [verify_entry(e) for e in _catalog()]


# -- nontoral eigenvalues ----------------------------------------------------------

# Components of the grading induced by t_{lam,lam} and delta, in a fixed order.
LAFINA_ORDER = (("1", "e⊗e", "x⊗y-y⊗x"), ("x⊗x",), ("y⊗y",), ("e⊗x+x⊗e",), ("e⊗y+y⊗e",), ("x⊗y+y⊗x",),
                ("e⊗x-x⊗e",), ("e⊗y-y⊗e",))


def lafina_eigenvalues(beta) -> list:
    b = beta
    bi = b.inverse()
    return [b ** 0, -(b * b), -(bi * bi), b, bi, -(b ** 0), -b, -bi]


def expected_nontoral_entry(beta: RootSpec) -> int:
    n = beta.order
    if n in (1, 2):
        return 19
    if n == 4:
        return 20
    if n in (3, 6):
        return 21
    return 16


def nontoral_eigenvalue_check(beta: RootSpec | str) -> Report:
    if isinstance(beta, str):
        beta = RootSpec.parse(beta)
    alg = tensor_algebra()
    b = beta.value
    rep = Report(f"delta t_(b,b) eigenvalues, b = {beta}")
    with rep.timed():
        m = aut_to_matrix(_delta_t(b))
        for names, lam in zip(LAFINA_ORDER, lafina_eigenvalues(b)):
            ok = True
            for s in names:
                v = alg.vector(s)
                ok &= linalg.matvec(m, v) == linalg.scale(lam, v)
            rep.record(f"on <{', '.join(names)}>", str(lam), str(lam) if ok else "not an eigenvector", ok)
        g = eigenspace_decomposition([m], name=f"delta t_({beta},{beta})")
        flip = aut_to_matrix(_T(1, -1))
        found = None
        for eid in (16, 19, 20, 21):
            target = generate(eid).component_set()
            moved = frozenset(s.image(flip) for s in g.components.values())
            if g.component_set() == target or moved == target:
                found = eid
                break
        want = expected_nontoral_entry(beta)
        rep.record("equivalent catalog entry", want, found)
        rep.record("type", _TYPES[want], grading_type(g))
    return rep


# -- cyclic toral gradings -----------------------------------------------------------

def _weyl_maps():
    maps = []
    for sa, sb, swap in iproduct((1, -1), (1, -1), (False, True)):
        def f(w, sa=sa, sb=sb, swap=swap):
            x, y = sa * w[0], sb * w[1]
            return (y, x) if swap else (x, y)
        maps.append(((sa, sb, swap), f))
    return maps


_WEYL = _weyl_maps()


def _canonical_partition(blocks) -> tuple:
    best = None
    for _, f in _WEYL:
        form = tuple(sorted(tuple(sorted(f(w) for w in blk)) for blk in blocks))
        if best is None or form < best:
            best = form
    return best


def _weight_partition(g: Grading) -> list[frozenset]:
    """Blocks of weights for a grading whose components are coordinate spans."""
    blocks = []
    for s in g.components.values():
        idx = {i for v in s.basis for i, x in enumerate(v) if x}
        if len(idx) != s.dim:
            raise ValueError("components are not spanned by basis vectors")
        blocks.append(frozenset(BASIS_WEIGHTS[i] for i in idx))
    return blocks


@lru_cache(maxsize=None)
def _entry_partitions() -> dict:
    out = {}
    for eid in range(1, 14):
        key = _canonical_partition(_weight_partition(generate(eid)))
        if key in out:
            raise AssertionError(f"entries {out[key]} and {eid} share a weight partition")
        out[key] = eid
    return out


@dataclass(frozen=True)
class CyclicClass:
    entry: int
    param: ToralParam
    canonical: ToralParam
    type: tuple
    parity_type: tuple
    eigen_group: AbGroup


@lru_cache(maxsize=None)
def _classify_canonical(p: ToralParam) -> CyclicClass:
    g = eigenspace_decomposition([aut_to_matrix(p.element())], name=f"t{p}")
    typ, ptyp = grading_type(g), parity_refined_type(g)
    eg = eigenvalue_group(g)
    if len(g.components) == 1:
        return CyclicClass(TRIVIAL, p, p, typ, ptyp, eg)
    key = _canonical_partition(_weight_partition(g))
    eid = _entry_partitions().get(key)
    if eid is None:
        raise NoMatch(f"t{p} gives a grading of type {typ} matching no catalog entry")
    ref = generate(eid)
    if (grading_type(ref), parity_refined_type(ref)) != (typ, ptyp):
        raise NoMatch(f"t{p}: fingerprint disagrees with entry {eid}")
    universal = ref.group
    n = eg.exponent
    if not (universal.free_rank or (universal.exponent and universal.exponent % n == 0)):
        raise NoMatch(f"t{p}: eigenvalue group {eg} is not a quotient of {universal}")
    return CyclicClass(eid, p, p, typ, ptyp, eg)


def classify_cyclic_detail(p: ToralParam) -> CyclicClass:
    for r in (p.lam, p.mu):
        if 60 % r.order:
            raise ValueError(f"root {r} has order {r.order}, which does not divide 60")
    canon = min((pt.param for pt in weyl_orbit(p, verify=False)),
                key=lambda q: (q.lam.exponent, q.mu.exponent))
    c = _classify_canonical(canon)
    return CyclicClass(c.entry, p, canon, c.type, c.parity_type, c.eigen_group)


def classify_cyclic(p: ToralParam) -> int:
    """Catalog id of the grading induced by t_p, or TRIVIAL (0)."""
    return classify_cyclic_detail(p).entry


def cyclic_scan(n: int = 60) -> dict:
    """Histogram of classify_cyclic over all pairs of n-th roots of unity."""
    hist: dict = {}
    for a in range(n):
        for b in range(n):
            eid = classify_cyclic(ToralParam(RootSpec(a, n), RootSpec(b, n)))
            hist[eid] = hist.get(eid, 0) + 1
    return hist


# -- the Kaplansky superalgebra -------------------------------------------------------

@dataclass
class KaplanskyEntry:
    name: str
    group: AbGroup
    expected_components: dict


KAPLANSKY_ENTRIES = (
    KaplanskyEntry("Z2 superalgebra grading", AbGroup((2,)), {(0,): ("e",), (1,): ("x", "y")}),
    KaplanskyEntry("fine Z-grading", AbGroup((0,)), {(-1,): ("x",), (0,): ("e",), (1,): ("y",)}),
)


def _k_grading(entry: KaplanskyEntry) -> Grading:
    k = kaplansky()
    comps = {lab: Subspace([k.vector(s) for s in names], k.dim) for lab, names in entry.expected_components.items()}
    return Grading(k, entry.group, comps, entry.name)


def kaplansky_weight_grading() -> Grading:
    """Z-grading from t_lambda: x has weight 1, y weight -1; labels negated to match K^{-1} = Fx."""
    k = kaplansky()
    weights = {"e": 0, "x": 1, "y": -1}
    comps = {(-w,): Subspace([k.vector(n)], k.dim) for n, w in weights.items()}
    return Grading(k, AbGroup((0,)), comps, "fine Z-grading")


def verify_kaplansky_catalog(n: int = 60) -> list[Report]:
    k = kaplansky()
    z2, fine = (_k_grading(e) for e in KAPLANSKY_ENTRIES)
    out = []

    rep = Report("Kaplansky Z2 grading")
    g = eigenspace_decomposition([k_matrix(toral(-1))], algebra=k, name="t_-1")
    rep.record("t_-1 components equal K0 + K1", True, g.components == z2.components)
    rep.merge(verify_grading(z2), "axioms: ")
    out.append(rep)

    rep = Report("Kaplansky fine Z-grading")
    g = eigenspace_decomposition([k_matrix(toral(zeta(24)))], algebra=k, name="t_z5")
    rep.record("t_z5 components equal Fx, Fe, Fy", True, g.component_set() == fine.component_set())
    rep.record("weights give K^-1 = Fx, K^0 = Fe, K^1 = Fy", True,
               kaplansky_weight_grading().components == fine.components)
    rep.merge(verify_grading(fine), "axioms: ")
    seen = {"trivial": 0, "Z2": 0, "fine": 0, "other": 0}
    for a in range(n):
        m = k_matrix(toral(zeta(a * (ORDER // n))))
        cs = eigenspace_decomposition([m], algebra=k).component_set()
        if len(cs) == 1:
            seen["trivial"] += 1
        elif cs == z2.component_set():
            seen["Z2"] += 1
        elif cs == fine.component_set():
            seen["fine"] += 1
        else:
            seen["other"] += 1
    rep.record(f"scan over {n}-th roots: no other gradings", 0, seen["other"])
    rep.notes.append(f"scan counts: {seen}")
    out.append(rep)
    return out


def export_catalog() -> str:
    data = {"entries": [e.to_json() for e in _catalog()],
            "kaplansky": [{"name": e.name, "group": e.group.to_json(),
                           "components": [{"label": list(k), "named": list(v)}
                                          for k, v in sorted(e.expected_components.items())]}
                          for e in KAPLANSKY_ENTRIES]}
    return json.dumps(data, sort_keys=True, ensure_ascii=False, indent=2)
