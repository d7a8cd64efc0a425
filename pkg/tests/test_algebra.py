import json
from fractions import Fraction
from itertools import product

import pytest

from k10 import linalg
from k10.algebra import (RACINE_BASIS, RACINE_ROWS, AlgebraMismatch, GrassmannEnvelope,
                         NoIsomorphismFound, TooManyGenerators, abelian, algebra_from_json,
                         algebra_to_json, check_jordan_envelope, check_parity_closure,
                         check_racine_unit, check_supercommutativity, dumps, find_isomorphism,
                         is_homomorphism, iter_isomorphisms, k10_racine, k10_racine_printed,
                         k10_tensor, kaplansky, product as alg_product)
from k10.cyclo import ONE, ZERO, CycNum, zeta


@pytest.fixture(scope="module")
def racine():
    return k10_racine()


@pytest.fixture(scope="module")
def tensor():
    return k10_tensor()


def prod(alg, a, b):
    return alg.mul(alg.vector(a), alg.vector(b))


# -- Kaplansky ------------------------------------------------------------------

def test_kaplansky_products():
    k = kaplansky()
    assert k.parity == (0, 1, 1)
    assert prod(k, "e", "x") == k.vector("1/2x") == prod(k, "x", "e")
    assert prod(k, "e", "e") == k.vector("e")
    assert prod(k, "x", "x") == k.vector("0") == prod(k, "y", "y")
    assert prod(k, "x", "y") == k.vector("e")
    assert prod(k, "y", "x") == k.vector("-e")


# -- Racine table -----------------------------------------------------------------

def test_racine_shape(racine):
    assert racine.dim == 10
    assert racine.basis_names == RACINE_BASIS
    assert racine.parity == (0,) * 6 + (1,) * 4


def test_racine_examples(racine):
    assert prod(racine, "v1", "v2") == racine.vector("2e")
    assert prod(racine, "x1", "y1") == racine.vector("e-3f")
    assert prod(racine, "y1", "x1") == racine.vector("3f-e")
    assert prod(racine, "x1", "x2") == racine.vector("v1")
    assert prod(racine, "x2", "x1") == racine.vector("-v1")


def test_racine_unit_and_idempotents(racine):
    assert check_racine_unit(racine).passed
    unit = racine.vector("e+f")
    for name in RACINE_BASIS:
        assert racine.mul(unit, racine.vector(name)) == racine.vector(name)
    assert prod(racine, "e", "f") == racine.vector("0")
    u = racine.element("e+f")
    assert u * racine.element("x1") == racine.element("x1")


def test_table_checks_pass(racine, tensor):
    for alg in (racine, tensor, kaplansky()):
        assert check_parity_closure(alg).passed
        rep = check_supercommutativity(alg)
        assert rep.passed
    rep = check_supercommutativity(racine)
    assert any(d.item == "pairs checked" and d.actual == 100 for d in rep.details)


def test_corrupted_table_fails_at_x2_x1():
    rows = {k: list(v) for k, v in RACINE_ROWS.items()}
    rows["x2"][RACINE_BASIS.index("x1")] = "v1"
    rep = check_supercommutativity(k10_racine(rows, name="corrupt"))
    assert not rep.passed
    assert "(x2,x1)" in [d.item for d in rep.failures()]


def test_printed_table_fails_only_at_the_erratum_cell():
    rep = check_supercommutativity(k10_racine_printed())
    assert sorted(d.item for d in rep.failures()) == ["(f,y1)", "(y1,f)"]
    printed = k10_racine_printed()
    assert prod(printed, "y1", "f") == printed.vector("-1/2y1")


# -- tensor presentation --------------------------------------------------------------

K_MUL = {("e", "e"): {"e": 1}, ("e", "x"): {"x": Fraction(1, 2)}, ("x", "e"): {"x": Fraction(1, 2)},
         ("e", "y"): {"y": Fraction(1, 2)}, ("y", "e"): {"y": Fraction(1, 2)},
         ("x", "y"): {"e": 1}, ("y", "x"): {"e": -1}}
FORM = {("e", "e"): Fraction(1, 2), ("x", "y"): 1, ("y", "x"): -1}
ODD = {"e": 0, "x": 1, "y": 1}


def direct_tensor_product(a, b, c, d):
    """Twisted product of a⊗b and c⊗d evaluated by hand, as {name: coeff}."""
    sign = -1 if ODD[b] and ODD[c] else 1
    out = {}
    for p, cp in K_MUL.get((a, c), {}).items():
        for q, cq in K_MUL.get((b, d), {}).items():
            out[f"{p}⊗{q}"] = out.get(f"{p}⊗{q}", 0) + sign * cp * cq
    f = FORM.get((a, c), 0) * FORM.get((b, d), 0)
    if f:
        out["1"] = out.get("1", 0) - sign * Fraction(3, 4) * f
    return {k: v for k, v in out.items() if v}


def test_tensor_examples(tensor):
    assert prod(tensor, "x⊗y", "y⊗x") == tensor.vector("e⊗e-3/4")
    assert prod(tensor, "e⊗e", "e⊗e") == tensor.vector("e⊗e-3/16")
    for name in tensor.basis_names:
        assert prod(tensor, "1", name) == tensor.vector(name) == prod(tensor, name, "1")


def test_tensor_against_direct_evaluation(tensor):
    pairs = [(a, b) for a in "exy" for b in "exy"]
    for (a, b), (c, d) in product(pairs, repeat=2):
        want = [ZERO] * 10
        for name, coeff in direct_tensor_product(a, b, c, d).items():
            want[tensor.index(name)] = CycNum(coeff)
        assert prod(tensor, f"{a}⊗{b}", f"{c}⊗{d}") == tuple(want)


def test_tensor_parity(tensor):
    assert tensor.parity == (0, 0, 0, 0, 0, 0, 1, 1, 1, 1)


# -- product ---------------------------------------------------------------------------

def test_product_bilinearity_and_mismatch(racine, tensor):
    u, v = racine.element("x1+v2"), racine.element("y1-1/2e")
    a, b = zeta(7), CycNum(3)
    assert alg_product(racine, a * u, b * v) == (a * b) * alg_product(racine, u, v)
    zero = racine.element("0")
    assert alg_product(racine, zero, v) == 0
    with pytest.raises(AlgebraMismatch):
        alg_product(racine, u, tensor.element("1"))


# -- Grassmann envelope -----------------------------------------------------------------

def test_envelope_products(racine):
    env = GrassmannEnvelope(racine, 4)
    x1g1 = env.element("x1", [0])
    assert env.mul(x1g1, x1g1) == 0
    y1g2 = env.element("y1", [1])
    both = env.mul(x1g1, y1g2)
    e, f = racine.index("e"), racine.index("f")
    assert both.terms == {(e, 0b11): ONE, (f, 0b11): CycNum(-3)}
    flipped = env.mul(env.element("x1", [1]), env.element("y1", [0]))
    assert flipped.terms == {(e, 0b11): CycNum(-1), (f, 0b11): CycNum(3)}


def test_envelope_limits(racine):
    with pytest.raises(TooManyGenerators):
        GrassmannEnvelope(racine, 5)
    env = GrassmannEnvelope(racine, 4)
    with pytest.raises(ValueError):
        env.element("x1", [])


@pytest.mark.parametrize("build", [kaplansky, k10_racine, k10_tensor])
def test_jordan_identity_holds(build):
    alg = build()
    rep = check_jordan_envelope(alg)
    assert rep.passed, [d.item for d in rep.failures()]
    counted = [d for d in rep.details if d.item == "quadruples checked"]
    assert counted[0].actual == alg.dim ** 4


def test_jordan_identity_detects_the_corrupted_table():
    rows = {k: list(v) for k, v in RACINE_ROWS.items()}
    rows["x2"][RACINE_BASIS.index("x1")] = "v1"
    assert not check_jordan_envelope(k10_racine(rows, name="corrupt")).passed


def test_jordan_identity_detects_the_printed_table():
    rep = check_jordan_envelope(k10_racine_printed())
    assert not rep.passed
    assert any("(e,e,y1,f)" in str(d.actual) for d in rep.failures())


# -- isomorphisms ----------------------------------------------------------------------------

def test_isomorphism_racine_to_tensor(racine, tensor):
    phi = find_isomorphism(racine, tensor)
    rep = is_homomorphism(racine, tensor, phi.matrix)
    assert rep.passed
    assert linalg.rank(linalg.columns(phi.matrix)) == 10
    for i, col in enumerate(linalg.columns(phi.matrix)):
        assert all(tensor.parity[k] == racine.parity[i] for k, c in enumerate(col) if c)


def test_isomorphism_search_is_deterministic(racine, tensor):
    assert find_isomorphism(racine, tensor).matrix == find_isomorphism(racine, tensor).matrix


def test_identity_among_self_isomorphisms(racine):
    ident = linalg.identity(10)
    found = False
    for n, phi in enumerate(iter_isomorphisms(racine, racine)):
        if phi.matrix == ident:
            found = True
            break
        if n > 64:
            break
    assert found


def test_no_isomorphism_to_an_abelian_algebra(racine):
    with pytest.raises(NoIsomorphismFound):
        find_isomorphism(racine, abelian(10, (0,) * 6 + (1,) * 4))


def test_is_homomorphism_rejects_a_scaled_identity(racine):
    two = linalg.diagonal([2] * 10)
    assert not is_homomorphism(racine, racine, two).passed


# -- serialization ---------------------------------------------------------------------------

def test_json_round_trip(racine, tensor):
    for alg in (racine, tensor):
        data = json.loads(dumps(alg))
        assert data == algebra_to_json(alg)
        back = algebra_from_json(data)
        assert back.basis_names == alg.basis_names
        assert back.structure == alg.structure
    assert [8, 5, 8, "1/2"] in algebra_to_json(racine)["structure"]
