"""Acceptance suite: twelve exact checks, one PASS/FAIL line each.

Run with pytest, or directly with ``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time

import pytest

from k10 import algebra, autos, catalog, gradelib, linalg
from k10.autos import SIGMA, AutElement
from k10.cyclo import ONE, CycNum, RootSpec, zeta

TYPES = [(8, 1), (2, 2, 0, 1), (0, 0, 0, 1, 0, 1), (0, 0, 2, 1), (0, 3, 0, 1), (0, 0, 2, 1),
         (0, 0, 0, 1, 0, 1), (2, 4), (0, 2, 2), (6, 2), (2, 4), (4, 3), (0, 5), (0, 3, 0, 1), (4, 3),
         (7, 0, 1), (5, 1, 1), (0, 2, 2), (0, 0, 0, 0, 2), (1, 2, 0, 0, 1), (3, 2, 1)]


def _pairs_checked(rep):
    return [d.actual for d in rep.details if d.item == "pairs checked"]


def criterion_1():
    alg = algebra.k10_racine()
    sc = algebra.check_supercommutativity(alg)
    pc = algebra.check_parity_closure(alg)
    e, f = alg.vector("e"), alg.vector("f")
    zero = alg.vector("0")
    idem = alg.mul(e, e) == e and alg.mul(f, f) == f
    orth = alg.mul(e, f) == zero and alg.mul(f, e) == zero
    unit = alg.vector("e+f")
    acts = all(alg.mul(unit, alg.basis_vector(i)) == alg.basis_vector(i) == alg.mul(alg.basis_vector(i), unit)
               for i in range(10))
    ok = sc.passed and _pairs_checked(sc) == [100] and pc.passed and idem and orth and acts
    return ok, f"supercommutativity on {_pairs_checked(sc)} pairs, unit {acts}"


def criterion_2():
    rng = random.Random(0)
    pairs = [(24, 40)] + [(rng.randrange(120), rng.randrange(120)) for _ in range(10)]
    bad = []
    for a, b in pairs:
        lam, mu = zeta(a), zeta(b)
        li, mi = lam.inverse(), mu.inverse()
        want = linalg.diagonal([1, 1, lam * mu, lam * mi, mu * li, li * mi, mu, lam, mi, li])
        if autos.aut_to_matrix(AutElement.toral(lam, mu)) != want:
            bad.append((a, b))
    return not bad, f"{len(pairs)} pairs, mismatches {bad}"


def criterion_3():
    bad = []
    for entry in catalog.build_catalog():
        g = catalog.generate(entry.id)
        if g.components != entry.expected_subspaces():
            bad.append((entry.id, "components"))
        if entry.expected_type != TYPES[entry.id - 1] or gradelib.grading_type(g) != TYPES[entry.id - 1]:
            bad.append((entry.id, "type"))
    return not bad, f"21 entries, failures {bad}"


def criterion_4():
    bad = [eid for eid in range(1, 22) if not gradelib.verify_grading(catalog.generate(eid)).passed]
    return not bad, f"axioms fail for {bad}"


def criterion_5():
    bad = []
    for eid in range(1, 16):
        eig = catalog.toral_eigen_grading(eid, method="eliminate")
        if eig.component_set() != catalog.generate(eid).component_set():
            bad.append(eid)
    return not bad, f"15 toral entries, disagreements {bad}"


def criterion_6():
    alg = gradelib.tensor_algebra()
    problems = []
    for beta, want in (("1/1", 19), ("1/4", 20), ("1/3", 21), ("1/5", 16)):
        b = RootSpec.parse(beta).value
        bi = b.inverse()
        eigen = [ONE, -(b * b), -(bi * bi), b, bi, CycNum(-1), -b, -bi]
        m = autos.aut_to_matrix(autos.compose(AutElement.delta(), AutElement.toral(b, b)))
        for names, lam in zip(catalog.LAFINA_ORDER, eigen):
            for s in names:
                v = alg.vector(s)
                if linalg.matvec(m, v) != linalg.scale(lam, v):
                    problems.append((beta, s))
        rep = catalog.nontoral_eigenvalue_check(beta)
        got = [d.actual for d in rep.details if d.item == "equivalent catalog entry"]
        if not rep.passed or got != [want]:
            problems.append((beta, got))
    return not problems, f"problems {problems}"


def criterion_7():
    rng = random.Random(0)
    bad = []
    count = 0
    for _ in range(20):
        a, b = rng.randrange(120), rng.randrange(120)
        lam, mu = zeta(a), zeta(b)
        t = AutElement.toral(lam, mu)
        targets = {"(sigma,1)": AutElement.toral(lam.inverse(), mu),
                   "(1,sigma)": AutElement.toral(lam, mu.inverse()),
                   "delta": AutElement.toral(mu, lam)}
        for name, w in autos.WEYL_GENERATORS:
            count += 1
            if not autos.witness_holds(w, t, targets[name]):
                bad.append((a, b, name))
    return not bad and count == 60, f"{count} witnesses, failures {bad}"


def criterion_8():
    hist = catalog.cyclic_scan(60)
    ok = sum(hist.values()) == 3600 and set(hist) <= set(range(0, 14))
    return ok, f"histogram {dict(sorted(hist.items()))}"


def criterion_9():
    parts = autos.mad_sections()
    p = autos.sigma_toralization_witness()
    witness_ok = p.det() == ONE and p * SIGMA * p.inverse() == autos.toral(zeta(30))
    ok = all(r.passed for r in parts) and witness_ok
    return ok, ", ".join(r.summary_line() for r in parts)


def criterion_10():
    lines = []
    ok = True
    for build in (algebra.kaplansky, algebra.k10_racine, algebra.k10_tensor):
        alg = build()
        rep = algebra.check_jordan_envelope(alg)
        quads = [d.actual for d in rep.details if d.item == "quadruples checked"]
        ok &= rep.passed and quads == [alg.dim ** 4]
        lines.append(f"{alg.name} {quads}")
    return ok, "; ".join(lines)


def criterion_11():
    src, dst = algebra.k10_racine(), algebra.k10_tensor()
    phi = algebra.find_isomorphism(src, dst)
    rep = algebra.is_homomorphism(src, dst, phi.matrix)
    parity = all(dst.parity[k] == src.parity[i]
                 for i, col in enumerate(linalg.columns(phi.matrix)) for k, c in enumerate(col) if c)
    ok = rep.passed and parity and linalg.rank(linalg.columns(phi.matrix)) == 10
    return ok, f"{_pairs_checked(rep)} products checked"


def criterion_12():
    gr3, gr7 = catalog.generate(3), catalog.generate(7)
    sep = (gradelib.parity_refined_type(gr3) == ((0, 4), (6, 0))
           and gradelib.parity_refined_type(gr7) == ((2, 2), (4, 2)))
    prints = [catalog.fingerprint(catalog.generate(eid)) for eid in range(1, 22)]
    return sep and len(set(prints)) == 21, f"{len(set(prints))} distinct fingerprints"


CRITERIA = [
    (1, "table fidelity", criterion_1, 1),
    (2, "construction fidelity", criterion_2, 1),
    (3, "catalog reproduction", criterion_3, 30),
    (4, "grading axioms", criterion_4, 30),
    (5, "oracle equivalence", criterion_5, 30),
    (6, "nontoral eigenvalues", criterion_6, 5),
    (7, "orbit relations", criterion_7, 5),
    (8, "cyclic completeness scan", criterion_8, 300),
    (9, "MAD desk check", criterion_9, 120),
    (10, "super-Jordan identity", criterion_10, 600),
    (11, "isomorphism", criterion_11, 60),
    (12, "distinguishers", criterion_12, 1),
]


def run_criterion(num, name, fn, limit):
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # an error counts as a failing line
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    in_time = elapsed < limit
    status = "PASS" if ok and in_time else "FAIL"
    line = f"[{status}] criterion {num:>2} {name}: {elapsed:.2f} s (limit {limit} s); {detail}"
    return ok, in_time, line


@pytest.mark.parametrize("num, name, fn, limit", CRITERIA, ids=[f"c{c[0]:02d}" for c in CRITERIA])
def test_criterion(num, name, fn, limit, capsys):
    ok, in_time, line = run_criterion(num, name, fn, limit)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line
    assert in_time, line


if __name__ == "__main__":
    failed = 0
    for c in CRITERIA:
        ok, in_time, line = run_criterion(*c)
        print(line, flush=True)
        failed += not (ok and in_time)
    sys.exit(1 if failed else 0)
