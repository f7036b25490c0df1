"""Acceptance criteria, one test each, with their time limits.

Each test prints a ``PASS``/``FAIL`` line; the lines are also collected and
repeated in the pytest terminal summary.
"""

import itertools
import json
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np

from conftest import ACCEPTANCE_LINES
from psgraded import modfin as mf
from psgraded.binomial_toric import (
    MonomialMapData,
    binomial_ideal_from_lattice,
    corollary_applicability,
    parametrization_lattice,
    toric_dimension,
)
from psgraded.cli import RunReport, dump_json, main
from psgraded.grading import is_lambda_homogeneous, pseudo_graded_certificate, verify_lambda_ideal
from psgraded.hasse_schmidt import (
    HSFamily,
    box_window,
    delta_lambda,
    delta_lambda_via_partials,
    f_invariance_defects,
    gen_binomial,
    gen_binomial_mod_p,
    phi_automorphism,
    verify_hsfrob_identity,
    verify_leibniz,
)
from psgraded.lattice import LinearForm, hnf, lattice_of_poly, pseudo_m_nomial_check
from psgraded.poly import parse_poly
from psgraded.randgen import random_form, random_poly, trial_rng
from test_lattice import rational_rank
from test_modfin import module_pairs, truncation


@contextmanager
def criterion(number, title, limit):
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - t0
        ok = ok and elapsed < limit
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {title} ({elapsed:.2f}s, limit {limit}s)"
        ACCEPTANCE_LINES.append(line)
        print(line)
    assert elapsed < limit, f"criterion {number} took {elapsed:.2f}s, limit {limit}s"


def test_c01_trinomial_lattice():
    with criterion(1, "trinomial lattice and certificate", 1):
        f = parse_poly("x^2*z^4 + x*y^2*z^2 + y^4", ["x", "y", "z"], 3)
        L = lattice_of_poly(f)
        assert L == hnf([(1, -2, 2)], 3) and L.rank == 1
        assert pseudo_m_nomial_check(f, 2)
        lam = pseudo_graded_certificate([f])
        assert lam is not None
        assert len({lam(a) for a in f.support()}) == 1
        assert is_lambda_homogeneous(lam, f) is not None


def _pair(rng, p, max_deg=4):
    r = rng.randint(1, 3)
    return r, random_poly(rng, p, r, max_deg), random_poly(rng, p, r, max_deg)


def test_c02_hasse_schmidt_leibniz():
    with criterion(2, "higher Leibniz rule, 500 triples per prime", 10):
        for p in (2, 3, 5):
            for t in range(500):
                rng = trial_rng(0, "c02", p, t)
                r, f, g = _pair(rng, p)
                h = HSFamily(random_form(rng, r), p)
                assert verify_leibniz(h, rng.randint(0, 6), f, g), (p, t)


def test_c03_delta_two_ways():
    with criterion(3, "eigenvalue formula equals sum l_i x_i d_i", 2):
        for p in (2, 3, 5):
            for t in range(200):
                rng = trial_rng(0, "c03", p, t)
                r = rng.randint(1, 3)
                lam = random_form(rng, r)
                f = random_poly(rng, p, r)
                assert delta_lambda(lam, f) == delta_lambda_via_partials(lam, f), (p, t)


def test_c04_f_invariance():
    with criterion(4, "Delta^p = Delta on |a_i| <= 3, all forms in [-3,3]^3", 5):
        window = list(box_window(3, 3))
        for p in (2, 3, 5):
            for lam in itertools.product(range(-3, 4), repeat=3):
                if any(lam):
                    assert not f_invariance_defects(HSFamily(LinearForm(lam), p), window), (p, lam)


def _falling(z, d):
    out = Fraction(1)
    for i in range(d):
        out *= Fraction(z - i, i + 1)
    return out


def test_c05_binomial_identities():
    with criterion(5, "Pascal, Chu-Vandermonde, factorial and Lucas agreement", 5):
        grid = range(-20, 21)
        table = {(z, d): gen_binomial(z, d) for z in range(-41, 42) for d in range(11)}
        for z in grid:
            for d in range(1, 11):
                assert table[z + 1, d] == table[z, d] + table[z, d - 1]
        for v, w in itertools.product(grid, grid):
            for n in range(11):
                assert table[v + w, n] == sum(table[v, k] * table[w, n - k] for k in range(n + 1))
        for z in range(0, 21):
            for d in range(11):
                assert table[z, d] == (_falling(z, d) if d <= z else 0)
        for z in grid:
            for d in range(11):
                assert table[z, d] == _falling(z, d)
                for p in (2, 3, 5, 7):
                    assert gen_binomial_mod_p(z, d, p) == table[z, d] % p


def test_c06_phi_automorphism():
    with criterion(6, "Phi multiplicative mod t^8 and identity mod t", 5):
        for p in (2, 3, 5):
            for t in range(100):
                rng = trial_rng(0, "c06", p, t)
                r, f, g = _pair(rng, p)
                h = HSFamily(random_form(rng, r), p)
                lhs = phi_automorphism(h, f * g, 8)
                assert lhs == phi_automorphism(h, f, 8) * phi_automorphism(h, g, 8), (p, t)
                assert lhs.coeffs[0] == f * g


def test_c07_hsfrob_identity():
    with criterion(7, "H_p(a^p b) = a^p H_p(b) + H_1(a)^p b", 5):
        for p in (2, 3):
            for t in range(200):
                rng = trial_rng(0, "c07", p, t)
                r, a, b = _pair(rng, p)
                assert verify_hsfrob_identity(HSFamily(random_form(rng, r), p), a, b), (p, t)


def test_c08_toric_dimension():
    with criterion(8, "r - rank equals parametrization rank on 100 presentations", 5):
        for t in range(100):
            rng = trial_rng(0, "c08", t)
            r, u = rng.randint(1, 4), rng.randint(1, 4)
            c = [[rng.randint(0, 4) for _ in range(u)] for _ in range(r)]
            assert toric_dimension(parametrization_lattice(c)) == rational_rank(c), c


def _instance(s, toric_row, images, m):
    names = [f"z{i + 1}" for i in range(s)]
    toric = hnf([toric_row], s)
    fs = [parse_poly(text, names, 3) for text in images]
    rep = corollary_applicability(None, s, MonomialMapData.from_polys(fs, m), toric_lattice=toric)
    gens = binomial_ideal_from_lattice(toric).polys(3) + fs
    return rep, gens


def test_c09_corollary_applicability():
    with criterion(9, "rank hypotheses on d=4, d=5 and boundary d=3", 1):
        rep, gens = _instance(5, (1, 1, -1, -1, 0), ["z1 + z2 + z3 + z5"], 4)
        assert rep.d == 4 and rep.applicable and verify_lambda_ideal(rep.lam, gens)
        rep, gens = _instance(6, (1, 1, -1, -1, 0, 0), ["z1 + z2 + z3", "z4 + z5 + z6"], 3)
        assert rep.d == 5 and rep.applicable and verify_lambda_ideal(rep.lam, gens)
        rep, _ = _instance(4, (1, 1, -1, -1), ["z1 + z2 + z3 + z4"], 4)
        assert rep.d == 3 and not rep.applicable and rep.lam is None


def test_c10_ks_kernel_of_direct_sum():
    with criterion(10, "KS kernel of a sum is the intersection", 5):
        pairs = module_pairs()
        assert len(pairs) >= 10
        for P, Q in pairs:
            A, p = P.algebra, P.p
            assert A.dim <= 6
            shape = (A.dim, A.dim)
            both = mf.subspace_basis(mf.ks_kernel(mf.direct_sum(P, Q)), p, shape)
            meet = mf.intersect_subspaces(
                mf.subspace_basis(mf.ks_kernel(P), p, shape), mf.subspace_basis(mf.ks_kernel(Q), p, shape), p
            )
            assert np.array_equal(both, meet)


def test_c11_frobenius_idempotents():
    with criterion(11, "Frobenius transform, Artin-Schreier and residue field", 2):
        A = mf.make_truncated_algebra(2, 1, 2)
        M = mf.FiniteModule.regular(A)
        F = mf.frobenius_transform(M)
        assert F.dim == M.dim
        e = mf.find_idempotent(F)
        assert mf.is_nontrivial_idempotent(e, 2) and mf.commutes_with_actions(e, F)
        assert np.count_nonzero(e - np.diag(np.diag(e))) == 0
        f = mf.skew_derivation_solve(M, mf.euler_derivation(A))
        e = mf.artin_schreier_idempotent(M, f)
        assert np.array_equal(e, np.diag([0, 1]))
        assert mf.is_nontrivial_idempotent(e, 2) and mf.commutes_with_actions(e, F)
        k = mf.FiniteModule.residue_field(A)
        assert mf.f_decomposable_upto(k, 3) is None
        N = k
        for _ in range(3):
            N = mf.frobenius_transform(N)
            assert N.dim == k.dim
        for B in (A, mf.make_truncated_algebra(3, 2, 3)):
            G = truncation(B, 2)
            assert mf.frobenius_transform(G).dim == G.dim


CLI_CASES = [
    (["lattice"], "trinomial", 0),
    (["pseudo-graded"], "trinomial", 0),
    (["pseudo-graded"], "line", 1),
    (["hs", "leibniz", "--p", "3", "--trials", "500"], None, 0),
    (["hs", "apply", "--lambda", "1", "--order", "2", "--poly", "x^3+x", "--p", "5"], None, 0),
    (["hs", "finv", "--lambda", "2,1,0", "--p", "2"], None, 0),
    (["hs", "phi"], None, 0),
    (["hs", "hsfrob"], None, 0),
    (["hs", "eigen", "--lambda", "1,2,-1"], None, 0),
    (["hs", "eigen"], None, 2),
    (["toric", "from-lattice", "--rows", "1,1,-2"], None, 0),
    (["toric", "dimension", "--rows", "1,-2,2"], None, 0),
    (["toric", "corollary", "--d", "4", "--r", "1", "--m", "4"], None, 0),
    (["toric", "corollary", "--d", "3", "--r", "1", "--m", "4"], None, 1),
    (["module", "idempotent", "--module", "trivial:2,1,2,2"], None, 0),
    (["module", "idempotent", "--module", "regular:2,1,2"], None, 1),
    (["module", "fdecomp", "--module", "regular:2,1,2", "--bound", "2"], None, 0),
    (["module", "fdecomp", "--module", "residue:2,1,2"], None, 1),
    (["module", "artin-schreier", "--module", "regular:2,1,2"], None, 0),
    (["module", "endos", "--module", "regular:3,2,3"], None, 0),
    (["module", "frobenius", "--module", "regular:2,1,4"], None, 0),
    (["module", "ks", "--module", "regular:3,1,3"], None, 0),
    (["lattice"], "broken", 2),
    (["pseudo-graded"], "badcoef", 2),
    (["module", "endos"], "broken", 2),
    (["toric", "dimension"], "list", 2),
    (["module", "endos", "--module", "regular:6,1,2"], None, 2),
]

INPUTS = {
    "trinomial": json.dumps(
        {"p": 5, "vars": ["x", "y", "z"], "gens": [[{"c": 1, "e": [2, 0, 4]}, {"c": 1, "e": [1, 2, 2]}, {"c": 1, "e": [0, 4, 0]}]]}
    ),
    "line": json.dumps({"p": 3, "vars": ["x", "y"], "gens": [[{"c": 1, "e": [1, 0]}, {"c": 1, "e": [0, 1]}, {"c": 1, "e": [0, 0]}]]}),
    "broken": '{"p": 5, "vars": [',
    "badcoef": json.dumps({"p": 5, "vars": ["x"], "gens": [[{"c": 5, "e": [1]}]]}),
    "list": "[1, 2, 3]",
}


def test_c12_cli_contract(tmp_path, capsys):
    with criterion(12, "CLI exit codes, determinism, round trip, malformed input", 30):
        slowest = 0.0
        for argv, key, want in CLI_CASES:
            args = list(argv)
            if key is not None:
                path = tmp_path / f"{key}.json"
                path.write_text(INPUTS[key])
                args += ["--input", str(path)]
            outs = []
            for _ in range(2):
                t0 = time.perf_counter()
                code = main(args + ["--seed", "3"])
                slowest = max(slowest, time.perf_counter() - t0)
                out, err = capsys.readouterr()
                assert code == want, (args, code, err)
                outs.append(out)
            assert outs[0] == outs[1], args
            if want == 2:
                assert outs[0] == "" and "input error" in err
            else:
                text = outs[0]
                rep = RunReport.from_json(json.loads(text))
                assert dump_json(rep.to_json()) == text
                assert rep.verdict != "fail" or rep.counterexamples
        assert slowest < 1.0, f"slowest command took {slowest:.2f}s"
