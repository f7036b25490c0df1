"""Command-line interface.

Every command writes one JSON report to stdout (or ``--output``) and a short
summary to stderr. Exit codes: 0 pass or witness found, 1 verified false,
unknown or no witness, 2 input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
import warnings
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from . import binomial_toric as bt
from . import hasse_schmidt as hs
from . import modfin as mf
from .errors import EmptyIdealWarning, InputError
from .grading import certificate_to_json, is_lambda_homogeneous, pseudo_graded_certificate
from .lattice import IntegerLattice, LinearForm, lattice_from_json, lattice_of_ideal, lattice_to_json
from .poly import (
    LaurentPoly,
    check_prime,
    default_names,
    format_poly,
    ideal_from_json,
    parse_poly,
    poly_from_json,
    poly_to_json,
)
from .randgen import random_form, random_homogeneous, random_poly, trial_rng

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
VERDICTS = ("pass", "fail", "unknown")


@dataclass
class RunReport:
    command: str
    inputs_digest: str
    verdict: str
    seed: int
    certificates: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    result: Any = None

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise InputError(f"unknown verdict {self.verdict!r}")
        if self.verdict == "fail" and not self.counterexamples:
            raise InputError("a failing report needs a counterexample")

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "verdict": self.verdict,
            "seed": self.seed,
            "certificates": self.certificates,
            "counterexamples": self.counterexamples,
            "result": self.result,
        }

    @classmethod
    def from_json(cls, obj) -> RunReport:
        if not isinstance(obj, dict):
            raise InputError("report must be a JSON object")
        try:
            return cls(
                command=obj["command"],
                inputs_digest=obj["inputs_digest"],
                verdict=obj["verdict"],
                seed=obj["seed"],
                certificates=obj["certificates"],
                counterexamples=obj["counterexamples"],
                result=obj["result"],
            )
        except KeyError as exc:
            raise InputError(f"report missing field {exc}") from None


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _digest(command: str, params: dict, data) -> str:
    blob = json.dumps({"command": command, "params": params, "input": data}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


# ---------------------------------------------------------------- input helpers


def _read_input(args, required: bool = True):
    if args.input:
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc}") from None
    elif required:
        text = sys.stdin.read()
    else:
        return None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None


def _int_list(text: str, name: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise InputError(f"--{name} expects comma-separated integers, got {text!r}") from None


def _rows(text: str) -> list[list[int]]:
    return [_int_list(chunk, "rows") for chunk in text.split(";") if chunk.strip()]


def _lambda(args, required: bool) -> LinearForm | None:
    if args.lam is None:
        if required:
            raise InputError("--lambda is required for this command")
        return None
    return LinearForm(tuple(_int_list(args.lam, "lambda")))


def _primes(args, default) -> list[int]:
    ps = [args.p] if args.p is not None else list(default)
    for p in ps:
        check_prime(p)
    return ps


def _var_names(args, r: int | None) -> list[str]:
    if args.vars is None:
        if r is None:
            raise InputError("--vars is required")
        return default_names(r)
    if args.vars.isdigit():
        return default_names(int(args.vars))
    names = [v for v in args.vars.split(",") if v]
    if len(set(names)) != len(names):
        raise InputError("variable names must be distinct")
    return names


def _mismatch_entry(inputs: dict, lhs: LaurentPoly, rhs: LaurentPoly) -> dict | None:
    mm = hs.first_mismatch(lhs, rhs)
    if mm is None:
        return None
    a, x, y = mm
    return {"inputs": inputs, "lhs_term": [list(a), x], "rhs_term": [list(a), y]}


def _poly_json(f: LaurentPoly, names=None) -> dict:
    return poly_to_json(f, names)


# ---------------------------------------------------------------- commands


def cmd_lattice(args) -> tuple[RunReport, str]:
    data = _read_input(args)
    gens, p, names = ideal_from_json(data)
    L = lattice_of_ideal(gens, len(names))
    result = {"r": L.r, "rank": L.rank, "hnf": [list(v) for v in L.basis]}
    report = RunReport("lattice", _digest("lattice", {}, data), "pass", args.seed, result=result)
    return report, f"rank {L.rank} in Z^{L.r}"


def cmd_pseudo_graded(args) -> tuple[RunReport, str]:
    data = _read_input(args)
    gens, p, names = ideal_from_json(data)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", EmptyIdealWarning)
        lam = pseudo_graded_certificate(gens, len(names))
    cert = certificate_to_json(gens, lam)
    if any(issubclass(w.category, EmptyIdealWarning) for w in caught):
        cert["warning"] = "zero ideal: certificate is vacuous"
    verdict = "pass" if lam is not None else "unknown"
    L = lattice_of_ideal(gens, len(names))
    report = RunReport(
        "pseudo-graded",
        _digest("pseudo-graded", {}, data),
        verdict,
        args.seed,
        certificates=cert,
        result={"rank": L.rank, "r": L.r},
    )
    summary = f"pseudo-graded with lambda={cert['lambda']}" if lam else "unknown: lattice has full rank"
    return report, summary


def _hs_apply(args) -> tuple[RunReport, str]:
    lam = _lambda(args, required=True)
    if args.poly is not None:
        names = _var_names(args, lam.r)
        if args.p is None:
            raise InputError("--p is required with --poly")
        f = parse_poly(args.poly, names, check_prime(args.p))
        data = {"poly": args.poly, "p": args.p, "vars": names}
    else:
        data = _read_input(args)
        f, names = poly_from_json(data)
    n = 1 if args.order is None else args.order
    h = hs.HSFamily(lam, f.p)
    g = hs.hs_apply(h, n, f)
    params = {"lambda": list(lam.l), "order": n}
    report = RunReport(
        "hs apply",
        _digest("hs apply", params, data),
        "pass",
        args.seed,
        result={"lambda": list(lam.l), "order": n, "output": _poly_json(g, names), "text": format_poly(g, names)},
    )
    return report, f"H_{n}(f) = {format_poly(g, names)}"


def _sweep(args, identity: str, primes_default, body: Callable) -> tuple[RunReport, str]:
    """Run ``body(rng, p, r, lam_or_None)`` per trial; it returns a failure dict or None."""
    lam = _lambda(args, required=False)
    r = lam.r if lam is not None else (int(args.vars) if args.vars and args.vars.isdigit() else 3)
    primes = _primes(args, primes_default)
    trials = args.trials
    if trials < 0:
        raise InputError("--trials must be nonnegative")
    failures = []
    for p in primes:
        for t in range(trials):
            rng = trial_rng(args.seed, identity, p, t)
            fail = body(rng, p, r, lam)
            if fail is not None:
                failures.append(fail)
    params = {
        "lambda": None if lam is None else list(lam.l),
        "primes": primes,
        "r": r,
        "trials": trials,
        "max_deg": args.max_deg,
        "order": args.order,
    }
    verdict = "fail" if failures else "pass"
    report = RunReport(
        f"hs {identity}",
        _digest(f"hs {identity}", params, None),
        verdict,
        args.seed,
        counterexamples=failures,
        result={"identity": identity, "trials": trials * len(primes), "failures": failures},
    )
    return report, f"{identity}: {trials * len(primes)} trials, {len(failures)} failures"


def _pick_form(rng, r, lam):
    return lam if lam is not None else random_form(rng, r)


def _hs_leibniz(args):
    max_n = 6 if args.order is None else args.order

    def body(rng, p, r, lam):
        lam = _pick_form(rng, r, lam)
        h = hs.HSFamily(lam, p)
        f = random_poly(rng, p, r, args.max_deg)
        g = random_poly(rng, p, r, args.max_deg)
        n = rng.randint(0, max_n)
        lhs, rhs = hs.leibniz_sides(h, n, f, g)
        inputs = {"p": p, "lambda": list(lam.l), "n": n, "f": _poly_json(f), "g": _poly_json(g)}
        return _mismatch_entry(inputs, lhs, rhs)

    return _sweep(args, "leibniz", (2, 3, 5), body)


def _hs_phi(args):
    N = hs.DEFAULT_ORDER if args.order is None else args.order
    if N <= 0:
        raise InputError("--order must be positive")

    def body(rng, p, r, lam):
        lam = _pick_form(rng, r, lam)
        h = hs.HSFamily(lam, p)
        f = random_poly(rng, p, r, args.max_deg)
        g = random_poly(rng, p, r, args.max_deg)
        inputs = {"p": p, "lambda": list(lam.l), "N": N, "f": _poly_json(f), "g": _poly_json(g)}
        lhs = hs.phi_automorphism(h, f * g, N)
        rhs = hs.phi_automorphism(h, f, N) * hs.phi_automorphism(h, g, N)
        for l, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
            entry = _mismatch_entry(dict(inputs, t_power=l), a, b)
            if entry:
                return entry
        return _mismatch_entry(dict(inputs, t_power=0), lhs.coeffs[0], f * g)

    return _sweep(args, "phi", (2, 3, 5), body)


def _hs_hsfrob(args):
    def body(rng, p, r, lam):
        lam = _pick_form(rng, r, lam)
        h = hs.HSFamily(lam, p)
        a = random_poly(rng, p, r, args.max_deg)
        b = random_poly(rng, p, r, args.max_deg)
        lhs, rhs = hs.hsfrob_sides(h, a, b)
        inputs = {"p": p, "lambda": list(lam.l), "a": _poly_json(a), "b": _poly_json(b)}
        return _mismatch_entry(inputs, lhs, rhs)

    return _sweep(args, "hsfrob", (2, 3), body)


def _hs_eigen(args):
    _lambda(args, required=True)
    max_n = hs.DEFAULT_ORDER if args.order is None else args.order

    def body(rng, p, r, lam):
        h = hs.HSFamily(lam, p)
        f = random_homogeneous(rng, lam, p, max_deg=args.max_deg)
        n = rng.randint(0, max_n)
        w = is_lambda_homogeneous(lam, f).weight
        lhs = hs.hs_apply(h, n, f)
        rhs = f.scale(hs.gen_binomial_mod_p(w, n, p))
        inputs = {"p": p, "lambda": list(lam.l), "n": n, "f": _poly_json(f)}
        return _mismatch_entry(inputs, lhs, rhs)

    return _sweep(args, "eigen", (2, 3, 5), body)


def _hs_finv(args) -> tuple[RunReport, str]:
    lam = _lambda(args, required=True)
    primes = _primes(args, (2, 3, 5))
    bound = 3 if args.window is None else args.window
    if bound < 0:
        raise InputError("--window must be nonnegative")
    failures = []
    count = 0
    for p in primes:
        h = hs.HSFamily(lam, p)
        window = list(hs.box_window(lam.r, bound))
        count += len(window)
        for a in hs.f_invariance_defects(h, window):
            mono = LaurentPoly.monomial(p, a)
            lhs = hs.delta_power(lam, mono, p)
            rhs = hs.delta_lambda(lam, mono)
            failures.append(_mismatch_entry({"p": p, "exponent": list(a)}, lhs, rhs))
    params = {"lambda": list(lam.l), "primes": primes, "window": bound}
    report = RunReport(
        "hs finv",
        _digest("hs finv", params, None),
        "fail" if failures else "pass",
        args.seed,
        counterexamples=failures,
        result={"identity": "finv", "trials": count, "failures": failures},
    )
    return report, f"finv: {count} monomials, {len(failures)} failures"


HS_COMMANDS = {
    "apply": _hs_apply,
    "leibniz": _hs_leibniz,
    "finv": _hs_finv,
    "phi": _hs_phi,
    "hsfrob": _hs_hsfrob,
    "eigen": _hs_eigen,
}


def cmd_hs(args):
    return HS_COMMANDS[args.sub](args)


def _lattice_arg(args) -> tuple[IntegerLattice, Any]:
    if args.rows is not None:
        rows = _rows(args.rows)
        r = args.r if args.r is not None else (len(rows[0]) if rows else None)
        if r is None:
            raise InputError("--r is required for an empty lattice")
        data = {"r": r, "rows": rows}
        return lattice_from_json(data)[0], data
    data = _read_input(args)
    if isinstance(data, dict) and "lattice" in data:
        return lattice_from_json(data["lattice"])[0], data
    return lattice_from_json(data)[0], data



def _binomial_json(J: bt.BinomialIdeal) -> list:
    names = default_names(J.r)
    out = []
    for plus, minus in J.generators:
        f = LaurentPoly(2, J.r, {plus: 1})
        g = LaurentPoly(2, J.r, {minus: 1})
        out.append(
            {"plus": list(plus), "minus": list(minus), "text": f"{format_poly(f, names)} - {format_poly(g, names)}"}
        )
    return out


def cmd_toric(args) -> tuple[RunReport, str]:
    if args.sub == "from-lattice":
        L, data = _lattice_arg(args)
        J = bt.binomial_ideal_from_lattice(L)
        result = {
            "r": L.r,
            "binomials": _binomial_json(J),
            "lattice": lattice_to_json(L),
            "saturated": L.is_saturated(),
            "kind": "binomial",
        }
        report = RunReport("toric from-lattice", _digest("toric from-lattice", {}, data), "pass", args.seed, result=result)
        return report, f"{len(J.generators)} binomials"
    if args.sub == "dimension":
        if args.rows is None:
            data = _read_input(args)
            if isinstance(data, dict) and "parametrization" in data:
                c = data["parametrization"]
                if not isinstance(c, list) or not all(isinstance(row, list) for row in c):
                    raise InputError("'parametrization' must be a list of integer lists")
                L = bt.parametrization_lattice(c)
            else:
                L = lattice_from_json(data.get("lattice", data) if isinstance(data, dict) else data)[0]
        else:
            L, data = _lattice_arg(args)
        d = bt.toric_dimension(L)
        result = {"r": L.r, "rank": L.rank, "dimension": d, "saturated": L.is_saturated()}
        report = RunReport("toric dimension", _digest("toric dimension", {}, data), "pass", args.seed, result=result)
        return report, f"dimension {d}"
    # corollary
    if (args.d, args.r, args.m) != (None, None, None):
        if None in (args.d, args.r, args.m):
            raise InputError("corollary needs all of --d, --r and --m, or an instance file")
        ok = bt.corollary_arithmetic(args.d, args.r, args.m)
        result = {
            "d": args.d,
            "hypothesis_r(m-1)<d": ok,
            "refined_bound": None,
            "refined_hypothesis": None,
            "lattice_rank": None,
            "applicable": ok,
            "lambda": None,
            "toric_saturated": None,
        }
        params = {"d": args.d, "r": args.r, "m": args.m}
        report = RunReport(
            "toric corollary", _digest("toric corollary", params, None), "pass" if ok else "unknown", args.seed, result=result
        )
        return report, f"r(m-1) = {args.r * (args.m - 1)} {'<' if ok else '>='} d = {args.d}"
    data = _read_input(args)
    if not isinstance(data, dict):
        raise InputError("corollary input must be an object")
    try:
        toric = lattice_from_json(data["toric"])[0]
        p = data["p"]
        m = data["m"]
        raw_maps = data["maps"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"corollary input missing field {exc}") from None
    names = data.get("vars") or default_names(toric.r)
    fs, _, _ = ideal_from_json({"p": p, "vars": names, "gens": raw_maps})
    mp = bt.MonomialMapData.from_polys(fs, m)
    theta = lattice_from_json(data["theta"])[0] if data.get("theta") else None
    rep = bt.corollary_applicability(None, toric.r, mp, theta, toric_lattice=toric)
    certs = {} if rep.lam is None else {"lambda": list(rep.lam.l)}
    if rep.lam is not None:
        gens = bt.binomial_ideal_from_lattice(toric).polys(p) + list(fs)
        certs["weights"] = certificate_to_json(gens, rep.lam)["weights"]
    report = RunReport(
        "toric corollary",
        _digest("toric corollary", {}, data),
        "pass" if rep.applicable else "unknown",
        args.seed,
        certificates=certs,
        result=rep.to_json(),
    )
    return report, f"d={rep.d}, applicable={rep.applicable}"


def _module_arg(args) -> tuple[mf.FiniteModule, Any]:
    if args.module:
        kind, _, spec = args.module.partition(":")
        nums = _int_list(spec, "module")
        if kind in ("regular", "residue") and len(nums) == 3:
            A = mf.make_truncated_algebra(check_prime(nums[0]), nums[1], nums[2])
            M = mf.FiniteModule.regular(A) if kind == "regular" else mf.FiniteModule.residue_field(A)
        elif kind == "trivial" and len(nums) == 4:
            A = mf.make_truncated_algebra(check_prime(nums[0]), nums[1], nums[2])
            M = mf.FiniteModule.trivial(A, nums[3])
        else:
            raise InputError("--module expects regular:P,R,N, residue:P,R,N or trivial:P,R,N,M")
        return M, {"module": args.module}
    data = _read_input(args)
    return mf.module_from_json(data), data


def _matrix_arg(text: str) -> np.ndarray:
    rows = _rows(text)
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise InputError("--matrix must be a rectangular 'a,b;c,d' list")
    return np.array(rows, dtype=np.int64)


def _mat(a) -> list:
    return np.asarray(a).tolist()


def cmd_module(args) -> tuple[RunReport, str]:
    M, data = _module_arg(args)
    p = M.p
    sub = args.sub
    params = {"bound": args.bound, "matrix": args.matrix, "budget": args.budget}
    digest = _digest(f"module {sub}", params, data)
    if sub == "endos":
        basis = mf.endomorphism_algebra(M)
        report = RunReport("module endos", digest, "pass", args.seed, result={"dim": len(basis), "basis": [_mat(b) for b in basis]})
        return report, f"End(M) has dimension {len(basis)}"
    if sub == "frobenius":
        F = mf.frobenius_transform(M)
        report = RunReport("module frobenius", digest, "pass", args.seed, result=mf.module_to_json(F))
        return report, f"Frobenius transform of a module of dimension {M.dim}"
    if sub == "ks":
        ks = mf.ks_kernel(M)
        der = mf.derivations(M.algebra)
        report = RunReport(
            "module ks",
            digest,
            "pass",
            args.seed,
            result={"dim": len(ks), "basis": [_mat(D) for D in ks], "derivations_dim": len(der)},
        )
        return report, f"KS kernel of dimension {len(ks)} inside Der of dimension {len(der)}"
    if sub == "idempotent":
        e = mf.find_idempotent(M, seed=args.seed, budget=args.budget)
        if e is None:
            cert = mf.certify_indecomposable(M)
            report = RunReport("module idempotent", digest, "unknown", args.seed, result={"idempotent": None, "certified_indecomposable": cert})
            return report, "no nontrivial idempotent" + (" (certified)" if cert else " within the search budget")
        report = RunReport("module idempotent", digest, "pass", args.seed, certificates={"idempotent": _mat(e)}, result={"idempotent": _mat(e)})
        return report, "found a nontrivial idempotent"
    if sub == "fdecomp":
        bound = 3 if args.bound is None else args.bound
        found = mf.f_decomposable_upto(M, bound, seed=args.seed, budget=args.budget)
        if found is None:
            report = RunReport("module fdecomp", digest, "unknown", args.seed, result={"level": None, "bound": bound})
            return report, f"no decomposition up to level {bound}"
        level, e = found
        report = RunReport(
            "module fdecomp", digest, "pass", args.seed,
            certificates={"idempotent": _mat(e)}, result={"level": level, "bound": bound, "idempotent": _mat(e)},
        )
        return report, f"decomposable at Frobenius level {level}"
    # artin-schreier
    if args.matrix is not None:
        f = _matrix_arg(args.matrix)
        source = "matrix"
    else:
        f = mf.skew_derivation_solve(M, mf.euler_derivation(M.algebra))
        if f is None:
            raise InputError("Euler derivation has no skew derivation on this module; pass --matrix")
        source = "euler skew derivation"
    try:
        e = mf.artin_schreier_idempotent(M, f)
    except mf.ArtinSchreierObstruction as exc:
        report = RunReport("module artin-schreier", digest, "unknown", args.seed, result={"obstruction": str(exc), "f": _mat(f)})
        return report, f"obstruction: {exc}"
    F = mf.frobenius_transform(M)
    nontrivial = mf.is_nontrivial_idempotent(e, p)
    result = {
        "f": _mat(f),
        "source": source,
        "idempotent": _mat(e),
        "nontrivial": nontrivial,
        "commutes_with_frobenius_actions": mf.commutes_with_actions(e, F),
    }
    verdict = "pass" if nontrivial else "unknown"
    certs = {"idempotent": _mat(e)} if nontrivial else {}
    report = RunReport("module artin-schreier", digest, verdict, args.seed, certificates=certs, result=result)
    return report, "nontrivial idempotent" if nontrivial else "idempotent is trivial"


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="input JSON file (default: stdin)")
    common.add_argument("--output", help="write the JSON report here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="suppress the stderr summary")

    parser = argparse.ArgumentParser(prog="psgraded", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("lattice", parents=[common], help="HNF basis and rank of the support lattice")
    sub.add_parser("pseudo-graded", parents=[common], help="grading certificate for an ideal")

    p_hs = sub.add_parser("hs", parents=[common], help="Hasse-Schmidt identities")
    p_hs.add_argument("sub", choices=sorted(HS_COMMANDS))
    p_hs.add_argument("--lambda", dest="lam")
    p_hs.add_argument("--order", type=int)
    p_hs.add_argument("--p", type=int)
    p_hs.add_argument("--vars")
    p_hs.add_argument("--poly")
    p_hs.add_argument("--trials", type=int, default=200)
    p_hs.add_argument("--max-deg", type=int, default=4)
    p_hs.add_argument("--window", type=int)

    p_tor = sub.add_parser("toric", parents=[common], help="binomial ideals and rank hypotheses")
    p_tor.add_argument("sub", choices=["from-lattice", "dimension", "corollary"])
    p_tor.add_argument("--rows", help="lattice generators as 'a,b,c;d,e,f'")
    p_tor.add_argument("--r", type=int)
    p_tor.add_argument("--d", type=int)
    p_tor.add_argument("--m", type=int)

    p_mod = sub.add_parser("module", parents=[common], help="finite modules over truncated algebras")
    p_mod.add_argument("sub", choices=["endos", "idempotent", "frobenius", "ks", "artin-schreier", "fdecomp"])
    p_mod.add_argument("--module", help="regular:P,R,N | residue:P,R,N | trivial:P,R,N,M")
    p_mod.add_argument("--matrix", help="operator f as 'a,b;c,d'")
    p_mod.add_argument("--bound", type=int)
    p_mod.add_argument("--budget", type=int, default=50)
    return parser


COMMANDS = {
    "lattice": cmd_lattice,
    "pseudo-graded": cmd_pseudo_graded,
    "hs": cmd_hs,
    "toric": cmd_toric,
    "module": cmd_module,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    t0 = time.perf_counter()
    try:
        report, summary = COMMANDS[args.command](args)
    except (InputError, ValueError, TypeError, KeyError, IndexError, AttributeError) as exc:
        print(f"psgraded: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = dump_json(report.to_json())
    if args.output:
        try:
            with open(args.output, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"psgraded: cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_INPUT
    else:
        sys.stdout.write(text)
    if not args.json:
        elapsed = time.perf_counter() - t0
        print(f"[{report.verdict}] {report.command}: {summary} ({elapsed:.3f}s)", file=sys.stderr)
    return EXIT_PASS if report.verdict == "pass" else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
