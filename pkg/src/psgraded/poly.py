"""Sparse Laurent polynomials over Z/p and series truncated in an extra variable t."""

from __future__ import annotations

import re
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import InputError

Exponent = tuple[int, ...]

_MAX_ENTRY = 2**31


@lru_cache(maxsize=256)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not (2 <= p < 2**31) or not is_prime(p):
        raise InputError(f"modulus must be a prime in [2, 2^31), got {p!r}")
    return p


class LaurentPoly:
    """Finite sum of ``c * x^a`` with ``a`` in Z^r and ``c`` a nonzero residue mod p.

    Instances are immutable; arithmetic returns new objects.
    """

    __slots__ = ("p", "r", "_terms", "_hash")

    def __init__(self, p: int, r: int, terms: Mapping[Sequence[int], int] | None = None):
        check_prime(p)
        if r < 0:
            raise InputError("variable count must be nonnegative")
        clean: dict[Exponent, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != r:
                raise InputError(f"exponent {e} has length {len(e)}, expected {r}")
            c = int(c) % p
            if c:
                clean[e] = (clean.get(e, 0) + c) % p
                if not clean[e]:
                    del clean[e]
        self.p = p
        self.r = r
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, p: int, r: int, terms: dict[Exponent, int]) -> LaurentPoly:
        # trusted constructor: keys are tuples of length r, values nonzero residues
        obj = cls.__new__(cls)
        obj.p = p
        obj.r = r
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, p: int, r: int) -> LaurentPoly:
        return cls(p, r)

    @classmethod
    def constant(cls, p: int, r: int, c: int = 1) -> LaurentPoly:
        return cls(p, r, {(0,) * r: c})

    @classmethod
    def monomial(cls, p: int, exponent: Sequence[int], c: int = 1) -> LaurentPoly:
        return cls(p, len(exponent), {tuple(exponent): c})

    @classmethod
    def variable(cls, p: int, r: int, i: int) -> LaurentPoly:
        e = [0] * r
        e[i] = 1
        return cls(p, r, {tuple(e): 1})

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return MappingProxyType(self._terms)

    def coeff(self, exponent: Sequence[int]) -> int:
        return self._terms.get(tuple(exponent), 0)

    def support(self) -> frozenset[Exponent]:
        return frozenset(self._terms)

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Terms in lexicographic order of exponent vectors."""
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __len__(self) -> int:
        return len(self._terms)

    def _check(self, other: LaurentPoly) -> None:
        if self.p != other.p or self.r != other.r:
            raise InputError(
                f"ring mismatch: (p={self.p}, r={self.r}) vs (p={other.p}, r={other.r})"
            )

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.p, self.r, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(p, self.r, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        p = self.p
        return LaurentPoly._raw(p, self.r, {e: p - c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: int) -> LaurentPoly:
        p = self.p
        c %= p
        if not c:
            return LaurentPoly._raw(p, self.r, {})
        return LaurentPoly._raw(p, self.r, {e: v * c % p for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        out: dict[Exponent, int] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = (out.get(e, 0) + ca * cb) % p
        return LaurentPoly._raw(p, self.r, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if not isinstance(n, int):
            raise InputError("only integer powers are supported")
        if n < 0:
            if not self.is_monomial():
                raise InputError("negative powers exist only for monomials")
            (a, c), = self._terms.items()
            return LaurentPoly._raw(self.p, self.r, {tuple(n * x for x in a): pow(c, n, self.p)})
        result = LaurentPoly.constant(self.p, self.r, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == LaurentPoly.constant(self.p, self.r, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.p == other.p and self.r == other.r and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.p, self.r, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly(p={self.p}, {format_poly(self)})"


def poly_add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    f._check(g)
    return f + g


def poly_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    f._check(g)
    return f * g


def support(f: LaurentPoly) -> frozenset[Exponent]:
    return f.support()


def frob_power(f: LaurentPoly, e: int) -> LaurentPoly:
    """``f ** (p**e)``, computed as the exponent map ``a -> p**e * a``.

    Coefficients are untouched because ``c**p == c`` in Z/p.
    """
    if e < 0:
        raise InputError("Frobenius exponent must be nonnegative")
    q = f.p**e
    return LaurentPoly._raw(
        f.p, f.r, {tuple(q * x for x in a): c for a, c in f._terms.items()}
    )


def partial_derivative(f: LaurentPoly, i: int) -> LaurentPoly:
    """Formal derivative in the i-th variable; valid for negative exponents too."""
    p = f.p
    out: dict[Exponent, int] = {}
    for a, c in f._terms.items():
        v = a[i] * c % p
        if v:
            b = list(a)
            b[i] -= 1
            out[tuple(b)] = v
    return LaurentPoly._raw(p, f.r, out)


def default_names(r: int) -> list[str]:
    if r <= 3:
        return ["x", "y", "z"][:r]
    return [f"x{i + 1}" for i in range(r)]


def format_poly(f: LaurentPoly, names: Sequence[str] | None = None) -> str:
    names = list(names) if names is not None else default_names(f.r)
    if f.is_zero():
        return "0"
    parts = []
    for e, c in sorted(f._terms.items(), reverse=True):
        mono = "*".join(
            n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k != 0
        )
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts)


_TERM_RE = re.compile(r"^([+-]?)(?:(\d+)(?:\*(?=.)|$))?(.*)$")


def parse_poly(text: str, names: Sequence[str], p: int) -> LaurentPoly:
    """Parse sums like ``3*x^2*y^-1 - z + 2`` into a LaurentPoly."""
    names = list(names)
    index = {n: i for i, n in enumerate(names)}
    r = len(names)
    out = LaurentPoly.zero(p, r)
    src = text.replace(" ", "")
    if not src:
        raise InputError("empty polynomial text")
    # exponent signs are masked so the split only sees term signs
    chunks = [c for c in re.split(r"(?=[+-])", src.replace("^-", "^~")) if c]
    for chunk in chunks:
        if chunk in "+-":
            raise InputError(f"dangling sign in {text!r}")
        chunk = chunk.replace("^~", "^-")
        m = _TERM_RE.match(chunk)
        if m is None:
            raise InputError(f"bad term {chunk!r}")
        sign, digits, rest = m.groups()
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        e = [0] * r
        if rest:
            for factor in rest.split("*"):
                if not factor:
                    raise InputError(f"bad term {chunk!r}")
                if factor.isdigit():
                    c *= int(factor)
                    continue
                base, caret, power = factor.partition("^")
                if caret and not power:
                    raise InputError(f"missing exponent in {factor!r}")
                if base not in index:
                    raise InputError(f"unknown variable {base!r}")
                try:
                    e[index[base]] += int(power) if power else 1
                except ValueError:
                    raise InputError(f"bad exponent in {factor!r}") from None
        elif not digits:
            raise InputError(f"bad term {chunk!r}")
        out = out + LaurentPoly(p, r, {tuple(e): c})
    return out


def poly_to_json(f: LaurentPoly, names: Sequence[str] | None = None) -> dict:
    names = list(names) if names is not None else default_names(f.r)
    if len(names) != f.r:
        raise InputError("variable name count does not match r")
    return {
        "p": f.p,
        "vars": names,
        "terms": [{"c": c, "e": list(e)} for e, c in f.sorted_terms()],
    }


def _terms_from_json(raw, p: int, r: int) -> LaurentPoly:
    if not isinstance(raw, list):
        raise InputError("'terms' must be a list")
    terms: dict[Exponent, int] = {}
    for t in raw:
        if not isinstance(t, dict) or "c" not in t or "e" not in t:
            raise InputError("each term needs 'c' and 'e'")
        c, e = t["c"], t["e"]
        if not isinstance(c, int) or isinstance(c, bool) or not (0 <= c < p):
            raise InputError(f"coefficient {c!r} not in [0, p)")
        if c == 0:
            raise InputError("zero coefficients are not allowed")
        if not isinstance(e, list) or len(e) != r:
            raise InputError(f"exponent {e!r} must be a list of length {r}")
        if any(not isinstance(x, int) or isinstance(x, bool) or abs(x) >= _MAX_ENTRY for x in e):
            raise InputError(f"exponent {e!r} must hold integers below 2^31 in size")
        if tuple(e) in terms:
            raise InputError(f"duplicate exponent {e!r}")
        terms[tuple(e)] = c
    return LaurentPoly(p, r, terms)


def _header_from_json(obj) -> tuple[int, list[str]]:
    if not isinstance(obj, dict):
        raise InputError("expected a JSON object")
    if "p" not in obj or "vars" not in obj:
        raise InputError("polynomial JSON needs 'p' and 'vars'")
    p = obj["p"]
    check_prime(p)
    names = obj["vars"]
    if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
        raise InputError("'vars' must be a list of strings")
    if len(set(names)) != len(names):
        raise InputError("variable names must be distinct")
    return p, names


def poly_from_json(obj) -> tuple[LaurentPoly, list[str]]:
    p, names = _header_from_json(obj)
    if "terms" not in obj:
        raise InputError("polynomial JSON needs 'terms'")
    return _terms_from_json(obj["terms"], p, len(names)), names


def ideal_to_json(gens: Sequence[LaurentPoly], p: int, names: Sequence[str]) -> dict:
    return {
        "p": p,
        "vars": list(names),
        "gens": [[{"c": c, "e": list(e)} for e, c in g.sorted_terms()] for g in gens],
    }


def ideal_from_json(obj) -> tuple[list[LaurentPoly], int, list[str]]:
    """Read either a single polynomial object or ``{"p", "vars", "gens": [terms, ...]}``."""
    p, names = _header_from_json(obj)
    if "gens" in obj:
        if not isinstance(obj["gens"], list):
            raise InputError("'gens' must be a list")
        gens = [_terms_from_json(g, p, len(names)) for g in obj["gens"]]
    elif "terms" in obj:
        gens = [_terms_from_json(obj["terms"], p, len(names))]
    else:
        raise InputError("ideal JSON needs 'gens' or 'terms'")
    return gens, p, names


class TruncatedSeries:
    """``c_0 + c_1 t + ... + c_{N-1} t^{N-1}`` modulo ``t^N`` with LaurentPoly coefficients."""

    __slots__ = ("p", "r", "coeffs")

    def __init__(self, p: int, r: int, coeffs: Iterable[LaurentPoly]):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise InputError("truncation order must be positive")
        for c in coeffs:
            if c.p != p or c.r != r:
                raise InputError("series coefficient lives in a different ring")
        self.p = p
        self.r = r
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def constant(cls, f: LaurentPoly, order: int) -> TruncatedSeries:
        zero = LaurentPoly.zero(f.p, f.r)
        return cls(f.p, f.r, [f] + [zero] * (order - 1))

    def _check(self, other: TruncatedSeries) -> None:
        if (self.p, self.r, self.order) != (other.p, other.r, other.order):
            raise InputError("series live in different rings or have different orders")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries(self.p, self.r, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        n = self.order
        out = [LaurentPoly.zero(self.p, self.r) for _ in range(n)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.p, self.r, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.p, self.r) == (other.p, other.r) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.r, self.coeffs))

    def __repr__(self) -> str:
        body = " + ".join(f"({format_poly(c)})*t^{i}" for i, c in enumerate(self.coeffs))
        return f"TruncatedSeries(p={self.p}, {body} + O(t^{self.order}))"
