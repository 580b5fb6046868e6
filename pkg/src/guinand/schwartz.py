"""Closed algebra of test functions sum_i p_i(t) * exp(-pi * a_i * t^2).

Polynomial-times-Gaussian functions are Schwartz functions, and the family
is closed under differentiation, multiplication by polynomials, parity
operations, and the Fourier transform with the convention

    fhat(xi) = integral f(x) exp(-2 pi i x xi) dx,

for which exp(-pi a t^2) maps to a^(-1/2) exp(-pi xi^2 / a) and
multiplication by t maps to (i / 2 pi) d/dxi.  That closure is the whole
point: every operation here returns another GaussPoly, so identities can be
evaluated without any numerical transform.

Coefficients are complex doubles by default.  ``exact=True`` switches the
term coefficients to :class:`PiScalar` (Gaussian-rational combinations of
integer powers of pi) and the scales to Fractions; differentiation and the
Fourier transform then stay exact as long as every scale has a rational
square root, which is what the coefficient-level identity tests use.

``parse`` reads the tiny expression grammar used by the command line:

    expr   := ['-'] term (('+'|'-') term)*
    term   := unary (('*'|'/') unary)*
    unary  := '-' unary | factor
    factor := number | 'i' | 'pi' | 'sqrt2' | 't' ('^' integer)?
              | 'exp' '(' '-' gaussarg ')' | '(' expr ')'

where gaussarg is a product/quotient of {number, pi, t^2} containing t^2
exactly once as a multiplicand.  The stored scale is (gaussarg coefficient)
divided by pi, so inputs are expected in the form exp(-pi*<rational>*t^2).
Division is only defined by constants.  Whitespace is insignificant; errors
report the byte offset.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .coeffs import PI_50
from .errors import ParseError

__all__ = [
    "GaussPoly", "PiScalar", "ParsedExpr", "gauss_term", "zero", "parse",
]


# --------------------------------------------------------------------------
# exact scalars: sum over e of (q_re + i q_im) * pi^e
# --------------------------------------------------------------------------

def _rat_sqrt(fr: Fraction):
    """Exact square root of a nonnegative rational, or None."""
    if fr < 0:
        return None
    pn, pd = math.isqrt(fr.numerator), math.isqrt(fr.denominator)
    if pn * pn == fr.numerator and pd * pd == fr.denominator:
        return Fraction(pn, pd)
    return None


class PiScalar:
    """Exact complex scalar: a finite sum of (rational + i*rational) * pi^e."""

    __slots__ = ("parts",)

    def __init__(self, parts=None):
        clean = {}
        for e, (re_, im_) in (parts or {}).items():
            if re_ or im_:
                clean[e] = (Fraction(re_), Fraction(im_))
        self.parts = clean

    @staticmethod
    def of(value, pi_power: int = 0) -> "PiScalar":
        if isinstance(value, PiScalar):
            if pi_power == 0:
                return value
            return value * PiScalar({pi_power: (Fraction(1), Fraction(0))})
        if isinstance(value, complex):
            re_, im_ = Fraction(value.real), Fraction(value.imag)
        else:
            re_, im_ = Fraction(value), Fraction(0)
        return PiScalar({pi_power: (re_, im_)})

    @property
    def is_zero(self) -> bool:
        return not self.parts

    def __add__(self, other):
        other = _as_piscalar(other)
        if other is None:
            return NotImplemented
        parts = dict(self.parts)
        for e, (re_, im_) in other.parts.items():
            r0, i0 = parts.get(e, (Fraction(0), Fraction(0)))
            parts[e] = (r0 + re_, i0 + im_)
        return PiScalar(parts)

    __radd__ = __add__

    def __neg__(self):
        return PiScalar({e: (-r, -i) for e, (r, i) in self.parts.items()})

    def __sub__(self, other):
        other = _as_piscalar(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_piscalar(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_piscalar(other)
        if other is None:
            return NotImplemented
        parts: dict[int, tuple[Fraction, Fraction]] = {}
        for e1, (r1, i1) in self.parts.items():
            for e2, (r2, i2) in other.parts.items():
                e = e1 + e2
                r0, i0 = parts.get(e, (Fraction(0), Fraction(0)))
                parts[e] = (r0 + r1 * r2 - i1 * i2, i0 + r1 * i2 + i1 * r2)
        return PiScalar(parts)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = _as_piscalar(other)
        if other is None:
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(frozenset(self.parts.items()))

    def __complex__(self) -> complex:
        re_ = Fraction(0)
        im_ = Fraction(0)
        for e, (r, i) in self.parts.items():
            scale = PI_50 ** e
            re_ += r * scale
            im_ += i * scale
        return complex(float(re_), float(im_))

    def __repr__(self):
        if self.is_zero:
            return "PiScalar(0)"
        bits = []
        for e in sorted(self.parts):
            r, i = self.parts[e]
            s = f"({r}+{i}i)" if i else f"{r}"
            bits.append(s if e == 0 else f"{s}*pi^{e}")
        return "PiScalar(" + " + ".join(bits) + ")"


PiScalar.I = PiScalar({0: (Fraction(0), Fraction(1))})


def _as_piscalar(v):
    if isinstance(v, PiScalar):
        return v
    if isinstance(v, (int, Fraction)):
        return PiScalar.of(v)
    if isinstance(v, complex) and v.real == int(v.real) and v.imag == int(v.imag):
        return PiScalar.of(v)
    return None


# --------------------------------------------------------------------------
# the function algebra
# --------------------------------------------------------------------------

def _is_zero_coeff(c) -> bool:
    return c.is_zero if isinstance(c, PiScalar) else c == 0


class GaussPoly:
    """Immutable sum of terms p(t) * exp(-pi * a * t^2) with distinct a > 0."""

    __slots__ = ("terms", "exact")

    def __init__(self, terms=(), exact: bool = False):
        merged: dict = {}
        for a, coeffs in terms:
            if exact:
                a = Fraction(a)
                coeffs = [PiScalar.of(c) if not isinstance(c, PiScalar) else c
                          for c in coeffs]
            else:
                a = float(a)
                coeffs = [complex(c) for c in coeffs]
            if a <= 0:
                raise ValueError(f"Gaussian scale must be positive, got {a}")
            if a in merged:
                old = merged[a]
                if len(old) < len(coeffs):
                    old, coeffs = coeffs, old
                new = list(old)
                for m, c in enumerate(coeffs):
                    new[m] = new[m] + c
                merged[a] = new
            else:
                merged[a] = list(coeffs)
        out = []
        for a in sorted(merged):
            coeffs = merged[a]
            while coeffs and _is_zero_coeff(coeffs[-1]):
                coeffs.pop()
            if coeffs:
                out.append((a, tuple(coeffs)))
        object.__setattr__(self, "terms", tuple(out))
        object.__setattr__(self, "exact", exact)

    def __setattr__(self, *_):
        raise AttributeError("GaussPoly is immutable")

    # ---- basic structure -------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((len(c) - 1 for _, c in self.terms), default=-1)

    def __eq__(self, other):
        if not isinstance(other, GaussPoly):
            return NotImplemented
        return self.exact == other.exact and self.terms == other.terms

    def __hash__(self):
        return hash((self.exact, self.terms))

    def __add__(self, other):
        if not isinstance(other, GaussPoly):
            return NotImplemented
        if self.exact != other.exact:
            raise ValueError("cannot mix exact and float GaussPoly values")
        return GaussPoly(self.terms + other.terms, exact=self.exact)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "GaussPoly":
        return GaussPoly([(a, [c * x for x in coeffs]) for a, coeffs in self.terms],
                         exact=self.exact)

    def mul_poly(self, poly) -> "GaussPoly":
        """Multiply by a plain polynomial (ascending coefficients)."""
        out = []
        for a, coeffs in self.terms:
            prod = [0] * (len(coeffs) + len(poly) - 1)
            for m, c in enumerate(coeffs):
                for d, p in enumerate(poly):
                    prod[m + d] = prod[m + d] + c * p
            out.append((a, prod))
        return GaussPoly(out, exact=self.exact)

    # ---- analysis --------------------------------------------------------

    def eval(self, t: float) -> complex:
        """Value at a real point: Horner per term times the Gaussian factor."""
        total = 0j
        for a, coeffs in self.terms:
            acc = 0j
            for c in reversed(coeffs):
                acc = acc * t + complex(c)
            total += acc * math.exp(-math.pi * float(a) * (t * t))
        return total

    def derivative(self, order: int = 1) -> "GaussPoly":
        """Exact symbolic derivative: p -> p' - 2 pi a t p, repeated."""
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        f = self
        for _ in range(order):
            out = []
            for a, coeffs in f.terms:
                two_pi_a = (PiScalar.of(2 * a, 1) if f.exact
                            else 2.0 * math.pi * float(a))
                deg = len(coeffs) - 1
                new = []
                for m in range(deg + 2):
                    c = 0
                    if m + 1 <= deg:
                        c = c + (m + 1) * coeffs[m + 1]
                    if m >= 1:
                        c = c - two_pi_a * coeffs[m - 1]
                    new.append(c)
                out.append((a, new))
            f = GaussPoly(out, exact=f.exact)
        return f

    def fourier(self) -> "GaussPoly":
        """Exact transform in the same algebra.

        Per term: exp(-pi a t^2) -> a^(-1/2) exp(-pi xi^2 / a), and each
        power of t applies (i / 2 pi) d/dxi to the transformed term.
        """
        result = GaussPoly(exact=self.exact)
        for a, coeffs in self.terms:
            if self.exact:
                root = _rat_sqrt(Fraction(a))
                if root is None:
                    raise ValueError(
                        f"exact mode requires a rational square root of a = {a}")
                amp = PiScalar.of(Fraction(1) / root)
                b = Fraction(1) / Fraction(a)
                i_over_2pi = PiScalar({-1: (Fraction(0), Fraction(1, 2))})
            else:
                amp = complex(1.0 / math.sqrt(a))
                b = 1.0 / float(a)
                i_over_2pi = 1j / (2.0 * math.pi)
            h = GaussPoly([(b, [amp])], exact=self.exact)
            for c in coeffs:
                if not _is_zero_coeff(c):
                    result = result + h.scale(c)
                h = h.derivative().scale(i_over_2pi)
        return result

    def reflect(self) -> "GaussPoly":
        """t -> -t: negate odd-power coefficients."""
        return GaussPoly(
            [(a, [(-c if m % 2 else c) for m, c in enumerate(coeffs)])
             for a, coeffs in self.terms], exact=self.exact)

    def odd_part(self) -> "GaussPoly":
        """f(t) - f(-t): drop even powers, double odd ones."""
        return GaussPoly(
            [(a, [(2 * c if m % 2 else 0) for m, c in enumerate(coeffs)])
             for a, coeffs in self.terms], exact=self.exact)

    def hadamard_divide(self) -> "GaussPoly":
        """The g with f(t) = t g(t): exact coefficient shift.

        Requires every term's constant coefficient to vanish (automatic for
        odd functions).
        """
        out = []
        for a, coeffs in self.terms:
            if not _is_zero_coeff(coeffs[0]):
                raise ValueError(
                    "hadamard_divide requires a zero constant term in every "
                    "polynomial part")
            out.append((a, list(coeffs[1:])))
        return GaussPoly(out, exact=self.exact)

    def is_odd(self) -> bool:
        return all(_is_zero_coeff(c)
                   for _, coeffs in self.terms
                   for m, c in enumerate(coeffs) if m % 2 == 0)

    def is_even(self) -> bool:
        return all(_is_zero_coeff(c)
                   for _, coeffs in self.terms
                   for m, c in enumerate(coeffs) if m % 2 == 1)

    def abs_envelope(self) -> list[tuple[float, list[float]]]:
        """Per term (a, [|c_0|, |c_1|, ...]) as floats; |f(t)| is bounded by
        sum over terms of sum_m |c_m| |t|^m exp(-pi a t^2)."""
        return [(float(a), [abs(complex(c)) for c in coeffs])
                for a, coeffs in self.terms]

    # ---- formatting --------------------------------------------------------

    def to_expr(self) -> str:
        """Grammar text that parses back to an equal value (float mode)."""
        if self.exact:
            raise ValueError("to_expr is defined for float-mode values")
        if self.is_zero:
            return "0"
        chunks = []
        for a, coeffs in self.terms:
            poly = []
            for m, c in enumerate(coeffs):
                if c == 0:
                    continue
                if c.imag == 0.0:
                    cs = repr(c.real)
                elif c.real == 0.0:
                    cs = f"{c.imag!r}*i"
                else:
                    cs = f"({c.real!r} + {c.imag!r}*i)"
                if m == 0:
                    poly.append(cs)
                elif m == 1:
                    poly.append(f"{cs}*t")
                else:
                    poly.append(f"{cs}*t^{m}")
            chunks.append(f"({' + '.join(poly)})*exp(-pi*{a!r}*t^2)")
        return " + ".join(chunks)

    def __repr__(self):
        if self.exact:
            return f"GaussPoly(exact, {self.terms!r})"
        return f"GaussPoly({self.to_expr()!r})"


def gauss_term(a, coeffs, exact: bool = False) -> GaussPoly:
    """Single term p(t) * exp(-pi a t^2) from ascending coefficients."""
    return GaussPoly([(a, list(coeffs))], exact=exact)


def zero(exact: bool = False) -> GaussPoly:
    return GaussPoly(exact=exact)


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ParsedExpr:
    source: str
    value: GaussPoly


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^()]))")


def _tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            stripped = src[pos:].lstrip()
            if not stripped:
                break  # trailing whitespace
            at = len(src) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", at)
        if m.group("num") is not None:
            tokens.append(("num", m.group("num"), m.start("num")))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    """Recursive descent over the grammar; values are dicts a -> coeff list,
    where a == 0.0 marks a plain polynomial part (legal only mid-parse)."""

    def __init__(self, src: str):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, val, pos = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    # value ops on the dict representation ---------------------------------

    @staticmethod
    def _add(u, v, sign=1):
        out = {a: list(c) for a, c in u.items()}
        for a, coeffs in v.items():
            tgt = out.setdefault(a, [])
            while len(tgt) < len(coeffs):
                tgt.append(0j)
            for m, c in enumerate(coeffs):
                tgt[m] += sign * c
        return out

    @staticmethod
    def _mul(u, v):
        out: dict[float, list[complex]] = {}
        for a1, c1 in u.items():
            for a2, c2 in v.items():
                a = a1 + a2
                prod = out.setdefault(a, [])
                need = len(c1) + len(c2) - 1
                while len(prod) < need:
                    prod.append(0j)
                for m, x in enumerate(c1):
                    for d, y in enumerate(c2):
                        prod[m + d] += x * y
        return out

    # grammar rules ---------------------------------------------------------

    def parse_expr(self):
        kind, val, _ = self.peek()
        neg = kind == "op" and val == "-"
        if neg:
            self.next()
        value = self.parse_term()
        if neg:
            value = self._mul({0.0: [complex(-1.0)]}, value)
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                rhs = self.parse_term()
                value = self._add(value, rhs, 1 if val == "+" else -1)
            else:
                return value

    def parse_term(self):
        value = self.parse_unary()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.next()
                rhs = self.parse_unary()
                if val == "*":
                    value = self._mul(value, rhs)
                else:
                    if set(rhs) != {0.0} or len(rhs[0.0]) != 1:
                        raise ParseError("division is only defined by constants", pos)
                    divisor = rhs[0.0][0]
                    if divisor == 0:
                        raise ParseError("division by zero", pos)
                    value = self._mul(value, {0.0: [1.0 / divisor]})
            else:
                return value

    def parse_unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.next()
            return self._mul({0.0: [complex(-1.0)]}, self.parse_unary())
        return self.parse_factor()

    def parse_factor(self):
        kind, val, pos = self.next()
        if kind == "num":
            return {0.0: [complex(float(Fraction(val)))]}
        if kind == "name":
            if val == "i":
                return {0.0: [1j]}
            if val == "pi":
                return {0.0: [complex(math.pi)]}
            if val == "sqrt2":
                return {0.0: [complex(math.sqrt(2.0))]}
            if val == "t":
                power = 1
                k2, v2, _ = self.peek()
                if k2 == "op" and v2 == "^":
                    self.next()
                    k3, v3, p3 = self.next()
                    if k3 != "num" or not v3.isdigit():
                        raise ParseError("exponent must be a nonnegative integer", p3)
                    power = int(v3)
                return {0.0: [0j] * power + [1 + 0j]}
            if val == "exp":
                return self.parse_exp(pos)
            raise ParseError(f"unknown name {val!r}", pos)
        if kind == "op" and val == "(":
            value = self.parse_expr()
            self.expect_op(")")
            return value
        raise ParseError("expected a factor", pos)

    def parse_exp(self, exp_pos: int):
        self.expect_op("(")
        kind, val, _ = self.peek()
        negative = kind == "op" and val == "-"
        if negative:
            self.next()
        q = Fraction(1)
        pi_pow = 0
        t2_seen = False
        dividing = False
        while True:
            kind, val, pos = self.next()
            if kind == "num":
                q = q / Fraction(val) if dividing else q * Fraction(val)
            elif kind == "name" and val == "pi":
                pi_pow += -1 if dividing else 1
            elif kind == "name" and val == "t":
                self.expect_op("^")
                k2, v2, p2 = self.next()
                if k2 != "num" or v2 != "2":
                    raise ParseError("Gaussian argument must use t^2", p2)
                if dividing:
                    raise ParseError("t^2 cannot appear in a denominator", pos)
                if t2_seen:
                    raise ParseError("t^2 must appear exactly once", pos)
                t2_seen = True
            else:
                raise ParseError("expected number, pi or t^2 in exp()", pos)
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.next()
                dividing = val == "/"
                continue
            break
        self.expect_op(")")
        if not t2_seen:
            raise ParseError("exp() argument must contain t^2", exp_pos)
        if not negative or q <= 0:
            raise ParseError("Gaussian scale must be positive "
                             "(use exp(-pi*<rational>*t^2))", exp_pos)
        if pi_pow == 1:
            a = float(q)
        else:
            a = float(q * PI_50 ** (pi_pow - 1))
        return {a: [1 + 0j]}


def parse(src: str) -> ParsedExpr:
    """Parse an expression into a GaussPoly; see the module docstring."""
    p = _Parser(src)
    value = p.parse_expr()
    kind, _, pos = p.peek()
    if kind != "end":
        raise ParseError("unexpected trailing input", pos)
    terms = []
    for a, coeffs in value.items():
        if all(c == 0 for c in coeffs):
            continue
        if a == 0.0:
            raise ParseError(
                "polynomial without Gaussian factor is not a Schwartz function",
                len(src))
        terms.append((a, coeffs))
    return ParsedExpr(src, GaussPoly(terms))
