"""Exact multivariate Laurent-polynomial arithmetic over the integers.

A polynomial is a canonical map from monomials to nonzero integer
coefficients, so structural equality coincides with mathematical equality.
Exponents may be negative (every variable is invertible) and coefficients
are arbitrary-precision ints: cluster-variable coefficients grow quickly
and fixed-width overflow would silently corrupt verification.

All values are immutable after construction and safe to share.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union


class UniverseMismatchError(ValueError):
    """Operands live over different variable universes."""


class NotDivisibleError(ArithmeticError):
    """Exact division failed: the denominator is not a factor.

    Inside the mutation engine this signal is meaningful on its own: it
    would witness a cluster variable failing to be a Laurent polynomial,
    i.e. an engine bug, so callers there escalate it.
    """


class NotHomogeneousError(ArithmeticError):
    """The polynomial mixes monomials of different weighted degrees."""


@dataclass(frozen=True)
class Var:
    """A variable handle: a stable non-negative id plus a display name."""

    uid: int
    name: str

    def __repr__(self) -> str:
        return f"Var({self.uid}, {self.name!r})"


class Monomial(tuple):
    """A Laurent monomial: sorted ``((uid, exponent), ...)`` pairs.

    Zero exponents are never stored, so two monomials are equal iff their
    exponent maps are equal. The empty tuple is the unit monomial.
    """

    __slots__ = ()

    @staticmethod
    def make(pairs: Iterable[tuple[int, int]]) -> "Monomial":
        items = sorted((u, e) for u, e in pairs if e != 0)
        for i in range(1, len(items)):
            if items[i][0] == items[i - 1][0]:
                raise ValueError(f"duplicate variable id {items[i][0]} in monomial")
        return Monomial(items)

    def mul(self, other: "Monomial") -> "Monomial":
        if not other:
            return self
        if not self:
            return other
        exps = dict(self)
        for u, e in other:
            ne = exps.get(u, 0) + e
            if ne:
                exps[u] = ne
            else:
                del exps[u]
        return Monomial(sorted(exps.items()))

    def pow(self, n: int) -> "Monomial":
        if n == 0:
            return _UNIT_MONOMIAL
        if n == 1:
            return self
        return Monomial(tuple((u, e * n) for u, e in self))

    def exponent(self, uid: int) -> int:
        for u, e in self:
            if u == uid:
                return e
        return 0

    def total_degree(self) -> int:
        return sum(e for _, e in self)

    def weighted_degree(self, degrees: Mapping[int, int]) -> int:
        return sum(e * degrees[u] for u, e in self)


_UNIT_MONOMIAL = Monomial()


class Universe:
    """An ordered set of uniquely named variables; the scope of a polynomial."""

    __slots__ = ("vars", "_by_name", "_names", "_hash")

    def __init__(self, names: Iterable[str]):
        self.vars: tuple[Var, ...] = tuple(Var(i, str(n)) for i, n in enumerate(names))
        self._by_name = {v.name: v for v in self.vars}
        if len(self._by_name) != len(self.vars):
            raise ValueError("variable names must be unique within a universe")
        self._names = tuple(v.name for v in self.vars)
        self._hash = hash(self._names)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Universe) and self._names == other._names

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.vars)

    def __iter__(self) -> Iterator[Var]:
        return iter(self.vars)

    def __repr__(self) -> str:
        return f"Universe({list(self._names)!r})"

    def var(self, name: Union[str, Var]) -> Var:
        if isinstance(name, Var):
            if self.vars[name.uid] != name:
                raise KeyError(f"{name!r} does not belong to this universe")
            return name
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    def one(self) -> "LaurentPoly":
        return self.const(1)

    def const(self, c: int) -> "LaurentPoly":
        if c == 0:
            return LaurentPoly(self, {})
        return LaurentPoly(self, {_UNIT_MONOMIAL: int(c)})

    def gen(self, name: Union[str, Var]) -> "LaurentPoly":
        v = self.var(name)
        return LaurentPoly(self, {Monomial(((v.uid, 1),)): 1})

    def gens(self) -> tuple["LaurentPoly", ...]:
        return tuple(self.gen(v) for v in self.vars)

    def monomial(self, exps: Mapping[Union[str, Var], int], coeff: int = 1) -> "LaurentPoly":
        if coeff == 0:
            return self.zero()
        mono = Monomial.make((self.var(k).uid, e) for k, e in exps.items())
        return LaurentPoly(self, {mono: int(coeff)})

    def degree_map(self, degrees: Mapping[Union[str, Var, int], int]) -> dict[int, int]:
        """Normalize a degree assignment to a uid-keyed dict."""
        out: dict[int, int] = {}
        for k, d in degrees.items():
            if isinstance(k, int):
                uid = self.vars[k].uid
            else:
                uid = self.var(k).uid
            out[uid] = int(d)
        return out


class LaurentPoly:
    """A canonical integer combination of Laurent monomials over a Universe."""

    __slots__ = ("universe", "terms", "_key", "_hash")

    def __init__(self, universe: Universe, terms: Mapping[Monomial, int]):
        self.universe = universe
        self.terms: dict[Monomial, int] = {m: c for m, c in terms.items() if c}
        self._key: tuple | None = None
        self._hash: int | None = None

    # -- canonical form ----------------------------------------------------

    def canonical_key(self) -> tuple:
        """Sorted term tuple; equal keys iff mathematically equal polys."""
        if self._key is None:
            self._key = tuple(sorted(self.terms.items()))
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.universe == other.universe and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.universe, self.canonical_key()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {_UNIT_MONOMIAL: 1}

    # -- arithmetic ---------------------------------------------------------

    def _check_universe(self, other: "LaurentPoly") -> None:
        if self.universe != other.universe:
            raise UniverseMismatchError(
                f"operands over different universes: {self.universe!r} vs {other.universe!r}"
            )

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_universe(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            nc = acc.get(m, 0) + c
            if nc:
                acc[m] = nc
            elif m in acc:
                del acc[m]
        return LaurentPoly(self.universe, acc)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.universe, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return self.universe.zero()
            return LaurentPoly(self.universe, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_universe(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        acc: dict[Monomial, int] = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = m1.mul(m2)
                nc = acc.get(m, 0) + c1 * c2
                if nc:
                    acc[m] = nc
                elif m in acc:
                    del acc[m]
        return LaurentPoly(self.universe, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.universe.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def inverse(self) -> "LaurentPoly":
        """Inverse of a unit monomial (single term, coefficient +-1)."""
        if len(self.terms) != 1:
            raise ValueError("only unit monomials are invertible")
        ((m, c),) = self.terms.items()
        if c not in (1, -1):
            raise ValueError("only unit monomials (coefficient +-1) are invertible")
        return LaurentPoly(self.universe, {m.pow(-1): c})

    # -- exact division -----------------------------------------------------

    def div_exact(self, den: "LaurentPoly") -> "LaurentPoly":
        """Return q with q * den == self exactly, else raise NotDivisibleError.

        Factors out the monomial content of both operands, then performs
        sparse polynomial division under a graded-lex term order and
        requires a zero remainder. Any fixed order gives the same answer
        for exact factors; the remainder check catches non-factors.
        """
        self._check_universe(den)
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self.universe.zero()
        num_shift = _content(self.terms)
        den_shift = _content(den.terms)
        unshift_n = num_shift.pow(-1)
        unshift_d = den_shift.pow(-1)
        num = {m.mul(unshift_n): c for m, c in self.terms.items()}
        dterms = {m.mul(unshift_d): c for m, c in den.terms.items()}
        quot = _divide_terms(num, dterms, len(self.universe))
        shift = num_shift.mul(den_shift.pow(-1))
        return LaurentPoly(self.universe, {m.mul(shift): c for m, c in quot.items()})

    # -- grading ------------------------------------------------------------

    def weighted_degree(self, degrees: Mapping[Union[str, Var, int], int]) -> int | None:
        """Common weighted degree of all monomials.

        Returns None for the zero polynomial (homogeneous of every degree by
        convention) and raises NotHomogeneousError when degrees differ.
        """
        if not self.terms:
            return None
        dm = self.universe.degree_map(degrees)
        deg: int | None = None
        for m in self.terms:
            d = m.weighted_degree(dm)
            if deg is None:
                deg = d
            elif d != deg:
                raise NotHomogeneousError(
                    f"mixed weighted degrees {deg} and {d} in {self}"
                )
        return deg

    def is_homogeneous_of(self, degrees: Mapping[Union[str, Var, int], int], d: int) -> bool:
        try:
            wd = self.weighted_degree(degrees)
        except NotHomogeneousError:
            return False
        return wd is None or wd == d

    # -- substitution -------------------------------------------------------

    def substitute(self, target: Universe, images: Mapping[int, Monomial]) -> "LaurentPoly":
        """Monomial substitution: map each source variable uid to a monomial
        over `target` and extend multiplicatively."""
        acc: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            img = _UNIT_MONOMIAL
            for u, e in m:
                img = img.mul(images[u].pow(e))
            nc = acc.get(img, 0) + c
            if nc:
                acc[img] = nc
            elif img in acc:
                del acc[img]
        return LaurentPoly(target, acc)

    def map_vars(self, target: Universe, var_images: Mapping[int, Var]) -> "LaurentPoly":
        """Rename variables: uid -> target Var, preserving exponents."""
        images = {u: Monomial(((v.uid, 1),)) for u, v in var_images.items()}
        return self.substitute(target, images)

    # -- rendering ----------------------------------------------------------

    def render(self) -> str:
        """Stable text form: terms sorted graded-lex descending, explicit
        exponents, e.g. ``x1^-1*x2 + x1^-1*x3``."""
        if not self.terms:
            return "0"
        n = len(self.universe)
        ordered = sorted(
            self.terms.items(), key=lambda mc: _grlex_key(mc[0], n), reverse=True
        )
        parts: list[str] = []
        for i, (m, c) in enumerate(ordered):
            body = "*".join(
                f"{self.universe.vars[u].name}" + (f"^{e}" if e != 1 else "")
                for u, e in m
            )
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if i == 0:
                parts.append(text if c > 0 else f"-{text}")
            else:
                parts.append(f" + {text}" if c > 0 else f" - {text}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"<LaurentPoly {self.render()}>"


def _grlex_key(m: Monomial, nvars: int) -> tuple:
    vec = [0] * nvars
    tot = 0
    for u, e in m:
        vec[u] = e
        tot += e
    return (tot, tuple(vec))


def _content(terms: Mapping[Monomial, int]) -> Monomial:
    """Componentwise minimum exponent over all monomials (absent = 0)."""
    allvars: set[int] = set()
    for m in terms:
        allvars.update(u for u, _ in m)
    mins: dict[int, int | None] = {u: None for u in allvars}
    for m in terms:
        md = dict(m)
        for u in allvars:
            e = md.get(u, 0)
            prev = mins[u]
            mins[u] = e if prev is None else min(prev, e)
    return Monomial.make((u, e) for u, e in mins.items() if e)


def _mono_quotient(m: Monomial, d: Monomial) -> Monomial | None:
    """m / d when d divides m in the polynomial (nonnegative) sense."""
    exps = dict(m)
    for u, e in d:
        ne = exps.get(u, 0) - e
        if ne < 0:
            return None
        if ne:
            exps[u] = ne
        else:
            exps.pop(u, None)
    return Monomial(sorted(exps.items()))


def _divide_terms(
    num: dict[Monomial, int], den: dict[Monomial, int], nvars: int
) -> dict[Monomial, int]:
    """Exact sparse division of true polynomials (all exponents >= 0)."""
    den_lt = max(den, key=lambda m: _grlex_key(m, nvars))
    den_lc = den[den_lt]
    den_rest = [(m, c) for m, c in den.items() if m != den_lt]

    def negkey(m: Monomial) -> tuple:
        tot = 0
        vec = [0] * nvars
        for u, e in m:
            vec[u] = e
            tot += e
        return (-tot, tuple(-x for x in vec))

    rem = dict(num)
    heap: list[tuple[tuple, Monomial]] = [(negkey(m), m) for m in rem]
    heapq.heapify(heap)
    quot: dict[Monomial, int] = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = rem.pop(m, 0)
        if not c:
            continue  # stale entry
        qm = _mono_quotient(m, den_lt)
        if qm is None or c % den_lc:
            raise NotDivisibleError("nonzero remainder in exact division")
        qc = c // den_lc
        quot[qm] = qc
        for dm, dc in den_rest:
            t = qm.mul(dm)
            prev = rem.get(t, 0)
            nc = prev - qc * dc
            if prev == 0:
                if nc:
                    rem[t] = nc
                    heapq.heappush(heap, (negkey(t), t))
            elif nc:
                rem[t] = nc
            else:
                del rem[t]
    return quot
