"""Exact sparse polynomials over the integers in ``x_1..x_n`` and ``y^(i)_j``.

A variable is a plain tuple ``(kind, family, index)``: ``x_i`` is ``(0, 0, i)``
and ``y^(f)_j`` is ``(1, f, j)``.  Tuple comparison therefore gives the fixed
variable order: every ``x`` before every ``y``, ``x`` by index, ``y`` by
``(family, index)``.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable with
no zero exponents; a :class:`Polynomial` maps monomials to nonzero ``int``
coefficients.  Both are canonical, so structural equality is mathematical
equality.
"""

from __future__ import annotations

import functools
import itertools
import json
from typing import Iterable, Mapping, Sequence

X_KIND = 0
Y_KIND = 1

Var = tuple[int, int, int]
Monomial = tuple[tuple[Var, int], ...]

ONE_MONOMIAL: Monomial = ()


def xvar(i: int) -> Var:
    if i < 1:
        raise ValueError(f"x index must be >= 1, got {i}")
    return (X_KIND, 0, i)


def yvar(family: int, index: int) -> Var:
    if family < 1 or index < 1:
        raise ValueError(f"y variable needs family >= 1 and index >= 1, got ({family}, {index})")
    return (Y_KIND, family, index)


def var_name(v: Var) -> str:
    kind, family, index = v
    if kind == X_KIND:
        return f"x{index}"
    return f"y{family}_{index}"


def parse_var(name: str) -> Var:
    name = name.strip()
    try:
        if name.startswith("x"):
            return xvar(int(name[1:]))
        if name.startswith("y"):
            family, index = name[1:].split("_")
            return yvar(int(family), int(index))
    except ValueError:
        pass
    raise ValueError(f"not a variable name: {name!r}")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for v, e in b:
        merged[v] = merged.get(v, 0) + e
    return tuple(sorted(merged.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_lex_cmp(a: Monomial, b: Monomial) -> int:
    # positive when a > b in lex order with x1 > x2 > ... > y1_1 > y1_2 > ...
    for (va, ea), (vb, eb) in zip(a, b):
        if va != vb:
            return 1 if va < vb else -1
        if ea != eb:
            return 1 if ea > eb else -1
    return (len(a) > len(b)) - (len(a) < len(b))


def _grlex_cmp(a: Monomial, b: Monomial) -> int:
    da, db = mono_degree(a), mono_degree(b)
    if da != db:
        return 1 if da > db else -1
    return _mono_lex_cmp(a, b)


grlex_key = functools.cmp_to_key(_grlex_cmp)
lex_key = functools.cmp_to_key(_mono_lex_cmp)


class Polynomial:
    """Immutable sparse polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self._terms: dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, int]) -> Polynomial:
        # caller guarantees canonical monomials and no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls._raw({ONE_MONOMIAL: int(c)} if c else {})

    @classmethod
    def variable(cls, v: Var) -> Polynomial:
        return cls._raw({((v, 1),): 1})

    @classmethod
    def monomial(cls, m: Iterable[tuple[Var, int]], coeff: int = 1) -> Polynomial:
        acc: dict[Var, int] = {}
        for v, e in m:
            if e < 0:
                raise ValueError("negative exponent")
            if e:
                acc[v] = acc.get(v, 0) + e
        return cls._raw({tuple(sorted(acc.items())): coeff} if coeff else {})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return self._terms

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def constant_term(self) -> int:
        return self._terms.get(ONE_MONOMIAL, 0)

    def variables(self) -> set[Var]:
        return {v for m in self._terms for v, _ in m}

    def has_x(self) -> bool:
        return any(v[0] == X_KIND for m in self._terms for v, _ in m)

    def degree(self) -> int:
        return max((mono_degree(m) for m in self._terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {mono_degree(m) for m in self._terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in descending graded-lex order; the serialization order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, int):
            if not other:
                return ZERO
            return Polynomial._raw({m: c * other for m, c in self._terms.items()})
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return Polynomial._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # -- structural operations ---------------------------------------------

    def coefficient_of_x(self, exponent: Sequence[int]) -> Polynomial:
        """The y-polynomial multiplying ``x^exponent`` (x_k raised to ``exponent[k-1]``)."""
        target = tuple((xvar(k + 1), e) for k, e in enumerate(exponent) if e)
        out: dict[Monomial, int] = {}
        for m, c in self._terms.items():
            # x variables sort first, so the x part of a monomial is a prefix
            nx = 0
            while nx < len(m) and m[nx][0][0] == X_KIND:
                nx += 1
            if m[:nx] == target:
                out[m[nx:]] = c
        return Polynomial._raw(out)

    def x_parts(self) -> dict[tuple[int, ...], Polynomial]:
        """Split into ``{x-exponent tuple (trimmed): y-coefficient}``."""
        groups: dict[tuple[int, ...], dict[Monomial, int]] = {}
        for m, c in self._terms.items():
            xs = [(v[2], e) for v, e in m if v[0] == X_KIND]
            ys = tuple(t for t in m if t[0][0] != X_KIND)
            top = max((i for i, _ in xs), default=0)
            key = [0] * top
            for i, e in xs:
                key[i - 1] = e
            groups.setdefault(tuple(key), {})[ys] = c
        return {k: Polynomial._raw(v) for k, v in groups.items()}

    def subs(self, values: Mapping[Var, int | Polynomial]) -> Polynomial:
        """Substitute integers or polynomials for variables."""
        if not values:
            return self
        acc = ZERO
        power_cache: dict[tuple[Var, int], Polynomial] = {}
        for m, c in self._terms.items():
            kept = []
            term = Polynomial.constant(c)
            for v, e in m:
                if v in values:
                    key = (v, e)
                    if key not in power_cache:
                        power_cache[key] = _coerce(values[v]) ** e
                    term = term * power_cache[key]
                else:
                    kept.append((v, e))
            if kept:
                term = term * Polynomial._raw({tuple(kept): 1})
            acc = acc + term
        return acc

    def map_vars(self, fn) -> Polynomial:
        """Rename variables through ``fn``; a ``None`` result sends that variable to 0."""
        out: dict[Monomial, int] = {}
        for m, c in self._terms.items():
            acc: dict[Var, int] = {}
            dead = False
            for v, e in m:
                w = fn(v)
                if w is None:
                    dead = True
                    break
                acc[w] = acc.get(w, 0) + e
            if dead:
                continue
            key = tuple(sorted(acc.items()))
            out[key] = out.get(key, 0) + c
        return Polynomial._raw({m: c for m, c in out.items() if c})

    def negate_vars(self, pred) -> Polynomial:
        """Substitute ``v -> -v`` for every variable with ``pred(v)`` true."""
        out = {}
        for m, c in self._terms.items():
            flips = sum(e for v, e in m if pred(v))
            out[m] = -c if flips & 1 else c
        return Polynomial._raw(out)

    def zero_vars(self, pred) -> Polynomial:
        return Polynomial._raw({m: c for m, c in self._terms.items() if not any(pred(v) for v, _ in m)})

    # -- serialization --------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            mag = abs(c)
            body = "*".join(var_name(v) + (f"^{e}" if e > 1 else "") for v, e in m)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            if k == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            mag = abs(c)
            factors = []
            for (kind, family, index), e in m:
                if kind == X_KIND:
                    factors.append(f"x_{{{index}}}" + (f"^{{{e}}}" if e > 1 else ""))
                else:
                    base = f"y^{{({family})}}_{{{index}}}"
                    # braces keep the power from stacking on the family superscript
                    factors.append(f"{{{base}}}^{{{e}}}" if e > 1 else base)
            body = " ".join(factors)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}{body}"
            sign = "-" if c < 0 else "+"
            parts.append((sign if c < 0 else "") + body if k == 0 else f" {sign} {body}")
        return "".join(parts)

    def to_json(self) -> list[dict]:
        return [
            {"coeff": str(c), "vars": [[var_name(v), e] for v, e in m]}
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: Sequence[Mapping]) -> Polynomial:
        acc = ZERO
        for term in data:
            acc = acc + cls.monomial(((parse_var(name), int(e)) for name, e in term["vars"]), int(term["coeff"]))
        return acc

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def _coerce(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, int):
        return Polynomial.constant(p)
    return NotImplemented


ZERO = Polynomial._raw({})
ONE = Polynomial.constant(1)


def x(i: int) -> Polynomial:
    return Polynomial.variable(xvar(i))


def y(family: int, index: int) -> Polynomial:
    return Polynomial.variable(yvar(family, index))


def poly_sum(polys: Iterable[Polynomial]) -> Polynomial:
    """Sum many polynomials with a single accumulator dict."""
    out: dict[Monomial, int] = {}
    for p in polys:
        for m, c in p.terms.items():
            out[m] = out.get(m, 0) + c
    return Polynomial._raw({m: c for m, c in out.items() if c})


def poly_prod(polys: Iterable[Polynomial]) -> Polynomial:
    acc = ONE
    for p in polys:
        acc = acc * p
    return acc


def x_monomial(exponent: Sequence[int], coeff: int = 1) -> Polynomial:
    return Polynomial.monomial(((xvar(k + 1), e) for k, e in enumerate(exponent)), coeff)


# -- permutations and alternants ---------------------------------------------

def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given in one-line notation on ``0..n-1``."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


PERMUTATION_SUM_LIMIT = 8


def alternant(xi: Sequence[int], n: int) -> Polynomial:
    """``det[(x_i)^(xi_j)]`` for ``1 <= i, j <= n``.

    Zero whenever ``xi`` repeats an entry.  Uses the signed permutation sum up
    to ``n = 8`` and a cofactor expansion beyond that.
    """
    xi = tuple(xi)
    if len(xi) != n:
        raise ValueError(f"exponent vector has length {len(xi)}, expected {n}")
    if any(e < 0 for e in xi):
        raise ValueError("alternant exponents must be nonnegative")
    if len(set(xi)) < n:
        return ZERO
    if n <= PERMUTATION_SUM_LIMIT:
        return alternant_by_permutations(xi, n)
    return alternant_by_cofactors(xi, n)


def alternant_by_permutations(xi: Sequence[int], n: int) -> Polynomial:
    out: dict[Monomial, int] = {}
    for perm in itertools.permutations(range(n)):
        # x_i gets exponent xi[perm[i]]
        m = tuple((xvar(i + 1), xi[perm[i]]) for i in range(n) if xi[perm[i]])
        out[m] = out.get(m, 0) + permutation_sign(perm)
    return Polynomial._raw({m: c for m, c in out.items() if c})


def alternant_by_cofactors(xi: Sequence[int], n: int) -> Polynomial:
    matrix = [[x_monomial([0] * i + [e]) for e in xi] for i in range(n)]
    return det_cofactor(matrix)


# -- symmetric polynomials in an initial segment of one y family -------------

def _family_vars(p: int, family: int, negate: bool) -> list[Polynomial]:
    sign = -1 if negate else 1
    return [y(family, j) * sign for j in range(1, p + 1)]


@functools.lru_cache(maxsize=None)
def elementary_sym(rdeg: int, p: int, family: int = 1, negate: bool = False) -> Polynomial:
    """``e_rdeg`` of ``y^(family)_1..y^(family)_p`` (each negated when ``negate``)."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    if rdeg < 0 or rdeg > p:
        return ZERO
    if rdeg == 0:
        return ONE
    sign = -1 if negate and rdeg % 2 else 1
    terms = {}
    for combo in itertools.combinations(range(1, p + 1), rdeg):
        terms[tuple((yvar(family, j), 1) for j in combo)] = sign
    return Polynomial._raw(terms)


@functools.lru_cache(maxsize=None)
def complete_sym(rdeg: int, p: int, family: int = 1, negate: bool = False) -> Polynomial:
    """``h_rdeg`` of ``y^(family)_1..y^(family)_p`` (each negated when ``negate``)."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    if rdeg < 0:
        return ZERO
    if rdeg == 0:
        return ONE
    if p == 0:
        return ZERO
    sign = -1 if negate and rdeg % 2 else 1
    terms = {}
    for combo in itertools.combinations_with_replacement(range(1, p + 1), rdeg):
        counts: dict[int, int] = {}
        for j in combo:
            counts[j] = counts.get(j, 0) + 1
        terms[tuple((yvar(family, j), e) for j, e in sorted(counts.items()))] = sign
    return Polynomial._raw(terms)


# -- determinants of polynomial matrices --------------------------------------

def det_permutations(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    n = len(matrix)
    acc = []
    for perm in itertools.permutations(range(n)):
        term = ONE
        for i in range(n):
            entry = matrix[i][perm[i]]
            if not entry:
                term = ZERO
                break
            term = term * entry
        if term:
            acc.append(term * permutation_sign(perm))
    return poly_sum(acc)


def det_cofactor(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Laplace expansion along rows, memoized on the set of used columns."""
    n = len(matrix)
    if n == 0:
        return ONE
    memo: dict[int, Polynomial] = {}

    def minor(row: int, used: int) -> Polynomial:
        if row == n:
            return ONE
        if used in memo:
            return memo[used]
        acc = []
        sign = 1
        for col in range(n):
            if used >> col & 1:
                continue
            entry = matrix[row][col]
            if entry:
                sub = minor(row + 1, used | (1 << col))
                if sub:
                    acc.append(entry * sub * sign)
            sign = -sign
        memo[used] = result = poly_sum(acc)
        return result

    return minor(0, 0)


def exact_divide(p: Polynomial, d: Polynomial) -> Polynomial:
    """Quotient ``p / d``; raises ``ArithmeticError`` unless the division is exact."""
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    lead_d, lead_c = max(d.terms.items(), key=lambda t: lex_key(t[0]))
    lead_exp = dict(lead_d)
    quotient: dict[Monomial, int] = {}
    rem = p
    while rem:
        m, c = max(rem.terms.items(), key=lambda t: lex_key(t[0]))
        me = dict(m)
        if any(me.get(v, 0) < e for v, e in lead_exp.items()) or c % lead_c:
            raise ArithmeticError("polynomial division is not exact")
        qm = tuple(sorted((v, e - lead_exp.get(v, 0)) for v, e in me.items() if e - lead_exp.get(v, 0)))
        qc = c // lead_c
        quotient[qm] = qc
        rem = rem - d * Polynomial._raw({qm: qc})
    return Polynomial._raw(quotient)


def det_bareiss(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Fraction-free Gaussian elimination; every division is exact."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * pivot - a[i][k] * a[k][j]
                a[i][j] = exact_divide(num, prev) if prev != ONE else num
            a[i][k] = ZERO
        prev = pivot
    return a[n - 1][n - 1] * sign


def determinant(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Exact determinant; cofactor expansion for small matrices, Bareiss otherwise."""
    if len(matrix) <= 6:
        return det_cofactor(matrix)
    return det_bareiss(matrix)
