"""Factorial Schur functions and their expansion in the Schur basis.

The main entry points are :func:`lr_coefficient` and :func:`lr_expand`, which
sum tableau weights over barred skew tableaux with Yamanouchi unbarred column
words.  :func:`oracle_coefficient` computes the same numbers with no tableau
combinatorics on the coefficient side: multiply the product of factorial
Schur functions by the Vandermonde alternant and read off the coefficient of
``x^(rho + mu)``.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .polyring import (
    ZERO,
    Polynomial,
    Y_KIND,
    alternant,
    poly_prod,
    poly_sum,
    x,
    xvar,
    y,
)
from .tableaux import (
    BarredTableau,
    MultiShape,
    Partition,
    TableauError,
    as_partition,
    enumerate_semistandard,
    enumerate_yamanouchi,
    padded,
    unbarred_content,
    weight,
)


@dataclass
class CoeffTable:
    """Map ``mu -> coefficient`` with zero coefficients dropped.

    Keys are partitions with trailing zeros stripped; ``()`` is the empty
    partition.
    """

    n: int
    entries: dict[Partition, Polynomial] = field(default_factory=dict)
    shape: MultiShape | None = None
    basis: str | None = None

    def __post_init__(self):
        self.entries = {as_partition(mu): p for mu, p in self.entries.items() if p}

    def __getitem__(self, mu: Iterable[int]) -> Polynomial:
        return self.entries.get(as_partition(mu), ZERO)

    def __contains__(self, mu) -> bool:
        return as_partition(mu) in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoeffTable):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def keys_sorted(self) -> list[Partition]:
        # descending lexicographic on the padded partition
        return sorted(self.entries, key=lambda mu: padded(mu, self.n), reverse=True)

    def items(self) -> list[tuple[Partition, Polynomial]]:
        return [(mu, self.entries[mu]) for mu in self.keys_sorted()]

    def map(self, fn) -> CoeffTable:
        return CoeffTable(self.n, {mu: fn(p) for mu, p in self.entries.items()}, self.shape, self.basis)

    def to_json(self) -> dict:
        data = {
            "shape": self.shape.to_json() if self.shape is not None else None,
            "n": self.n,
        }
        if self.basis is not None:
            data["basis"] = self.basis
        data["coefficients"] = [{"mu": list(padded(mu, self.n)), "poly": p.to_json()} for mu, p in self.items()]
        return data

    def dumps(self) -> str:
        return json.dumps(self.to_json(), ensure_ascii=False)

    @classmethod
    def from_json(cls, data: Mapping) -> CoeffTable:
        shape = data.get("shape")
        return cls(
            int(data["n"]),
            {tuple(e["mu"]): Polynomial.from_json(e["poly"]) for e in data["coefficients"]},
            MultiShape(tuple(tuple(lam) for lam in shape)) if shape is not None else None,
            data.get("basis"),
        )

    def to_text(self) -> str:
        if not self.entries:
            return "0"
        return "\n".join(f"{list(padded(mu, self.n))}: {p.to_text()}" for mu, p in self.items())

    def to_latex(self) -> str:
        symbol = "s"
        if self.basis == "factorial":
            symbol_of = lambda mu: f"s_{{{_latex_partition(mu)}}}(x\\,|\\,y)"
        else:
            symbol_of = lambda mu: f"{symbol}_{{{_latex_partition(mu)}}}(x)"
        if not self.entries:
            return "0"
        lines = [f"\\left({p.to_latex()}\\right) {symbol_of(mu)}" for mu, p in self.items()]
        return " \\\\\n+ ".join(lines)


def _latex_partition(mu: Partition) -> str:
    if not mu:
        return "\\varnothing"
    return "(" + ",".join(map(str, mu)) + ")"


def _check_partition(lam: Iterable[int], n: int) -> Partition:
    lam = as_partition(lam)
    if len(lam) > n:
        raise TableauError(f"{lam} has more than {n} nonzero parts")
    return lam


# -- Schur and factorial Schur polynomials --------------------------------------

@functools.lru_cache(maxsize=None)
def _factorial_schur(lam: Partition, n: int, family: int) -> Polynomial:
    terms = []
    for t in enumerate_semistandard(lam, n):
        factors = [x(a) + y(family, a + c - r) for (_, r, c), a in zip(t.boxes, t.entries)]
        terms.append(poly_prod(factors))
    return poly_sum(terms)


def factorial_schur(lam: Iterable[int], n: int, family: int = 1) -> Polynomial:
    """``s_lam(x | y^(family))`` as a tableau sum of products ``x_a + y_(a + c - r)``."""
    return _factorial_schur(_check_partition(lam, n), n, family)


@functools.lru_cache(maxsize=None)
def _schur(lam: Partition, n: int) -> Polynomial:
    return poly_sum(
        Polynomial.monomial((xvar(a), 1) for a in t.entries)
        for t in enumerate_semistandard(lam, n)
    )


def schur(lam: Iterable[int], n: int) -> Polynomial:
    return _schur(_check_partition(lam, n), n)


def product_factorial_schur(shape: MultiShape, n: int) -> Polynomial:
    """``prod_i s_(lam^(i))(x | y^(i))``."""
    return poly_prod(factorial_schur(lam, n, d) for d, lam in enumerate(shape.diagrams, start=1))


# -- the barred-tableau rule ------------------------------------------------------

def enumerate_lr_tableaux(shape: MultiShape, mu: Iterable[int], n: int) -> Iterator[BarredTableau]:
    """Barred tableaux of content ``mu`` with Yamanouchi unbarred column word."""
    mu = _check_partition(mu, n)
    yield from enumerate_yamanouchi(shape, n, mu)


def lr_coefficient(shape: MultiShape, mu: Iterable[int], n: int) -> Polynomial:
    return poly_sum(weight(t) for t in enumerate_lr_tableaux(shape, mu, n))


def lr_expand(shape: MultiShape, n: int) -> CoeffTable:
    """Coefficients of ``s_shape(x | y)`` in the Schur basis ``s_mu(x)``."""
    groups: dict[Partition, list[Polynomial]] = {}
    for t in enumerate_yamanouchi(shape, n):
        groups.setdefault(as_partition(unbarred_content(t)), []).append(weight(t))
    return CoeffTable(n, {mu: poly_sum(ws) for mu, ws in groups.items()}, shape)


# -- alternant oracle --------------------------------------------------------------

def rho(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def oracle_expand(shape: MultiShape, n: int) -> CoeffTable:
    """Schur expansion read off from ``a_rho * s_shape(x | y)``.

    The coefficient of ``x^(rho + nu)`` in ``a_(rho + mu)`` is 1 when
    ``nu = mu`` and 0 for every other partition ``nu``, so the Schur
    coefficient of ``mu`` is the coefficient of ``x^(rho + mu)`` in the product.
    """
    product = alternant(rho(n), n) * product_factorial_schur(shape, n)
    out = {}
    r = rho(n)
    for exponent, coeff in product.x_parts().items():
        e = tuple(exponent) + (0,) * (n - len(exponent))
        if all(a > b for a, b in zip(e, e[1:])):
            out[tuple(a - b for a, b in zip(e, r))] = coeff
    return CoeffTable(n, out, shape)


def oracle_coefficient(shape: MultiShape, mu: Iterable[int], n: int) -> Polynomial:
    mu = padded(_check_partition(mu, n), n)
    product = alternant(rho(n), n) * product_factorial_schur(shape, n)
    return product.coefficient_of_x(tuple(a + b for a, b in zip(rho(n), mu)))


# -- specialization ------------------------------------------------------------------

Assignment = int | Sequence[int] | Mapping[int, int]


def specialize_poly(p: Polynomial, assignments: Mapping[int, Assignment]) -> Polynomial:
    """Substitute values into y families.

    ``assignments[f]`` is an int (every ``y^(f)_j`` takes that value), a
    sequence (``y^(f)_j`` takes entry ``j - 1``; later indices stay
    symbolic), or a mapping ``{j: value}``.
    """
    values = {}
    for v in p.variables():
        if v[0] != Y_KIND or v[1] not in assignments:
            continue
        rule = assignments[v[1]]
        j = v[2]
        if isinstance(rule, int):
            values[v] = rule
        elif isinstance(rule, Mapping):
            if j in rule:
                values[v] = rule[j]
        elif j <= len(rule):
            values[v] = rule[j - 1]
    if values and all(val == 0 for val in values.values()):
        zeroed = set(values)
        return p.zero_vars(lambda v: v in zeroed)
    return p.subs(values)


def specialize(table: CoeffTable, assignments: Mapping[int, Assignment]) -> CoeffTable:
    return table.map(lambda p: specialize_poly(p, assignments))
