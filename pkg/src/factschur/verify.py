"""Exhaustive identity checks over small envelopes of shapes.

Each suite returns a :class:`SuiteResult` with the number of checks, the
number of failures and a description of the first failure.  The CLI's
``verify`` subcommand and the acceptance tests both drive these.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Iterator

from . import changebasis as cb
from .lrrule import factorial_schur, lr_coefficient, lr_expand, oracle_expand, product_factorial_schur, rho, schur
from .polyring import ONE, ZERO, Polynomial, alternant, poly_sum
from .tableaux import (
    BarredTableau,
    MultiShape,
    apply_permutation,
    as_partition,
    bad_guy_pair,
    bad_guy_site,
    bender_knuth,
    enumerate_barred,
    is_yamanouchi,
    multishapes,
    partitions_up_to,
    permute_vector,
    render,
    unbarred_column_word,
    unbarred_content,
    weight,
    weight_key,
)

log = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failed: int = 0
    first_failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def check(self, condition: bool, describe: Callable[[], str]) -> None:
        self.checked += 1
        if not condition:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = describe()

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.name}: {self.checked - self.failed}/{self.checked} checks passed"
        if self.first_failure:
            text += f"; first counterexample: {self.first_failure}"
        return text


def _shapes(max_boxes: int, n: int, max_r: int) -> Iterator[MultiShape]:
    return multishapes(max_boxes, max_r, max_rows=n)


def _describe(t: BarredTableau, extra: str = "") -> Callable[[], str]:
    return lambda: f"shape={t.shape.to_json()} n={t.n} {extra}\n{render(t)}"


# -- permutations -------------------------------------------------------------------

def reduced_words(perm: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All reduced words ``(i1, ..., it)`` with ``perm = sigma_i1 ... sigma_it``.

    ``perm`` is one-line notation on ``1..n``.
    """
    n = len(perm)
    descents = [i for i in range(1, n) if perm[i - 1] > perm[i]]
    if not descents:
        return [()]
    words = []
    for i in descents:
        # perm = (perm * sigma_i) * sigma_i with one fewer inversion
        shorter = list(perm)
        shorter[i - 1], shorter[i] = shorter[i], shorter[i - 1]
        words.extend(w + (i,) for w in reduced_words(tuple(shorter)))
    return words


# -- suites ---------------------------------------------------------------------------

def suite_involutions(max_boxes: int = 6, n: int = 3, max_r: int = 3) -> SuiteResult:
    """``s_i`` is an involution preserving weight and transposing content; permuted tableaux are word-independent."""
    res = SuiteResult(f"involutions (boxes<={max_boxes}, n={n}, r<={max_r})")
    perms = list(itertools.permutations(range(1, n + 1)))
    words = {p: reduced_words(p) for p in perms}
    for shape in _shapes(max_boxes, n, max_r):
        for t in enumerate_barred(shape, n):
            wk = weight_key(t)
            content = unbarred_content(t)
            cache: dict[tuple[int, ...], BarredTableau] = {(): t}

            def act(word):
                if word not in cache:
                    cache[word] = bender_knuth(act(word[1:]), word[0])
                return cache[word]

            for i in range(1, n):
                u = act((i,))
                res.check(u.is_valid(), lambda: _describe(t, f"s_{i}T invalid")())
                res.check(bender_knuth(u, i) == t, lambda: _describe(t, f"s_{i}^2 != id")())
                res.check(weight_key(u) == wk, lambda: _describe(t, f"weight changed by s_{i}")())
                res.check(
                    unbarred_content(u) == permute_vector(content, (i,)),
                    lambda: _describe(t, f"content not transposed by s_{i}")(),
                )
            for p in perms:
                target = permute_vector(content, words[p][0])
                for word in words[p]:
                    u = act(word)
                    res.check(
                        weight_key(u) == wk and unbarred_content(u) == target,
                        lambda: _describe(t, f"word {word}")(),
                    )
    return res


def _alternant_sum(groups: dict[tuple, int], n: int) -> Polynomial:
    r = rho(n)
    terms = []
    for (wk, content), count in groups.items():
        w = Polynomial.monomial(((1, d, j), 1) for d, j in wk) if wk else ONE
        terms.append(alternant(tuple(a + b for a, b in zip(r, content)), n) * (w * count))
    return poly_sum(terms)


def suite_badguys(max_boxes: int = 6, n: int = 3, max_r: int = 3) -> SuiteResult:
    res = SuiteResult(f"bad guys (boxes<={max_boxes}, n<={n}, r<={max_r})")
    for nn in range(1, n + 1):
        r = rho(nn)
        for shape in _shapes(max_boxes, nn, max_r):
            groups: dict[tuple, int] = {}
            for t in enumerate_barred(shape, nn):
                yam = is_yamanouchi(unbarred_column_word(t))
                star = bad_guy_pair(t)
                res.check((star is None) == yam, _describe(t, "bad-guy site disagrees with Yamanouchi test"))
                if star is None:
                    continue
                content = unbarred_content(t)
                key = (weight_key(t), content)
                groups[key] = groups.get(key, 0) + 1
                _, i = bad_guy_site(t)
                res.check(star.is_valid(), _describe(t, "T* invalid"))
                res.check(bad_guy_pair(star) == t, _describe(t, "(T*)* != T"))
                res.check(weight_key(star) == weight_key(t), _describe(t, "weight of T* differs"))
                shifted = tuple(a + b for a, b in zip(r, content))
                res.check(
                    tuple(a + b for a, b in zip(r, unbarred_content(star))) == permute_vector(shifted, (i,)),
                    _describe(t, f"rho+content(T*) != sigma_{i}(rho+content(T))"),
                )
                if star == t:
                    res.check(len(set(shifted)) < nn, _describe(t, "fixed point with nonvanishing alternant"))
            total = _alternant_sum(groups, nn)
            res.check(total.is_zero(), lambda: f"non-Yamanouchi sum nonzero for {shape.to_json()} n={nn}: {total}")
    return res


def suite_cancellation(max_boxes: int = 6, n: int = 3, max_r: int = 3) -> SuiteResult:
    res = SuiteResult(f"cancellation (boxes<={max_boxes}, n<={n}, r<={max_r})")
    for nn in range(1, n + 1):
        for shape in _shapes(max_boxes, nn, max_r):
            groups: dict[tuple, int] = {}
            for t in enumerate_barred(shape, nn):
                if not is_yamanouchi(unbarred_column_word(t)):
                    key = (weight_key(t), unbarred_content(t))
                    groups[key] = groups.get(key, 0) + 1
            total = _alternant_sum(groups, nn)
            res.check(total.is_zero(), lambda: f"{shape.to_json()} n={nn}: {total}")
    return res


def suite_alternant_sums(max_boxes: int = 6, n: int = 3, max_r: int = 3) -> SuiteResult:
    """``a_rho * s_shape(x|y)`` equals the alternant-weighted tableau sums, with and without the Yamanouchi restriction."""
    res = SuiteResult(f"alternant sums (boxes<={max_boxes}, n<={n}, r<={max_r})")
    for nn in range(1, n + 1):
        for shape in _shapes(max_boxes, nn, max_r):
            full: dict[tuple, int] = {}
            yam: dict[tuple, int] = {}
            bad: dict[tuple, int] = {}
            for t in enumerate_barred(shape, nn):
                key = (weight_key(t), unbarred_content(t))
                full[key] = full.get(key, 0) + 1
                target = yam if is_yamanouchi(unbarred_column_word(t)) else bad
                target[key] = target.get(key, 0) + 1
            lhs = alternant(rho(nn), nn) * product_factorial_schur(shape, nn)
            label = f"{shape.to_json()} n={nn}"
            res.check(lhs == _alternant_sum(full, nn), lambda: f"full sum mismatch {label}")
            res.check(lhs == _alternant_sum(yam, nn), lambda: f"Yamanouchi sum mismatch {label}")
            res.check(_alternant_sum(bad, nn).is_zero(), lambda: f"bad-guy sum nonzero {label}")
    return res


def suite_oracle(max_boxes: int = 6, n: int = 3, max_r: int = 3) -> SuiteResult:
    """Barred-tableau coefficients against the alternant oracle, for every admissible ``mu``."""
    res = SuiteResult(f"tableau rule vs oracle (boxes<={max_boxes}, n<={n}, r<={max_r})")
    for nn in range(1, n + 1):
        for shape in _shapes(max_boxes, nn, max_r):
            oracle = oracle_expand(shape, nn)
            table = lr_expand(shape, nn)
            res.check(table == oracle, lambda: f"table mismatch {shape.to_json()} n={nn}")
            for mu in partitions_up_to(shape.size, nn):
                res.check(
                    lr_coefficient(shape, mu, nn) == oracle[mu],
                    lambda: f"{shape.to_json()} mu={mu} n={nn}",
                )
                res.check(oracle[mu].is_homogeneous(shape.size - sum(mu)), lambda: f"inhomogeneous {shape.to_json()} mu={mu}")
    return res


def inverse_unitriangular(parts: list, entry: Callable) -> dict:
    """Inverse of ``(entry(lam, mu))`` over ``parts`` sorted by size, assuming unit diagonal and ``entry = 0`` unless ``|mu| < |lam|`` off the diagonal."""
    parts = sorted(parts, key=sum)
    inv: dict = {}
    for lam in parts:
        for mu in parts:
            acc = [ONE if lam == mu else ZERO]
            for nu in parts:
                if sum(nu) < sum(lam):
                    c = entry(lam, nu)
                    d = inv.get((nu, mu), ZERO)
                    if c and d:
                        acc.append(-(c * d))
            inv[(lam, mu)] = poly_sum(acc)
    return inv


def suite_basis(max_size: int = 4, n: int = 3, max_N: int = 6) -> SuiteResult:
    res = SuiteResult(f"basis (|lam|<={max_size}, n<={n}, N<={max_N})")
    for N in range(1, max_N + 1):
        A, B = cb.matrix_AB(N)
        res.check(cb.is_identity(cb.matmul(A, B)) and cb.is_identity(cb.matmul(B, A)), lambda: f"AB != I for N={N}")
    for nn in range(1, n + 1):
        parts = list(partitions_up_to(max_size, nn))
        c = {(lam, mu): cb.c_coeff_det(lam, mu, nn) for lam in parts for mu in parts}
        d = {(lam, mu): cb.d_coeff_det(lam, mu, nn) for lam in parts for mu in parts}
        inv = inverse_unitriangular(parts, lambda lam, mu: c[(lam, mu)])
        for lam in parts:
            tableau = lr_expand(MultiShape((lam,)), nn)
            m0 = lam[0] if lam else 0
            for mu in parts:
                label = f"lam={lam} mu={mu} n={nn}"
                res.check(c[(lam, mu)] == tableau[mu], lambda: f"c det != tableau rule {label}")
                res.check(d[(lam, mu)] == inv[(lam, mu)], lambda: f"d det != inverse matrix {label}")
                m = max(m0, mu[0] if mu else 0)
                dual = cb.d_coeff_dual(lam, mu, nn)
                res.check(dual == d[(lam, mu)], lambda: f"dual != det {label}")
                res.check(cb.d_coeff_dual(lam, mu, nn, m + 1) == dual, lambda: f"dual not m-stable {label}")
                delta = poly_sum(c[(lam, nu)] * d[(nu, mu)] for nu in parts)
                res.check(delta == (ONE if lam == mu else ZERO), lambda: f"sum c*d != delta {label}")
                Am, Bm = cb.matrix_AB(nn + m if nn + m else 1)
                I_lam = cb.partition_to_index_set(lam, nn, m)
                I_mu = cb.partition_to_index_set(mu, nn, m)
                if nn + m:
                    res.check(cb.determinant(cb.submatrix(Am, I_lam, I_mu)) == c[(lam, mu)], lambda: f"minor of A != c {label}")
                    res.check(cb.determinant(cb.submatrix(Bm, I_lam, I_mu)) == d[(lam, mu)], lambda: f"minor of B != d {label}")
            recon = poly_sum(d[(lam, mu)] * factorial_schur(mu, nn) for mu in parts)
            res.check(recon == schur(lam, nn), lambda: f"schur reconstruction fails lam={lam} n={nn}")
    return res


def suite_composition(max_boxes: int = 6, n: int = 3, recon_boxes: int = 5, recon_n: int = 2) -> SuiteResult:
    res = SuiteResult(f"composition (r=2 boxes<={max_boxes} n<={n}; recon boxes<={recon_boxes} n<={recon_n})")
    for nn in range(1, n + 1):
        for shape in _shapes(max_boxes, nn, 2):
            if shape.r != 2:
                continue
            for mu in partitions_up_to(shape.size, nn):
                res.check(
                    cb.compose_via_classical(shape, mu, nn) == lr_coefficient(shape, mu, nn),
                    lambda: f"compose != lr {shape.to_json()} mu={mu} n={nn}",
                )
    for nn in range(1, recon_n + 1):
        for shape in _shapes(recon_boxes, nn, 3):
            target = product_factorial_schur(shape, nn)
            for fam in range(1, shape.r + 1):
                table = cb.e_expand(shape, nn, fam)
                recon = poly_sum(p * factorial_schur(mu, nn, fam) for mu, p in table.entries.items())
                res.check(recon == target, lambda: f"factorial reconstruction {shape.to_json()} n={nn} family={fam}")
    return res


SUITES = {
    "involutions": suite_involutions,
    "badguys": suite_badguys,
    "cancellation": suite_cancellation,
    "lemma3": suite_alternant_sums,
    "theorem": suite_oracle,
    "basis": suite_basis,
    "composition": suite_composition,
}
