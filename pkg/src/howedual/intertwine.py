"""Intertwining distributions as exact Gaussian-times-polynomial data.

The distribution attached to an occurring parameter mu is, on the Cartan
slice with coordinates z_j = 2*pi*y_j (y_j the eigenvalues of w w*),

    prefactor * exp(-sum_j z_j) * Q(z),

where Q is the symmetric polynomial obtained by skew-symmetrizing
prod_j P_{a_j,b_j,2}(z_j) and dividing exactly by the Vandermonde
prod_{j<k} (z_j - z_k).  All pi-, i- and sqrt(2)-powers (including the
beta = 2*pi change of variable and the i-powers of the root product) live
in the SymScalar prefactor, so the polynomial side stays rational.

The module also carries the full normalization-constant chain, the two
independent value-at-zero computations, and the multiplicity-one identity
|T(0)| = 2 * vol(U_l) * dim Pi'.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import exp, factorial, pi

import numpy as np

from .exact import SymScalar
from .pab import UniPoly, pab2
from .reps import (
    DualPair,
    HCParam,
    ab_params,
    correspond,
    delta_of,
    dim_piprime,
    mysterious_factor,
    occurs_G,
    occurs_Gprime,
    s0_apply,
)

__all__ = [
    "MultiPoly",
    "DistributionData",
    "p_mu_product",
    "skew_symmetrize",
    "divide_by_vandermonde",
    "signed_vandermonde",
    "vandermonde_derivative_at_zero",
    "vol_unitary",
    "constants",
    "distribution_G",
    "distribution_Gprime",
    "proportionality",
    "value_at_zero_closed",
    "value_at_zero_oracle",
    "multiplicity_one_check",
    "eval_distribution",
    "eval_on_W",
    "eigvalsh_jacobi",
]


def perm_sign(perm) -> int:
    """Sign of a permutation given as a tuple of images of 0..n-1."""
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class MultiPoly:
    """Sparse multivariate polynomial with exact rational coefficients.

    Terms map exponent tuples (one slot per variable) to nonzero Fractions.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], Fraction] = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c != 0:
                clean[tuple(e)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def from_univariate(cls, p: UniPoly, var: int, nvars: int) -> "MultiPoly":
        terms = {}
        for d, c in enumerate(p.coeffs):
            if c != 0:
                e = [0] * nvars
                e[var] = d
                terms[tuple(e)] = c
        return cls(nvars, terms)

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def coefficient(self, e) -> Fraction:
        return self.terms.get(tuple(e), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    # -- algebra ------------------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MultiPoly(self.nvars, terms)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            terms: dict[tuple[int, ...], Fraction] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    terms[e] = terms.get(e, Fraction(0)) + c1 * c2
            return MultiPoly(self.nvars, terms)
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def permuted(self, perm) -> "MultiPoly":
        """Relabel variables: variable i becomes variable perm[i]."""
        terms = {}
        for e, c in self.terms.items():
            f = [0] * self.nvars
            for i, d in enumerate(e):
                f[perm[i]] = d
            terms[tuple(f)] = c
        return MultiPoly(self.nvars, terms)

    def is_symmetric(self) -> bool:
        """Invariance under every transposition of adjacent variables."""
        for i in range(self.nvars - 1):
            perm = list(range(self.nvars))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            if self.permuted(perm) != self:
                return False
        return True

    def eval_exact(self, point) -> Fraction:
        vals = [Fraction(p) for p in point]
        out = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, d in zip(vals, e):
                term *= v**d
            out += term
        return out

    def eval_float(self, point) -> float:
        out = 0.0
        for e, c in self.terms.items():
            term = float(c)
            for v, d in zip(point, e):
                term *= float(v) ** d
            out += term
        return out

    # -- presentation -------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: item[0], reverse=True)

    def to_json(self) -> list[dict]:
        return [{"exp": list(e), "coeff": str(c)} for e, c in self.sorted_terms()]

    def to_latex(self) -> str:
        if self.is_zero():
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = " ".join(
                f"z_{{{i + 1}}}" if d == 1 else f"z_{{{i + 1}}}^{{{d}}}"
                for i, d in enumerate(e)
                if d
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)} {mono}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        if self.is_zero():
            return "MultiPoly(0)"
        return "MultiPoly(" + " + ".join(f"{c}*z^{e}" for e, c in self.sorted_terms()) + ")"


# ---------------------------------------------------------------------------
# Skew-symmetrization and exact Vandermonde division
# ---------------------------------------------------------------------------


def p_mu_product(mu: HCParam, pair: DualPair) -> MultiPoly:
    """prod_j P_{a_j,b_j,2}(z_j); the zero polynomial when some b_j <= 0."""
    ab = ab_params(mu, pair)
    l = pair.l
    out = MultiPoly.constant(l, 1)
    for j, (a, b) in enumerate(ab):
        p = pab2(a, b)
        if p.is_zero():
            return MultiPoly.zero(l)
        out = out * MultiPoly.from_univariate(p, j, l)
    return out


def skew_symmetrize(p: MultiPoly) -> MultiPoly:
    """sum over permutations s of sgn(s) * (p with variables relabeled by s)."""
    out = MultiPoly.zero(p.nvars)
    for perm in permutations(range(p.nvars)):
        term = p.permuted(perm) * perm_sign(perm)
        out = out + term
    return out


def _divide_linear(p: MultiPoly, j: int, k: int) -> tuple[MultiPoly, MultiPoly]:
    """Divide with remainder by (z_j - z_k) via synthetic division in z_j."""
    n = p.nvars
    slices: dict[int, dict[tuple[int, ...], Fraction]] = {}
    for e, c in p.terms.items():
        d = e[j]
        e0 = e[:j] + (0,) + e[j + 1 :]
        slices.setdefault(d, {})[e0] = slices.get(d, {}).get(e0, Fraction(0)) + c
    if not slices:
        return MultiPoly.zero(n), MultiPoly.zero(n)
    top = max(slices)
    coeffs = [MultiPoly(n, slices.get(d, {})) for d in range(top + 1)]

    def times_zk(q: MultiPoly) -> MultiPoly:
        terms = {}
        for e, c in q.terms.items():
            f = list(e)
            f[k] += 1
            terms[tuple(f)] = c
        return MultiPoly(n, terms)

    quot_slices: list[MultiPoly] = [MultiPoly.zero(n)] * top
    carry = MultiPoly.zero(n)
    for d in range(top, 0, -1):
        carry = coeffs[d] + times_zk(carry)
        quot_slices[d - 1] = carry
    remainder = coeffs[0] + times_zk(carry)

    quot_terms: dict[tuple[int, ...], Fraction] = {}
    for d, q in enumerate(quot_slices):
        for e, c in q.terms.items():
            f = list(e)
            f[j] += d
            quot_terms[tuple(f)] = quot_terms.get(tuple(f), Fraction(0)) + c
    return MultiPoly(n, quot_terms), remainder


def divide_by_vandermonde(q: MultiPoly) -> MultiPoly:
    """Exact quotient by prod_{j<k} (z_j - z_k); raises on nonzero remainder.

    A nonzero remainder means the input was not skew-symmetric.
    """
    out = q
    for j in range(q.nvars):
        for k in range(j + 1, q.nvars):
            out, rem = _divide_linear(out, j, k)
            if not rem.is_zero():
                raise ValueError(
                    f"nonzero remainder dividing by (z_{j + 1} - z_{k + 1}); "
                    "input is not skew-symmetric"
                )
    return out


def signed_vandermonde(l: int) -> MultiPoly:
    """sum_s sgn(s) prod_j z_j^(s(j)-1); this is (-1)^(l(l-1)/2) times
    prod_{j<k} (z_j - z_k)."""
    terms = {}
    for perm in permutations(range(l)):
        e = tuple(perm[j] for j in range(l))
        terms[e] = Fraction(perm_sign(perm))
    return MultiPoly(l, terms)


def vandermonde_derivative_at_zero(p: MultiPoly) -> Fraction:
    """Apply sum_s sgn(s) d_1^(s(1)-1) ... d_l^(s(l)-1) and evaluate at 0.

    On a product of the form ``signed_vandermonde(l) * f`` this returns
    (prod_{k=1}^{l} k!) * f(0) exactly.
    """
    l = p.nvars
    out = Fraction(0)
    for perm in permutations(range(l)):
        e = tuple(perm[j] for j in range(l))
        c = p.terms.get(e)
        if c is None:
            continue
        fac = 1
        for d in e:
            fac *= factorial(d)
        out += perm_sign(perm) * fac * c
    return out


# ---------------------------------------------------------------------------
# The normalization-constant chain
# ---------------------------------------------------------------------------


def vol_unitary(n: int) -> SymScalar:
    """vol(U_n) = (2 pi)^(n(n+1)/2) / prod_{j<n} j!."""
    denom = 1
    for j in range(1, n):
        denom *= factorial(j)
    m = n * (n + 1) // 2
    return SymScalar(Fraction(1, denom), 2 * m, m)


def constants(pair: DualPair) -> dict[str, SymScalar]:
    """All normalization constants of the pair, as exact symbolic scalars.

    The sign of C_2 and the i-power conventions are fixed choices; every
    downstream identity is checked on moduli, where they drop out.
    """
    pair.require_ordered()
    l, lp = pair.l, pair.lp
    half = l * (l - 1) // 2
    fac = 1
    for j in range(1, l):
        fac *= factorial(j)

    vol_g = vol_unitary(l)
    vol_gp = vol_unitary(lp)
    vol_h = SymScalar(Fraction(1), 2 * l, l)
    # centralizer of the Cartan slice: 2^(l/2) (2 pi)^((l'-l)(l'-l+1)/2 + l) / prod_{j<l'-l} j!
    c = lp - l
    fac_c = 1
    for j in range(1, c):
        fac_c *= factorial(j)
    m = c * (c + 1) // 2 + l
    vol_s_h1 = SymScalar(Fraction(1, fac_c), l + 2 * m, m)

    c_weyl = SymScalar(Fraction(1, fac), 2 * half, half)
    c_w = SymScalar(Fraction(1), l * (2 * lp + 1))
    c_z = SymScalar(Fraction(1), 2 * l, l, -half % 4)
    c_1 = SymScalar(Fraction(1, fac), 2 * l * (l - lp), half, (l * lp) % 4)
    c_2 = SymScalar(Fraction(1), 2 * l + l * (2 * lp + 1), l) / vol_g
    c_h1 = SymScalar(Fraction((-1) ** (l * (lp - l))), 0, 0, (l * (lp - 1)) % 4)
    c_bullet = SymScalar(Fraction(2), 2 * l, l) * c_1 * c_2 / c_w
    return {
        "vol_G": vol_g,
        "vol_Gprime": vol_gp,
        "vol_H": vol_h,
        "vol_S_h1": vol_s_h1,
        "c_weyl": c_weyl,
        "C_W": c_w,
        "C_z": c_z,
        "C_1": c_1,
        "C_2": c_2,
        "C_h1": c_h1,
        "C_bullet": c_bullet,
    }


# ---------------------------------------------------------------------------
# Distributions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DistributionData:
    """Exact data of an intertwining distribution on the Cartan slice.

    The function is prefactor * exp(-sum_j z_j) * poly(z) with
    z_j = 2*pi*y_j; the zero distribution has zero prefactor and zero
    polynomial and marks a non-occurring parameter.
    """

    prefactor: SymScalar
    poly: MultiPoly

    def is_zero(self) -> bool:
        return self.prefactor.is_zero() or self.poly.is_zero()

    def to_json(self) -> dict:
        if self.is_zero():
            return {"zero": True}
        return {
            "prefactor": self.prefactor.to_json(),
            "poly": self.poly.to_json(),
            "gaussian": "exp(-sum z_j)",
            "variables": "z_j = 2*pi*y_j",
        }


def _pipeline(factors: list[UniPoly], l: int) -> MultiPoly:
    prod = MultiPoly.constant(l, 1)
    for j, p in enumerate(factors):
        prod = prod * MultiPoly.from_univariate(p, j, l)
    return divide_by_vandermonde(skew_symmetrize(prod))


def _slice_prefactor(pair: DualPair) -> SymScalar:
    # i^(l(l-1)/2) (2 pi)^(l(l-1)/2): the i-powers of the root product and
    # the beta-powers from rewriting the Vandermonde in z = 2*pi*y.
    half = pair.l * (pair.l - 1) // 2
    return SymScalar(Fraction(1), 2 * half, half, half % 4)


def _central_character(mu: HCParam) -> SymScalar:
    # Value of the central character at the base point of the Cayley lift
    # under the fixed "+" convention: i^(2 sum mu_j), a 4th root of unity.
    # For integral entry sums this is central_sign(mu); genuine parameters
    # of odd length can have half-integral sums, where the value is +-i.
    return SymScalar(Fraction(1), 0, 0, sum(m.doubled for m in mu) % 4)


def distribution_G(mu: HCParam, pair: DualPair) -> DistributionData:
    """Distribution data for a first-member parameter; zero iff mu does not occur."""
    ab = ab_params(mu, pair)  # rejects wrong parity
    l = pair.l
    if any(b <= 0 for _, b in ab):
        return DistributionData(SymScalar.zero(), MultiPoly.zero(l))
    inv = _pipeline([pab2(a, b) for a, b in ab], l)
    pref = constants(pair)["C_bullet"] * _central_character(mu) * _slice_prefactor(pair)
    return DistributionData(pref, inv)


def distribution_Gprime(mup: HCParam, pair: DualPair) -> DistributionData:
    """Distribution data for a second-member parameter; zero iff it does not occur.

    Same pipeline with the swapped index family P_{b_{s0,j}, a_{s0,j}, 2}
    and the factorial-ratio factor of ``mysterious_factor`` in the
    prefactor.
    """
    pair.require_ordered()
    l = pair.l
    if not occurs_Gprime(mup, pair):
        return DistributionData(SymScalar.zero(), MultiPoly.zero(l))
    d = delta_of(pair)
    s = s0_apply(mup, pair)
    swapped = []
    for j in range(l):
        a_s = (-s[j] - d + 1).to_int()
        b_s = (s[j] - d + 1).to_int()
        swapped.append(pab2(b_s, a_s))
    inv = _pipeline(swapped, l)
    pref = (
        constants(pair)["C_bullet"]
        * _central_character(mup)
        * mysterious_factor(mup, pair)
        * _slice_prefactor(pair)
    )
    return DistributionData(pref, inv)


def proportionality(mu: HCParam, mup: HCParam, pair: DualPair) -> SymScalar:
    """Exact ratio distribution_G / distribution_Gprime.

    Defined only when both distributions are nonzero and their invariant
    polynomials are exactly proportional, which happens precisely when
    mu' is the partner of mu.
    """
    dg = distribution_G(mu, pair)
    dgp = distribution_Gprime(mup, pair)
    if dg.is_zero() or dgp.is_zero():
        raise ValueError("one of the distributions vanishes")
    lead = max(dgp.poly.terms)
    if lead not in dg.poly.terms:
        raise ValueError("invariant polynomials are not proportional")
    ratio = dg.poly.terms[lead] / dgp.poly.terms[lead]
    if dg.poly != dgp.poly * ratio:
        raise ValueError("invariant polynomials are not proportional")
    return dg.prefactor * ratio / dgp.prefactor


# ---------------------------------------------------------------------------
# Value at zero and multiplicity one
# ---------------------------------------------------------------------------


def _value_prefactor(pair: DualPair) -> SymScalar:
    """|C_bullet| (2 pi)^(l(l-1)/2) l! / prod_{k<=l} k!."""
    l = pair.l
    fac = 1
    for k in range(1, l + 1):
        fac *= factorial(k)
    half = l * (l - 1) // 2
    return (
        abs(constants(pair)["C_bullet"])
        * SymScalar.two_pi_power(half)
        * Fraction(factorial(l), fac)
    )


def value_at_zero_closed(mu: HCParam, pair: DualPair) -> SymScalar:
    """|T(0)| from the closed factorial form.

    The bracket 2^(l l' - l(l+1)/2) * prod_j (mu_j+delta-1)! /
    ((l'-j)! (mu_j-delta)!) * prod_{j<k} (mu_j-mu_k) equals
    2^(l l' - l(l+1)/2) * dim Pi'; constants of modulus one are normalized
    away.
    """
    if not occurs_G(mu, pair):
        raise ValueError("parameter does not occur")
    l, lp = pair.l, pair.lp
    d = delta_of(pair)
    bracket = Fraction(1)
    for j in range(1, l + 1):
        m = mu[j - 1]
        bracket *= Fraction(
            factorial((m + d - 1).to_int()),
            factorial(lp - j) * factorial((m - d).to_int()),
        )
    for j in range(l):
        for k in range(j + 1, l):
            bracket *= (mu[j] - mu[k]).as_fraction()
    two_pow = l * lp - l * (l + 1) // 2
    return abs(_value_prefactor(pair) * SymScalar(bracket, 2 * two_pow))


def value_at_zero_oracle(mu: HCParam, pair: DualPair) -> SymScalar:
    """|T(0)| via the differential operator dual to the root product.

    Applies sum_s sgn(s) d^(s(1)-1)...d^(s(l)-1) to the exact skew sum and
    evaluates at 0; cross-checked internally against the per-permutation
    factorial expansion |W| sum_s sgn(s) prod_j (d^(s(j)-1) P_j)(0).
    """
    if not occurs_G(mu, pair):
        raise ValueError("parameter does not occur")
    l = pair.l
    skew = skew_symmetrize(p_mu_product(mu, pair))
    d_skew = vandermonde_derivative_at_zero(skew)

    ab = ab_params(mu, pair)
    per_perm = Fraction(0)
    for perm in permutations(range(l)):
        term = Fraction(perm_sign(perm))
        for j, (a, b) in enumerate(ab):
            # d^k P_{a,b,2} = P_{a,b-k,2}, so the derivative value at 0 is
            # the constant term of the lowered-index polynomial.
            low = pab2(a, b - perm[j])
            term *= low.coefficient(0)
        per_perm += term
    assert d_skew == factorial(l) * per_perm

    fac = 1
    for k in range(1, l + 1):
        fac *= factorial(k)
    return abs(
        abs(constants(pair)["C_bullet"])
        * SymScalar.two_pi_power(l * (l - 1) // 2)
        * SymScalar(Fraction(abs(d_skew), fac))
    )


def multiplicity_one_check(mu: HCParam, pair: DualPair) -> bool:
    """|T(0)| = 2 vol(U_l) dim Pi' computed three ways.

    The closed factorial form, the differential-operator oracle and the
    target 2 vol(U_l) dim Pi' must agree exactly as symbolic scalars.
    """
    if not occurs_G(mu, pair):
        raise ValueError("parameter does not occur")
    closed = value_at_zero_closed(mu, pair)
    oracle = value_at_zero_oracle(mu, pair)
    mup = correspond(mu, pair)
    target = abs(SymScalar(Fraction(2)) * vol_unitary(pair.l) * dim_piprime(mup, pair))
    return closed == oracle == target


# ---------------------------------------------------------------------------
# Numeric evaluation on the full matrix space
# ---------------------------------------------------------------------------


def eigvalsh_jacobi(h, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.

    Returns the eigenvalues in decreasing order.  Intended for the small
    (at most 6x6) moment-map matrices handled here; raises RuntimeError if
    the off-diagonal mass does not fall below ``tol`` within
    ``max_sweeps`` sweeps.
    """
    a = np.array(h, dtype=complex)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    if n == 1:
        return np.array([a[0, 0].real])
    scale = max(1.0, float(np.linalg.norm(a)))
    for _ in range(max_sweeps):
        off = np.sqrt(sum(abs(a[p, q]) ** 2 for p in range(n) for q in range(n) if p != q))
        if off <= tol * scale:
            return np.sort(np.diag(a).real)[::-1]
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                phase = apq / abs(apq)
                tau = (a[q, q].real - a[p, p].real) / (2.0 * abs(apq))
                if tau >= 0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                g = np.eye(n, dtype=complex)
                g[p, p] = c
                g[q, q] = c
                g[p, q] = s * phase
                g[q, p] = -s * np.conj(phase)
                a = g.conj().T @ a @ g
    raise RuntimeError("Jacobi eigenvalue iteration did not converge")


def eval_distribution(data: DistributionData, pair: DualPair, w) -> float:
    """Numeric value of given distribution data at a point of the matrix space.

    ``w`` is an l x l' complex matrix; the eigenvalues y_j >= 0 of
    w w^dagger give z_j = 2*pi*y_j and the value is
    |prefactor| * exp(-sum z_j) * poly(z).
    """
    w = np.asarray(w, dtype=complex)
    if w.shape != (pair.l, pair.lp):
        raise ValueError(f"matrix must be {pair.l} x {pair.lp}, got {w.shape}")
    if data.is_zero():
        return 0.0
    m = w @ w.conj().T
    y = eigvalsh_jacobi(m)
    y = np.clip(y, 0.0, None)
    z = 2.0 * pi * y
    return abs(data.prefactor).to_float() * exp(-float(z.sum())) * data.poly.eval_float(z)


def eval_on_W(mu: HCParam, pair: DualPair, w) -> float:
    """Numeric value of the first-member distribution at an l x l' matrix."""
    if not occurs_G(mu, pair):
        raise ValueError("parameter does not occur")
    return eval_distribution(distribution_G(mu, pair), pair, w)
