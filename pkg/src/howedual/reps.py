"""Weights and parameters for the dual pair (U_l, U_l').

Highest weights, Harish-Chandra parameters, the occurrence tests for both
members, the aligning Weyl element s0, the correspondence map and its
inverse, and the two dimension formulas.  The convention throughout is
l <= l'; computations for the second member are expressed on the embedded
Cartan of the first through s0 and the shifted half-integers delta and
delta'.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exact import HalfInt, SymScalar

__all__ = [
    "DualPair",
    "HCParam",
    "HighestWeight",
    "delta_of",
    "delta_prime_of",
    "rho",
    "rho_pp",
    "is_genuine",
    "hc_param",
    "hw_of",
    "occurs_G",
    "occurs_G_reason",
    "s0_apply",
    "occurs_Gprime",
    "correspond",
    "correspond_back",
    "dim_weyl",
    "dim_piprime",
    "ab_params",
    "central_sign",
    "mysterious_factor",
]


@dataclass(frozen=True)
class DualPair:
    """The pair (U_l, U_l') with 1 <= l and 1 <= l'; G-side operations need l <= l'."""

    l: int
    lp: int

    def __post_init__(self):
        if self.l < 1 or self.lp < 1:
            raise ValueError("both ranks must be positive")

    def require_ordered(self):
        if self.l > self.lp:
            raise ValueError(
                f"operation needs l <= l' (got l={self.l}, l'={self.lp}); "
                "swap the pair for reversed-role computations"
            )


def _coerce_halfint(v) -> HalfInt:
    if isinstance(v, HalfInt):
        return v
    if isinstance(v, int):
        return HalfInt(2 * v)
    if isinstance(v, str):
        return HalfInt.parse(v)
    if isinstance(v, Fraction):
        if v.denominator not in (1, 2):
            raise ValueError(f"not a half-integer: {v}")
        return HalfInt(v.numerator * (2 // v.denominator))
    raise TypeError(f"cannot interpret {v!r} as a half-integer")


class _HalfIntTuple:
    """Shared container behaviour for weight-like tuples of half-integers."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        es = tuple(_coerce_halfint(e) for e in entries)
        if not es:
            raise ValueError("parameter needs at least one entry")
        self._validate(es)
        self.entries: tuple[HalfInt, ...] = es

    def _validate(self, es):
        raise NotImplementedError

    @classmethod
    def parse(cls, text: str):
        return cls(part for part in text.split(","))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i) -> HalfInt:
        return self.entries[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, type(self)):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self.entries))

    def to_json(self) -> list[str]:
        return [str(e) for e in self.entries]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({', '.join(str(e) for e in self.entries)})"


class HCParam(_HalfIntTuple):
    """A strictly decreasing tuple of half-integers (a Harish-Chandra parameter).

    Strict dominance is enforced at construction; Weyl-orbit inputs should
    be sorted (with sign tracking) before entry.
    """

    def _validate(self, es):
        for a, b in zip(es, es[1:]):
            if not a > b:
                raise ValueError(f"entries must be strictly decreasing: {[str(e) for e in es]}")


class HighestWeight(_HalfIntTuple):
    """A weakly decreasing tuple of half-integers (a highest weight)."""

    def _validate(self, es):
        for a, b in zip(es, es[1:]):
            if not a >= b:
                raise ValueError(f"entries must be weakly decreasing: {[str(e) for e in es]}")


def delta_of(pair: DualPair) -> HalfInt:
    """delta = (l' - l + 1)/2."""
    return HalfInt(pair.lp - pair.l + 1)


def delta_prime_of(pair: DualPair) -> HalfInt:
    """delta' = (l - l' + 1)/2."""
    return HalfInt(pair.l - pair.lp + 1)


def rho(n: int) -> HCParam:
    """Half-sum of positive roots for U_n: ((n+1)/2 - j) for j = 1..n."""
    if n < 1:
        raise ValueError("rho needs n >= 1")
    return HCParam(HalfInt(n + 1 - 2 * j) for j in range(1, n + 1))


def rho_pp(pair: DualPair) -> tuple[HalfInt, ...]:
    """The rho-string (delta - j) for j = 1..l'-l of the group U_{l'-l}; empty for l = l'."""
    pair.require_ordered()
    return tuple(HalfInt(pair.lp - pair.l + 1 - 2 * j) for j in range(1, pair.lp - pair.l + 1))


def is_genuine(hw: HighestWeight, pair: DualPair) -> bool:
    """Genuineness for the first member: every entry minus l'/2 is an integer."""
    return all((e.doubled - pair.lp) % 2 == 0 for e in hw)


def hc_param(hw: HighestWeight, pair: DualPair) -> HCParam:
    """Harish-Chandra parameter mu = lambda + rho of a genuine highest weight."""
    if len(hw) != pair.l:
        raise ValueError(f"highest weight must have {pair.l} entries")
    if not is_genuine(hw, pair):
        raise ValueError("highest weight is not genuine: entries - l'/2 must be integers")
    r = rho(pair.l)
    return HCParam(a + b for a, b in zip(hw, r))


def hw_of(mu: HCParam, pair: DualPair) -> HighestWeight:
    """Inverse of ``hc_param``: lambda = mu - rho, validated for genuineness."""
    if len(mu) != pair.l:
        raise ValueError(f"parameter must have {pair.l} entries")
    r = rho(pair.l)
    hw = HighestWeight(a - b for a, b in zip(mu, r))
    if not is_genuine(hw, pair):
        raise ValueError("parameter does not come from a genuine highest weight")
    return hw


def _on_delta_lattice(value: HalfInt, delta: HalfInt) -> bool:
    """True when value lies in delta + Z (the right parity class)."""
    return (value.doubled - delta.doubled) % 2 == 0


def occurs_G_reason(mu: HCParam, pair: DualPair) -> tuple[bool, str | None]:
    """Occurrence test for the first member, with a failure reason.

    mu occurs iff every entry lies in delta + Z_{>=0}.  A parity mismatch
    (entry not in delta + Z) reports ``"parity"``; entries of the right
    class below delta report ``"not-occurring"``.
    """
    pair.require_ordered()
    if len(mu) != pair.l:
        raise ValueError(f"parameter must have {pair.l} entries, got {len(mu)}")
    d = delta_of(pair)
    if any(not _on_delta_lattice(m, d) for m in mu):
        return False, "parity"
    if any(m < d for m in mu):
        return False, "not-occurring"
    return True, None


def occurs_G(mu: HCParam, pair: DualPair) -> bool:
    return occurs_G_reason(mu, pair)[0]


def s0_apply(mup: HCParam, pair: DualPair) -> tuple[HalfInt, ...]:
    """The aligning Weyl element: entry j is mu'_{l'-l+j} for j <= l and
    mu'_{j-l} for j > l; the identity when l = l'."""
    pair.require_ordered()
    if len(mup) != pair.lp:
        raise ValueError(f"parameter must have {pair.lp} entries, got {len(mup)}")
    l, lp = pair.l, pair.lp
    return tuple(
        mup[lp - l + j - 1] if j <= l else mup[j - l - 1] for j in range(1, lp + 1)
    )


def occurs_Gprime_reason(mup: HCParam, pair: DualPair) -> tuple[bool, str | None]:
    """Occurrence test for the second member, with a failure reason.

    For l' > l: -(s0 mu') restricted to the first l slots must lie in
    delta + Z_{>=0} and the tail must equal the rho-string of U_{l'-l}.
    For l' = l: -mu' must lie in delta' + Z_{>=0}.
    """
    pair.require_ordered()
    if len(mup) != pair.lp:
        raise ValueError(f"parameter must have {pair.lp} entries, got {len(mup)}")
    l, lp = pair.l, pair.lp
    if lp == l:
        dp = delta_prime_of(pair)
        if any(not _on_delta_lattice(-m, dp) for m in mup):
            return False, "parity"
        if any(-m < dp for m in mup):
            return False, "not-occurring"
        return True, None
    d = delta_of(pair)
    s = s0_apply(mup, pair)
    head, tail = s[:l], s[l:]
    if any(not _on_delta_lattice(-m, d) for m in head):
        return False, "parity"
    if any(-m < d for m in head):
        return False, "not-occurring"
    if tail != rho_pp(pair):
        return False, "tail"
    return True, None


def occurs_Gprime(mup: HCParam, pair: DualPair) -> bool:
    return occurs_Gprime_reason(mup, pair)[0]


def correspond(mu: HCParam, pair: DualPair) -> HCParam:
    """The parameter of the partner representation on the second member.

    The first l'-l entries are the rho-string of U_{l'-l} and the rest is
    the negated reversal of mu, so mu'_{l'+1-j} = -mu_j.
    """
    if not occurs_G(mu, pair):
        raise ValueError("parameter does not occur; no partner exists")
    head = rho_pp(pair)
    tail = tuple(-m for m in reversed(mu.entries))
    out = HCParam(head + tail)
    assert occurs_Gprime(out, pair)
    return out


def correspond_back(mup: HCParam, pair: DualPair) -> HCParam:
    """Inverse of ``correspond``: mu_j = -mu'_{l'+1-j}."""
    if not occurs_Gprime(mup, pair):
        raise ValueError("parameter does not occur; no partner exists")
    l, lp = pair.l, pair.lp
    return HCParam(-mup[lp - j] for j in range(1, l + 1))


def dim_weyl(mu: HCParam) -> int:
    """Weyl dimension formula: prod_{j<k} (mu_j - mu_k) / (k - j)."""
    n = len(mu)
    out = Fraction(1)
    for j in range(n):
        for k in range(j + 1, n):
            out *= Fraction((mu[j] - mu[k]).doubled, 2 * (k - j))
    if out.denominator != 1 or out <= 0:
        raise ValueError("parameter is not strictly dominant")
    return int(out)


def dim_piprime(mup: HCParam, pair: DualPair) -> int:
    """Dimension of the second-member representation from its occurrence data.

    Three factors: 1 / prod_{j<=l} (l'-j)!, the factorial ratios
    (delta - mu'_j - 1)! / (-mu'_j - delta)! over the last l slots, and the
    root-difference product over those slots.  Agrees with ``dim_weyl``.
    """
    if not occurs_Gprime(mup, pair):
        raise ValueError("parameter does not occur")
    l, lp = pair.l, pair.lp
    d = delta_of(pair)
    out = Fraction(1)
    for j in range(1, l + 1):
        out /= factorial(lp - j)
    for j in range(lp - l + 1, lp + 1):
        m = mup[j - 1]
        out *= factorial((d - m - 1).to_int())
        out /= factorial((-m - d).to_int())
    for j in range(lp - l + 1, lp + 1):
        for k in range(j + 1, lp + 1):
            out *= (mup[j - 1] - mup[k - 1]).as_fraction()
    if out.denominator != 1:
        raise ValueError("dimension formula did not produce an integer")
    return int(out)


def ab_params(mu: HCParam, pair: DualPair) -> tuple[tuple[int, int], ...]:
    """The integer pairs a_j = -mu_j - delta + 1, b_j = mu_j - delta + 1."""
    pair.require_ordered()
    if len(mu) != pair.l:
        raise ValueError(f"parameter must have {pair.l} entries")
    d = delta_of(pair)
    out = []
    for m in mu:
        a = -m - d + 1
        b = m - d + 1
        if not a.is_integer():
            raise ValueError(f"entry {m} has the wrong parity class for delta = {d}")
        out.append((a.to_int(), b.to_int()))
    return tuple(out)


def central_sign(mu: HCParam) -> int:
    """(-1)^(sum mu_j) under the fixed "+" convention for the central character."""
    total = HalfInt(sum(m.doubled for m in mu))
    if not total.is_integer():
        raise ValueError("sum of entries is not an integer; central sign undefined")
    return -1 if total.to_int() % 2 else 1


def mysterious_factor(mup: HCParam, pair: DualPair) -> SymScalar:
    """prod_{j<=l} (-(s0 mu')_j + delta - 1)! / (-(s0 mu')_j - delta)!.

    For an occurring parameter this equals
    (dim Pi' / dim Pi) * prod_{j<=l} (l'-j)!/(l-j)!, a positive rational.
    """
    if not occurs_Gprime(mup, pair):
        raise ValueError("parameter does not occur")
    d = delta_of(pair)
    s = s0_apply(mup, pair)
    out = Fraction(1)
    for j in range(pair.l):
        out *= factorial((-s[j] + d - 1).to_int())
        out /= factorial((-s[j] - d).to_int())
    return SymScalar(out)
