"""Parameter validation and integer arithmetic for arithmetic-sequence curves.

Fixing integers m0 > p >= 2 and d >= 1 with gcd(m0, d) = 1 yields the
generators m_i = m0 + i*d, i in [0, p], of a numerical semigroup.  The
quotient-remainder split m0 = a*p + b with b in [1, p] supplies the pair
(a, b) used by every construction downstream.  Validation is eager and
strict: the generators must be a minimal generating set, since the
structural results built on top of them assume exactly that.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .report import VerificationReport


class ParameterError(ValueError):
    """A parameter set violates one of the standing hypotheses."""


class GcdError(ParameterError):
    """gcd(m0, d) is not 1."""


class HypothesisError(ParameterError):
    """A range hypothesis (p >= 2, d >= 1, m0 > p) fails."""


class NotMinimalError(ParameterError):
    """Some generator is a non-negative integer combination of the others."""

    def __init__(self, message: str, index: int, representation: tuple[int, ...]):
        super().__init__(message)
        self.index = index
        self.representation = representation


@dataclass(frozen=True)
class CurveParams:
    """Validated parameters (p, m0, d, a, b); immutable, safe to share."""

    p: int
    m0: int
    d: int
    a: int
    b: int
    generators: tuple[int, ...]

    @property
    def nvars(self) -> int:
        """Number of ring variables X1, ..., Xp, X0."""
        return self.p + 1

    @property
    def exponent_weights(self) -> tuple[int, ...]:
        """Generator weights in exponent-tuple position order (X1, ..., Xp, X0)."""
        return self.generators[1:] + (self.generators[0],)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "m0": self.m0,
            "d": self.d,
            "a": self.a,
            "b": self.b,
            "generators": list(self.generators),
        }

    def __str__(self) -> str:
        return f"(m0={self.m0}, d={self.d}, p={self.p})"


def _representation(x: int, values: tuple[int, ...]) -> tuple[int, ...] | None:
    """Multiplicities writing x as a non-negative combination of values, or None.

    Dynamic programming over [0, x] with back-pointers; the witness is
    reconstructed by walking back, so it is exact but not unique.
    """
    if x == 0:
        return (0,) * len(values)
    used = [None] * (x + 1)
    reachable = [False] * (x + 1)
    reachable[0] = True
    for v in range(1, x + 1):
        for k, val in enumerate(values):
            if val <= v and reachable[v - val]:
                reachable[v] = True
                used[v] = k
                break
    if not reachable[x]:
        return None
    counts = [0] * len(values)
    v = x
    while v:
        k = used[v]
        counts[k] += 1
        v -= values[k]
    return tuple(counts)


def make_params(m0: int, d: int, p: int) -> CurveParams:
    """Validate (m0, d, p) and return the parameter record.

    Raises GcdError when gcd(m0, d) != 1, HypothesisError when a basic
    range hypothesis fails (in particular m0 <= p, which forces a < 1),
    and NotMinimalError when some generator lies in the semigroup of the
    others.
    """
    if p < 2:
        raise HypothesisError(f"p must be at least 2, got {p}")
    if d < 1:
        raise HypothesisError(f"d must be at least 1, got {d}")
    if m0 < 1:
        raise HypothesisError(f"m0 must be positive, got {m0}")
    g = gcd(m0, d)
    if g != 1:
        raise GcdError(f"gcd(m0, d) = gcd({m0}, {d}) = {g}, must be 1")
    a, r = divmod(m0 - 1, p)
    b = r + 1
    if a < 1:
        raise HypothesisError(f"m0 = {m0} must exceed p = {p} so that m0 = a*p + b with a >= 1")
    generators = tuple(m0 + i * d for i in range(p + 1))
    for i, m_i in enumerate(generators):
        others = generators[:i] + generators[i + 1 :]
        witness = _representation(m_i, others)
        if witness is not None:
            raise NotMinimalError(
                f"m_{i} = {m_i} is representable by the other generators {others} "
                f"with multiplicities {witness}",
                i,
                witness,
            )
    return CurveParams(p=p, m0=m0, d=d, a=a, b=b, generators=generators)


def semigroup_membership(params: CurveParams, x: int) -> tuple[int, ...] | None:
    """A witness (c_0, ..., c_p) with x = sum c_i * m_i, or None."""
    if x < 0:
        raise ValueError(f"x must be non-negative, got {x}")
    return _representation(x, params.generators)


def semigroup_contains(params: CurveParams, x: int) -> bool:
    return semigroup_membership(params, x) is not None


def min_multiple_of_mp(params: CurveParams) -> tuple[int, int, int]:
    """Smallest m >= 1 with m*m_p = n*m0 + m_i, n >= 1 and 0 <= i < p.

    Exhaustive search over m = 1, 2, ...; the solution (n, i) is unique
    for each m because gcd(m0, d) = 1, and the loop terminates no later
    than m = a + 1.  Returns (m, n, i).
    """
    gens = params.generators
    m0, mp = gens[0], gens[-1]
    for m in itertools.count(1):
        for i in range(params.p):
            rest = m * mp - gens[i]
            if rest >= m0 and rest % m0 == 0:
                return m, rest // m0, i


def min_multiple_of_m0(params: CurveParams) -> tuple[int, int, int]:
    """Smallest n >= 1 with n*m0 = m*m_p + m_i, m >= 1 and 0 < i <= p.

    Exhaustive search over n = 1, 2, ...; terminates no later than
    n = a + d + 1.  Returns (n, m, i).
    """
    gens = params.generators
    m0, mp = gens[0], gens[-1]
    for n in itertools.count(1):
        for i in range(1, params.p + 1):
            rest = n * m0 - gens[i]
            if rest >= mp and rest % mp == 0:
                return n, rest // mp, i


def mp_multiple_identity(params: CurveParams) -> tuple[int, int, int]:
    """Closed form (a+1, a+d, p-b): (a+1)*m_p = (a+d)*m0 + m_{p-b}."""
    return params.a + 1, params.a + params.d, params.p - params.b


def m0_multiple_identity(params: CurveParams) -> tuple[int, int, int]:
    """Closed form (a+d+1, a, b): (a+d+1)*m0 = a*m_p + m_b.

    The identity follows from a*m_p + m_b = (a+d)*m0 + (ap + b) + ...
    more directly: a*m_p + m_b = a*m0 + a*p*d + m0 + b*d = (a+d+1)*m0.
    Exhaustive search (min_multiple_of_m0) confirms minimality.
    """
    return params.a + params.d + 1, params.a, params.b


def weight(params: CurveParams, exponents: tuple[int, ...]) -> int:
    """Weight of a monomial: sum of exponent * generator over all variables.

    Exponents are in position order (X1, ..., Xp, X0), X0 last.
    """
    if len(exponents) != params.nvars:
        raise ValueError(f"expected {params.nvars} exponents, got {len(exponents)}")
    return sum(e * w for e, w in zip(exponents, params.exponent_weights))


def parameter_sweep(p_values, a_values, d_values, b_values=None):
    """Yield every valid CurveParams with m0 = a*p + b over the given ranges.

    Combinations failing the gcd or minimality hypotheses are skipped.
    When b_values is None, b runs over the full range [1, p].
    """
    for p in p_values:
        for a in a_values:
            bs = b_values if b_values is not None else range(1, p + 1)
            for b in bs:
                if not 1 <= b <= p:
                    continue
                for d in d_values:
                    try:
                        yield make_params(a * p + b, d, p)
                    except ParameterError:
                        continue


def verify_minimal_multiples(params: CurveParams) -> VerificationReport:
    """Check the two searched minimal multiples against their closed forms."""
    report = VerificationReport(params)
    found = min_multiple_of_mp(params)
    expect = mp_multiple_identity(params)
    report.add(
        "mp-minimal-multiple",
        found == expect,
        detail=f"search {found}, identity {expect}",
        witness=None if found == expect else {"search": list(found), "identity": list(expect)},
    )
    found = min_multiple_of_m0(params)
    expect = m0_multiple_identity(params)
    report.add(
        "m0-minimal-multiple",
        found == expect,
        detail=f"search {found}, identity {expect}",
        witness=None if found == expect else {"search": list(found), "identity": list(expect)},
    )
    return report
