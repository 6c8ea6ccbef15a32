"""Zeta, order-complement and Möbius matrices of a poset, chain counts,
Euler characteristics, and the identities tying them together.

Conventions: ``Z[i, j] = 1`` iff ``x_i <= x_j``; the order-complement matrix
is ``Zbar = J - Z``; ``N = Z - I``; characteristic polynomials are
``det(M - λI)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from . import linalg
from .linalg import IntMatrix, IntPolynomial
from .oracle import DEFAULT_SIZE_GUARD, enumerate_chains
from .poset import Poset, find_maximum, find_minimum, linear_extension, relabel, remove_element


@dataclass(frozen=True)
class ChainCensus:
    """``counts[k]`` is the number of chains of length ``k`` (``k + 1`` elements), ``k < n``."""

    counts: tuple

    @property
    def euler_characteristic(self) -> int:
        return sum(c if k % 2 == 0 else -c for k, c in enumerate(self.counts))

    @property
    def height(self) -> int:
        """Length of the longest chain, or -1 for the empty poset."""
        nz = [k for k, c in enumerate(self.counts) if c]
        return nz[-1] if nz else -1


def zeta_matrix(p: Poset) -> IntMatrix:
    return IntMatrix(p.n, p.n, (int(v) for row in p.leq for v in row))


def complement_matrix(p: Poset) -> IntMatrix:
    return IntMatrix(p.n, p.n, (int(not v) for row in p.leq for v in row))


def strict_matrix(p: Poset) -> IntMatrix:
    return IntMatrix(p.n, p.n, (int(v and i != j) for i, row in enumerate(p.leq) for j, v in enumerate(row)))


def mobius_matrix(p: Poset) -> IntMatrix:
    """Inverse of the zeta matrix as the finite sum ``I - N + N^2 - ...``."""
    n = p.n
    N = strict_matrix(p)
    neg = -N
    term = linalg.identity(n)
    acc = term
    for _ in range(1, n):
        term = term @ neg
        if linalg.is_zero(term):
            break
        acc = acc + term
    return acc


def chain_counts(p: Poset) -> ChainCensus:
    """``c_k = 1^T N^k 1`` via repeated row-vector products."""
    N = strict_matrix(p)
    v = [1] * p.n
    counts = []
    for _ in range(p.n):
        counts.append(sum(v))
        v = linalg.vecmat(v, N)
    return ChainCensus(tuple(counts))


def euler_char_chains(p: Poset) -> int:
    return chain_counts(p).euler_characteristic


def euler_char_mobius(p: Poset) -> int:
    return mobius_matrix(p).total()


def reduced_euler_char(p: Poset) -> int:
    return euler_char_chains(p) - 1


def charpoly_formula(p: Poset, census: Optional[ChainCensus] = None) -> IntPolynomial:
    """Closed form for ``det(Zbar - λI)`` built from chain counts alone:

        (-1)^n (λ+1)^n - sum_k (-1)^(k+n) c_k (λ+1)^(n-1-k)
    """
    n = p.n
    if census is None:
        census = chain_counts(p)
    sgn_n = -1 if n % 2 else 1
    poly = IntPolynomial.linear_power(1, n, lead=sgn_n)
    for k, c in enumerate(census.counts):
        if c:
            sgn = -1 if (k + n) % 2 else 1
            poly = poly - IntPolynomial.linear_power(1, n - 1 - k, lead=sgn * c)
    return poly


def det_complement_direct(p: Poset) -> int:
    return linalg.determinant(complement_matrix(p))


def det_complement_via_theorem(p: Poset) -> int:
    sgn = 1 if (p.n + 1) % 2 == 0 else -1
    return sgn * reduced_euler_char(p)


def neg_lambda_power(n: int) -> IntPolynomial:
    """``(-λ)^n``."""
    return IntPolynomial.monomial(n, -1 if n % 2 else 1)


def one_minus_lambda_power(n: int) -> IntPolynomial:
    """``(1 - λ)^n``."""
    return IntPolynomial([1, -1]) ** n


# reports -------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: Any
    rhs: Any
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        d = {"name": self.name, "lhs": _jsonable(self.lhs), "rhs": _jsonable(self.rhs), "pass": self.passed}
        if self.detail:
            d["detail"] = self.detail
        return d


def _jsonable(v):
    if isinstance(v, IntPolynomial):
        return list(v.coeffs)
    if isinstance(v, IntMatrix):
        return v.to_rows()
    if isinstance(v, (tuple, list)):
        return [_jsonable(x) for x in v]
    return v


@dataclass
class VerificationReport:
    name: str
    n: int
    chi: int
    reduced_chi: int
    det_complement: int
    checks: list = field(default_factory=list)

    def add(self, name, lhs, rhs, detail="") -> IdentityCheck:
        chk = IdentityCheck(name, lhs, rhs, detail)
        self.checks.append(chk)
        return chk

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name) -> IdentityCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list:
        return [c.name for c in self.checks]

    def to_dict(self) -> dict:
        return {
            "poset": {"n": self.n, "name": self.name},
            "invariants": {"chi": self.chi, "reduced_chi": self.reduced_chi, "det_complement": self.det_complement},
            "identities": [c.to_dict() for c in self.checks],
            "summary": {"passed": self.passed, "failed": self.failed},
        }


def spectral_checks(p: Poset, report: VerificationReport, cp: Optional[IntPolynomial] = None) -> None:
    """Eigenvalue statements about ``Zbar`` recorded as exact polynomial identities.

    (a) trace zero, read off the ``λ^(n-1)`` coefficient;
    (b) with a maximum (preferred) or minimum ``x``: zero constant term and
        ``charpoly(Zbar) = -λ * charpoly(Zbar of P - x)``;
    (c) for a total order: ``charpoly(Zbar) = (-λ)^n``.
    """
    n = p.n
    if cp is None:
        cp = linalg.charpoly(complement_matrix(p))
    if n >= 1:
        report.add("spectral (a): coefficient of λ^(n-1) in charpoly(Z̄) = 0", cp.coeff(n - 1), 0)
    x = find_maximum(p)
    which = "maximum"
    if x is None:
        x = find_minimum(p)
        which = "minimum"
    if x is not None:
        reduced = linalg.charpoly(complement_matrix(remove_element(p, x)))
        detail = f"{which} {p.names[x]}"
        report.add("spectral (b): charpoly(Z̄)(0) = 0", cp(0), 0, detail)
        report.add("spectral (b): charpoly(Z̄) = -λ·charpoly(Z̄')", cp, IntPolynomial([0, -1]) * reduced, detail)
    if p.is_total():
        report.add("spectral (c): charpoly(Z̄) = (-λ)^n", cp, neg_lambda_power(n), "total order")


def verify_theorem(p: Poset, name: str = "", size_guard: int = DEFAULT_SIZE_GUARD) -> VerificationReport:
    """Check every identity on ``p`` exactly; failures are recorded, never raised.

    Brute-force oracle comparisons are included only when ``p.n <= size_guard``.
    """
    n = p.n
    Z = zeta_matrix(p)
    Zbar = complement_matrix(p)
    N = strict_matrix(p)
    M = mobius_matrix(p)
    census = chain_counts(p)
    chi = census.euler_characteristic
    det_bar = linalg.determinant(Zbar)
    cp_bar = linalg.charpoly(Zbar)

    rep = VerificationReport(name or f"poset[{n}]", n, chi, chi - 1, det_bar)
    rep.add("det(Z) = 1", linalg.determinant(Z), 1)
    rep.add("charpoly(Z) = (1-λ)^n", linalg.charpoly(Z), one_minus_lambda_power(n))
    rep.add("tr(Z̄) = 0", linalg.trace(Zbar), 0)
    rep.add("Z̄ = J - Z", Zbar, linalg.all_ones(n) - Z)
    rep.add("N^n = 0", linalg.is_nilpotent(N), True)
    rep.add("Z·Möbius = I", Z @ M, linalg.identity(n))
    ext = relabel(p, linear_extension(p))
    rep.add("Z under linear extension is upper unitriangular", linalg.is_upper_unitriangular(zeta_matrix(ext)), True)
    rep.add("χ (chains) = χ (Möbius sum)", chi, M.total())
    if n <= size_guard:
        oc = enumerate_chains(p, size_guard)
        rep.add("c_k (matrix powers) = c_k (chain enumeration)", census.counts, oc.counts)
        rep.add("χ (chains) = χ (chain enumeration)", chi, oc.euler_characteristic)
    rep.add("charpoly formula = charpoly(Z̄)", charpoly_formula(p, census), cp_bar)
    rep.add("det(Z̄) = (-1)^(n+1)·χ̃", det_bar, det_complement_via_theorem(p))
    rep.add("det(Z̄) = charpoly(Z̄)(0)", det_bar, cp_bar(0))
    spectral_checks(p, rep, cp_bar)
    return rep
