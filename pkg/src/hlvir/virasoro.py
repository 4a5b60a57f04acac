"""Virasoro-type operators on the t-ring, the closed-form right-hand sides of
their action on the Q polynomials, and exact verification drivers.

Families (all coefficients rational, applied over any coefficient field):

* Lmn:   sum_{k>=1, n!|k} k t_k d_{k+nm} + (1/2) sum_{k=1, n!|k}^{mn-1} d_k d_{mn-k}
         - (1/2) sum_{k=1, n!|k}^{-mn-1} k(mn+k) t_k t_{-mn-k} + delta_{m,0} (n^2-1)/24,
         with t_k = 0 and d_k = 0 for k <= 0.
* Lhat:  sum_{k>=1} k t_k d_{k+mn}  (no divisibility filter).
* Ltilde: Lhat + (1/2) sum_{k=1}^{mn-1} d_k d_{mn-k}.
* Wmn:   sum_{k=1}^{mn-1} d_k d_{mn-k}  (m >= 1).
* Vmn:   sum_{k=1, n!|k}^{mn-1} p_k p_{mn-k}  (m >= 1, multiplication only).
* LS/WS: the n = 1 forms acting on Schur polynomials (no filter, no constant).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .exactnum import QQ, RHO_ZERO, RhoSpec
from .structure import c_coeff, partitions
from .tring import (FamilyRule, LinOperator, OpTerm, TPoly, apply,
                    commutator_apply, mono_from_exponents)
from .vertex import Label, QCombination, apply_B, hl_q, perp_t

FAMILIES = ("Lmn", "Lhat", "Ltilde", "Wmn", "Vmn", "LS", "WS")


@dataclass(frozen=True)
class VirasoroSpec:
    """Which operator to build: family, mode index m, and (except for the
    Schur families LS/WS) the root-of-unity order n >= 2."""

    family: str
    m: int
    n: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown operator family {self.family!r}")
        if self.family in ("LS", "WS"):
            if self.n is not None:
                raise ValueError(f"{self.family} does not take an order n")
        else:
            if self.n is None or self.n < 2:
                raise ValueError(f"{self.family} needs an order n >= 2")
        if self.family in ("Wmn", "Vmn") and self.m < 1:
            raise ValueError(f"{self.family} is defined for m >= 1 only")


def _grading_family(n: int, m: int, skip: Optional[int]) -> FamilyRule:
    """sum_k k t_k d_{k+nm}, truncated to derivative indices >= 1."""
    nm = n * m
    return FamilyRule(factors=(("mul", 0), ("der", nm)), k_power=1,
                      k_min=max(1, 1 - nm), skip_multiples_of=skip)


def _second_order_terms(n: int, m: int, skip: Optional[int]) -> list[OpTerm]:
    nm = n * m
    out = []
    if m > 0:
        for k in range(1, nm):
            if skip is not None and k % skip == 0:
                continue
            out.append(OpTerm(Fraction(1, 2), (("der", k), ("der", nm - k))))
    elif m < 0:
        for k in range(1, -nm):
            if skip is not None and k % skip == 0:
                continue
            out.append(OpTerm(Fraction(-k * (nm + k), 2),
                              (("mul", k), ("mul", -nm - k))))
    return out


@lru_cache(maxsize=None)
def build_operator(spec: VirasoroSpec) -> LinOperator:
    family, m, n = spec.family, spec.m, spec.n
    if family == "Lmn":
        finite = _second_order_terms(n, m, n)
        if m == 0:
            finite.append(OpTerm(Fraction(n * n - 1, 24), ()))
        return LinOperator(tuple(finite), (_grading_family(n, m, n),))
    if family == "LS":
        finite = _second_order_terms(1, m, None)
        return LinOperator(tuple(finite), (_grading_family(1, m, None),))
    if family == "Lhat":
        return LinOperator((), (_grading_family(n, m, None),))
    if family == "Ltilde":
        finite = []
        if m > 0:
            finite = [OpTerm(Fraction(1, 2), (("der", k), ("der", n * m - k)))
                      for k in range(1, n * m)]
        return LinOperator(tuple(finite), (_grading_family(n, m, None),))
    if family == "Wmn":
        return LinOperator(tuple(
            OpTerm(Fraction(1), (("der", k), ("der", n * m - k)))
            for k in range(1, n * m)), ())
    if family == "Vmn":
        return LinOperator(tuple(
            OpTerm(Fraction(k * (n * m - k)), (("mul", k), ("mul", n * m - k)))
            for k in range(1, n * m) if k % n != 0), ())
    if family == "WS":
        if m >= 0:
            return LinOperator(tuple(
                OpTerm(Fraction(1), (("der", k), ("der", m - k)))
                for k in range(1, m)), ())
        return LinOperator(tuple(
            OpTerm(Fraction(k * (-m - k)), (("mul", k), ("mul", -m - k)))
            for k in range(1, -m)), ())
    raise AssertionError(family)


# ---------------------------------------------------------------------------
# right-hand sides of the action formulas


def _shift(lam: Label, i: int, a: int) -> Label:
    return lam[:i] + (lam[i] + a,) + lam[i + 1:]


def rhs_T1_1(n: int, m: int, lam) -> QCombination:
    """L_m action on Q_lam at a primitive n-th root of unity, m >= 0."""
    if n < 2 or m < 0:
        raise ValueError("needs n >= 2 and m >= 0")
    rho = RhoSpec.root(n)
    field = rho.field
    lam = tuple(int(x) for x in lam)
    l = len(lam)
    nm = n * m
    items = []
    for i in range(l):
        items.append((_shift(lam, i, -nm), field.from_fraction(lam[i])))
    for k in range(1, nm):
        coeff = field.one - rho.rho_pow(-k)
        if not coeff:
            continue
        for i in range(1, l):
            for j in range(i):
                items.append((_shift(_shift(lam, i, -k), j, -(nm - k)), coeff))
    if m == 0:
        items.append((lam, field.from_fraction(Fraction(n * n - 1, 24))))
    return QCombination.from_terms(field, items)


def rhs_T1_2(n: int, m: int, lam) -> QCombination:
    """L_{-m} action on Q_lam at a primitive n-th root of unity, m >= 1."""
    if n < 2 or m < 1:
        raise ValueError("needs n >= 2 and m >= 1")
    rho = RhoSpec.root(n)
    field = rho.field
    lam = tuple(int(x) for x in lam)
    l = len(lam)
    nm = n * m
    half = field.from_fraction(Fraction(1, 2))
    items = []
    for i in range(l):
        items.append((_shift(lam, i, nm),
                      field.from_fraction(lam[i] + Fraction(m * (n - 1), 2))))
    for k in range(1, nm):
        if k % n == 0:
            continue
        xik = rho.rho_pow(k)
        for i in range(1, l):
            for j in range(i):
                items.append((_shift(_shift(lam, i, k), j, nm - k), xik))
        for mu in partitions(k):
            cmu = c_coeff(mu, rho)
            for i in range(l):
                items.append((_shift(lam, i, nm - k) + mu, xik * cmu))
            for j in range(len(mu)):
                items.append((lam + _shift(mu, j, nm - k), half * cmu))
            for nu in partitions(nm - k):
                items.append((lam + mu + nu, half * cmu * c_coeff(nu, rho)))
    return QCombination.from_terms(field, items)


def rhs_T3_3(n: int, m: int, lam) -> QCombination:
    """Lhat_{-m} action on Q_lam at a primitive n-th root of unity, m >= 1.

    The k-sums of the formula run over 1..mn with weight xi^k - 1, which
    vanishes exactly when n | k; those terms are skipped outright.
    """
    if n < 2 or m < 1:
        raise ValueError("needs n >= 2 and m >= 1")
    rho = RhoSpec.root(n)
    field = rho.field
    lam = tuple(int(x) for x in lam)
    l = len(lam)
    nm = n * m
    items = []
    for i in range(l):
        items.append((_shift(lam, i, nm), field.from_fraction(lam[i])))
    for k in range(1, nm + 1):
        if k % n == 0:
            continue
        coeff = rho.rho_pow(k) - field.one
        for i in range(1, l):
            for j in range(i):
                items.append((_shift(_shift(lam, i, k), j, nm - k), coeff))
        for mu in partitions(k):
            cmu = c_coeff(mu, rho)
            for i in range(l):
                items.append((_shift(lam, i, nm - k) + mu, coeff * cmu))
    return QCombination.from_terms(field, items)


def rhs_TA3(m: int, lam) -> QCombination:
    """L^S_m action on s_lam (rho = 0), m >= 1."""
    if m < 1:
        raise ValueError("needs m >= 1")
    lam = tuple(int(x) for x in lam)
    items = []
    for i in range(1, len(lam) + 1):
        coeff = lam[i - 1] - Fraction(2 * i + m - 1, 2)
        items.append((_shift(lam, i - 1, -m), coeff))
    return QCombination.from_terms(QQ, items)


def rhs_TA4(m: int, lam) -> QCombination:
    """L^S_{-m} action on s_lam (rho = 0), m >= 1."""
    if m < 1:
        raise ValueError("needs m >= 1")
    lam = tuple(int(x) for x in lam)
    l = len(lam)
    items = []
    for i in range(1, l + 1):
        coeff = lam[i - 1] - i + Fraction(m + 1, 2)
        items.append((_shift(lam, i - 1, m), coeff))
    for k in range(1, m + 1):
        coeff = -Fraction((-1) ** (m - k)) * (l - k + Fraction(m + 1, 2))
        items.append((lam + (k,) + (1,) * (m - k), coeff))
    return QCombination.from_terms(QQ, items)


def rhs_Vm(n: int, m: int, lam) -> QCombination:
    """V_m action on Q_lam at a primitive n-th root of unity, m >= 1."""
    if n < 2 or m < 1:
        raise ValueError("needs n >= 2 and m >= 1")
    rho = RhoSpec.root(n)
    field = rho.field
    lam = tuple(int(x) for x in lam)
    l = len(lam)
    nm = n * m
    two = field.from_fraction(2)
    items = []
    for i in range(l):
        items.append((_shift(lam, i, nm), field.from_fraction(m * (n - 1))))
    for k in range(1, nm):
        if k % n == 0:
            continue
        for i in range(1, l):
            for j in range(i):
                items.append((_shift(_shift(lam, i, k), j, nm - k), two))
        for mu in partitions(k):
            cmu = c_coeff(mu, rho)
            for i in range(l):
                items.append((_shift(lam, i, nm - k) + mu, two * cmu))
            for j in range(len(mu)):
                items.append((lam + _shift(mu, j, nm - k), cmu))
            for nu in partitions(nm - k):
                items.append((lam + mu + nu, cmu * c_coeff(nu, rho)))
    return QCombination.from_terms(field, items)


# ---------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class TheoremCase:
    """One verifiable instance: a theorem id plus its parameters.

    Single-instance ids compare the two sides on one lam; operator-identity
    ids sweep all monomials up to the degree bound.
    """

    id: str
    n: Optional[int] = None
    m: Optional[int] = None
    i: Optional[int] = None
    j: Optional[int] = None
    r: Optional[int] = None
    lam: Optional[tuple] = None
    degree: Optional[int] = None
    rho: Optional[RhoSpec] = None


@dataclass(frozen=True)
class Verdict:
    case: TheoremCase
    equal: bool
    lhs: TPoly
    rhs: TPoly
    diff: TPoly
    detail: str = ""

    def to_json(self) -> dict:
        case: dict = {"id": self.case.id}
        for name in ("n", "m", "i", "j", "r", "degree"):
            value = getattr(self.case, name)
            if value is not None:
                case[name] = value
        if self.case.lam is not None:
            case["lambda"] = list(self.case.lam)
        if self.case.rho is not None:
            case["rho"] = self.case.rho.to_text()
        out = {"case": case, "equal": self.equal,
               "lhs": self.lhs.to_json(), "rhs": self.rhs.to_json(),
               "diff": self.diff.to_json()}
        if self.detail:
            out["detail"] = self.detail
        return out


def monomial_basis(field, max_degree: int) -> list[TPoly]:
    """All monomials t_mu (coefficient 1) of degree <= max_degree."""
    out = []
    for d in range(max_degree + 1):
        for mu in partitions(d):
            counts: dict[int, int] = {}
            for x in mu:
                counts[x] = counts.get(x, 0) + 1
            mono = mono_from_exponents(counts.items())
            out.append(TPoly(field, {mono: field.one}))
    return out


def _two_sided(case: TheoremCase, lhs: TPoly, rhs: TPoly, detail: str = "") -> Verdict:
    return Verdict(case, lhs == rhs, lhs, rhs, lhs - rhs, detail)


def _sweep(case: TheoremCase, pairs) -> Verdict:
    """Compare lhs/rhs over a stream of (f, lhs, rhs); report first failure."""
    field = None
    for f, lhs, rhs in pairs:
        field = f.field
        if lhs != rhs:
            return Verdict(case, False, lhs, rhs, lhs - rhs,
                           detail=f"first failure on {f.to_text()}")
    zero = TPoly.zero(field) if field is not None else TPoly.zero(QQ)
    return Verdict(case, True, zero, zero, zero)


def _b(m: int, f: TPoly, rho: RhoSpec) -> TPoly:
    return apply_B(m, f, rho)


def _p_mul(r: int, f: TPoly) -> TPoly:
    return f.mul_var(r, Fraction(r))


def verify_case(case: TheoremCase) -> Verdict:
    handler = _HANDLERS.get(case.id)
    if handler is None:
        raise ValueError(f"unknown theorem case id {case.id!r}")
    return handler(case)


def _need(case: TheoremCase, *names):
    out = []
    for name in names:
        value = getattr(case, name)
        if value is None:
            raise ValueError(f"case {case.id} needs parameter {name!r}")
        out.append(value)
    return out


def _verify_t1_1(case: TheoremCase) -> Verdict:
    n, m, lam = _need(case, "n", "m", "lam")
    rho = RhoSpec.root(n)
    lhs = apply(build_operator(VirasoroSpec("Lmn", m, n)), hl_q(lam, rho))
    rhs = rhs_T1_1(n, m, lam).evaluate(rho)
    return _two_sided(case, lhs, rhs)


def _verify_t1_2(case: TheoremCase) -> Verdict:
    n, m, lam = _need(case, "n", "m", "lam")
    rho = RhoSpec.root(n)
    lhs = apply(build_operator(VirasoroSpec("Lmn", -m, n)), hl_q(lam, rho))
    rhs = rhs_T1_2(n, m, lam).evaluate(rho)
    return _two_sided(case, lhs, rhs)


def _verify_t3_3(case: TheoremCase) -> Verdict:
    n, m, lam = _need(case, "n", "m", "lam")
    rho = RhoSpec.root(n)
    lhs = apply(build_operator(VirasoroSpec("Lhat", -m, n)), hl_q(lam, rho))
    rhs = rhs_T3_3(n, m, lam).evaluate(rho)
    return _two_sided(case, lhs, rhs)


def _verify_ta3(case: TheoremCase) -> Verdict:
    m, lam = _need(case, "m", "lam")
    lhs = apply(build_operator(VirasoroSpec("LS", m)), hl_q(lam, RHO_ZERO))
    rhs = rhs_TA3(m, lam).evaluate(RHO_ZERO)
    return _two_sided(case, lhs, rhs)


def _verify_ta4(case: TheoremCase) -> Verdict:
    m, lam = _need(case, "m", "lam")
    lhs = apply(build_operator(VirasoroSpec("LS", -m)), hl_q(lam, RHO_ZERO))
    rhs = rhs_TA4(m, lam).evaluate(RHO_ZERO)
    return _two_sided(case, lhs, rhs)


def _verify_base_a(case: TheoremCase) -> Verdict:
    (m,) = _need(case, "m")
    if m < 1:
        raise ValueError("BaseA needs m >= 1")
    lhs = apply(build_operator(VirasoroSpec("LS", -m)), TPoly.one(QQ))
    rhs = QCombination.from_terms(QQ, (
        ((k,) + (1,) * (m - k),
         Fraction((-1) ** (m - k + 1)) * (Fraction(m + 1, 2) - k))
        for k in range(1, m + 1))).evaluate(RHO_ZERO)
    return _two_sided(case, lhs, rhs)


def _verify_remark_a(case: TheoremCase) -> Verdict:
    (m,) = _need(case, "m")
    if m < 1:
        raise ValueError("RemarkA needs m >= 1")
    lhs = TPoly.zero(QQ)
    for k in range(1, m):
        lhs = lhs + TPoly.one(QQ).mul_var(k).mul_var(m - k, Fraction(k * (m - k)))
    rhs = QCombination.from_terms(QQ, (
        ((k,) + (1,) * (m - k), Fraction((-1) ** (m - k) * (2 * k - m - 1)))
        for k in range(1, m + 1))).evaluate(RHO_ZERO)
    return _two_sided(case, lhs, rhs)


def _verify_mult(case: TheoremCase) -> Verdict:
    from .structure import multiply_p
    r, lam, rho = _need(case, "r", "lam", "rho")
    lhs = _p_mul(r, hl_q(lam, rho))
    rhs = multiply_p(r, QCombination.single(rho.field, lam), rho).evaluate(rho)
    return _two_sided(case, lhs, rhs)


def _verify_deriv(case: TheoremCase) -> Verdict:
    r, lam, rho = _need(case, "r", "lam", "rho")
    lam = tuple(lam)
    lhs = hl_q(lam, rho).diff(r)
    rhs = TPoly.zero(rho.field)
    for i in range(len(lam)):
        rhs = rhs + hl_q(_shift(lam, i, -r), rho)
    rhs = rhs.scale(rho.one_minus_rho_pow(r))
    return _two_sided(case, lhs, rhs)


def _verify_bracket(case: TheoremCase) -> Verdict:
    n, i, j, degree = _need(case, "n", "i", "j", "degree")
    rho = RhoSpec.root(n)
    field = rho.field
    op_i = build_operator(VirasoroSpec("Lmn", i, n))
    op_j = build_operator(VirasoroSpec("Lmn", j, n))
    op_ij = build_operator(VirasoroSpec("Lmn", i + j, n))
    central = Fraction(n * n * (n - 1) * (i ** 3 - i), 12) if i + j == 0 else Fraction(0)

    def pairs():
        for f in monomial_basis(field, degree):
            lhs = commutator_apply(op_i, op_j, f)
            rhs = apply(op_ij, f).scale(Fraction(n * (i - j))) + f.scale(central)
            yield f, lhs, rhs

    return _sweep(case, pairs())


def _verify_exchange(case: TheoremCase) -> Verdict:
    i, j, rho, degree = _need(case, "i", "j", "rho", "degree")
    rho1 = rho.rho_pow(1)

    def pairs():
        for f in monomial_basis(rho.field, degree):
            lhs = _b(i - 1, _b(j, f, rho), rho) - _b(i, _b(j - 1, f, rho), rho).scale(rho1)
            rhs = _b(j, _b(i - 1, f, rho), rho).scale(rho1) - _b(j - 1, _b(i, f, rho), rho)
            yield f, lhs, rhs

    return _sweep(case, pairs())


def _verify_pr_b(case: TheoremCase) -> Verdict:
    r, m, rho, degree = _need(case, "r", "m", "rho", "degree")
    if r < 1:
        raise ValueError("PrB needs r >= 1")

    def pairs():
        for f in monomial_basis(rho.field, degree):
            lhs = _p_mul(r, _b(m, f, rho))
            rhs = _b(m, _p_mul(r, f), rho) + _b(m + r, f, rho)
            yield f, lhs, rhs

    return _sweep(case, pairs())


def _verify_tr_perp_b(case: TheoremCase) -> Verdict:
    r, m, rho, degree = _need(case, "r", "m", "rho", "degree")
    if r < 1:
        raise ValueError("TrPerpB needs r >= 1")

    def pairs():
        for f in monomial_basis(rho.field, degree):
            lhs = perp_t(r, _b(m, f, rho), rho)
            rhs = _b(m - r, f, rho).scale(Fraction(1, r)) + _b(m, perp_t(r, f, rho), rho)
            yield f, lhs, rhs

    return _sweep(case, pairs())


def _commutator_with_b(op: LinOperator, r: int, f: TPoly, rho: RhoSpec) -> TPoly:
    return apply(op, _b(r, f, rho)) - _b(r, apply(op, f), rho)


def _verify_prop33(case: TheoremCase) -> Verdict:
    n, m, r, degree = _need(case, "n", "m", "r", "degree")
    if m == 0:
        raise ValueError("Prop33 needs m != 0")
    rho = RhoSpec.root(n)
    field = rho.field
    op = build_operator(VirasoroSpec("Lhat", m, n))
    nm = n * m

    def pairs():
        for f in monomial_basis(field, degree):
            lhs = _commutator_with_b(op, r, f, rho)
            if m >= 1:
                rhs = _b(r - nm, f, rho).scale(Fraction(r - nm))
                for k in range(1, nm + 1):
                    df = f.diff(k)
                    if df:
                        rhs = rhs - _b(r - nm + k, df, rho)
            else:
                rhs = _b(r - nm, f, rho).scale(Fraction(r))
                for k in range(1, -nm + 1):
                    coeff = rho.one_minus_rho_pow(k)
                    if not coeff:
                        continue
                    rhs = rhs - _b(r - nm - k, _p_mul(k, f), rho).scale(coeff)
            yield f, lhs, rhs

    return _sweep(case, pairs())


def _verify_cor_ltilde(case: TheoremCase) -> Verdict:
    n, m, r, degree = _need(case, "n", "m", "r", "degree")
    if m < 1:
        raise ValueError("CorLtilde needs m >= 1")
    rho = RhoSpec.root(n)
    op = build_operator(VirasoroSpec("Ltilde", m, n))
    nm = n * m

    def pairs():
        for f in monomial_basis(rho.field, degree):
            lhs = _commutator_with_b(op, r, f, rho)
            rhs = _b(r - nm, f, rho).scale(Fraction(r))
            for k in range(1, nm + 1):
                df = f.diff(k)
                if df:
                    rhs = rhs - _b(r - nm + k, df, rho).scale(rho.rho_pow(-k))
            yield f, lhs, rhs

    return _sweep(case, pairs())


def _verify_lemma32(case: TheoremCase) -> Verdict:
    r, rho, degree = _need(case, "r", "rho", "degree")

    def pairs():
        for f in monomial_basis(rho.field, degree):
            a = max(f.degree(), 0)
            big_n = max(a, a + r) + 1
            lhs = TPoly.zero(rho.field)
            coeff_sum = Fraction(0)
            rhs = TPoly.zero(rho.field)
            for k in range(1, big_n + 1):
                omr = rho.one_minus_rho_pow(k)
                if omr:
                    lhs = lhs + _b(r - k, _p_mul(k, f), rho).scale(omr)
                df = f.diff(k)
                if df:
                    rhs = rhs - _b(r + k, df, rho)
            scalar = rho.field.from_fraction(Fraction(r))
            for k in range(1, big_n + 1):
                scalar = scalar - rho.one_minus_rho_pow(k)
            rhs = rhs + _b(r, f, rho).scale(scalar)
            yield f, lhs, rhs

    return _sweep(case, pairs())


def _verify_lemma_a1(case: TheoremCase) -> Verdict:
    m, r, degree = _need(case, "m", "r", "degree")
    if m == 0:
        raise ValueError("LemmaA1 needs m != 0")
    rho = RHO_ZERO
    ls_hat = LinOperator((), (FamilyRule(factors=(("mul", 0), ("der", m)),
                                         k_power=1, k_min=max(1, 1 - m)),))

    def pairs():
        for f in monomial_basis(QQ, degree):
            lhs = _commutator_with_b(ls_hat, r, f, rho)
            if m >= 1:
                rhs = _b(r - m, f, rho).scale(Fraction(r - m))
                for k in range(1, m + 1):
                    df = f.diff(k)
                    if df:
                        rhs = rhs - _b(r - m + k, df, rho)
            else:
                rhs = _b(r - m, f, rho).scale(Fraction(r))
                for k in range(1, -m + 1):
                    rhs = rhs - _b(r - m - k, _p_mul(k, f), rho)
            yield f, lhs, rhs

    return _sweep(case, pairs())


def _verify_cor_a2(case: TheoremCase) -> Verdict:
    m, r, degree = _need(case, "m", "r", "degree")
    if m == 0:
        raise ValueError("CorA2 needs m != 0")
    rho = RHO_ZERO
    op = build_operator(VirasoroSpec("LS", m))

    def pairs():
        for f in monomial_basis(QQ, degree):
            lhs = _commutator_with_b(op, r, f, rho)
            rhs = _b(r - m, f, rho).scale(r - Fraction(m + 1, 2))
            if m >= 1:
                df = f.diff(m)
                if df:
                    rhs = rhs - _b(r, df, rho)
            else:
                rhs = rhs - _b(r, _p_mul(-m, f), rho)
            yield f, lhs, rhs

    return _sweep(case, pairs())


def _verify_vm(case: TheoremCase) -> Verdict:
    n, m, lam = _need(case, "n", "m", "lam")
    rho = RhoSpec.root(n)
    lhs = apply(build_operator(VirasoroSpec("Vmn", m, n)), hl_q(lam, rho))
    rhs = rhs_Vm(n, m, lam).evaluate(rho)
    return _two_sided(case, lhs, rhs)


_HANDLERS = {
    "T1.1": _verify_t1_1,
    "T1.2": _verify_t1_2,
    "T3.3": _verify_t3_3,
    "TA.3": _verify_ta3,
    "TA.4": _verify_ta4,
    "BaseA": _verify_base_a,
    "RemarkA": _verify_remark_a,
    "MultFormula": _verify_mult,
    "DerivFormula": _verify_deriv,
    "Bracket": _verify_bracket,
    "Exchange": _verify_exchange,
    "PrB": _verify_pr_b,
    "TrPerpB": _verify_tr_perp_b,
    "Prop33": _verify_prop33,
    "CorLtilde": _verify_cor_ltilde,
    "Lemma32": _verify_lemma32,
    "LemmaA1": _verify_lemma_a1,
    "CorA2": _verify_cor_a2,
    "VmQ": _verify_vm,
}

CASE_IDS = tuple(_HANDLERS)
