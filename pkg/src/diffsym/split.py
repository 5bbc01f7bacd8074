"""Differential splitting constructions and their verification.

The pipeline: Phi maps A tensor k(xi) onto M_m(k(xi)); a derivation d on A
transports to d_P with P = Phi(theta - w); explicit gauge matrices F with
delta^c(F) = PF are then built over a Kummer tower (standard derivation), a
monomial differential field (inner derivations over a zero base derivation),
or a fully generic polynomial field.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from .deriv import Derivation, decompose, inner_derivation, standard_derivation
from .matdiff import DiffMatrix, GaugeVerdict, apply_dP, verify_gauge
from .scalars import (
    CycloField,
    KummerField,
    MonomialDiffField,
    PolyDiffField,
    RatFuncField,
    is_prime,
    mth_power_up_to_constant,
)
from .linalg import kernel_basis
from .symalg import SymbolAlgebra, SymbolElem, minimal_polynomial

logger = logging.getLogger(__name__)


class PhiMap:
    """The splitting isomorphism A tensor k(xi) -> M_m(k(xi)).

    u maps to the diagonal matrix diag(xi, w^{m-1} xi, ..., w xi), v maps to
    the companion-style matrix with beta in the top-right corner and an
    identity block below the diagonal.
    """

    def __init__(self, algebra: SymbolAlgebra, xi_field: KummerField):
        m = algebra.m
        if xi_field.m != m:
            raise ValueError("extension degree must match the algebra degree")
        if not xi_field.coerce(algebra.alpha) == xi_field.coerce(xi_field.alpha):
            raise ValueError("xi^m must equal alpha")
        self.algebra = algebra
        self.ext_field = xi_field
        self.ext_algebra = algebra.extend(xi_field)
        xi = xi_field.gen()
        w = xi_field.cyclo.omega()
        rows = [[xi_field.zero()] * m for _ in range(m)]
        for r in range(m):
            rows[r][r] = xi * xi_field.coerce(w ** ((m - r) % m))
        self.a_mat = DiffMatrix(xi_field, rows)
        rows = [[xi_field.zero()] * m for _ in range(m)]
        rows[0][m - 1] = xi_field.coerce(algebra.beta)
        for r in range(1, m):
            rows[r][r - 1] = xi_field.one()
        self.b_mat = DiffMatrix(xi_field, rows)
        self._a_pows = [DiffMatrix.identity(xi_field, m)]
        self._b_pows = [DiffMatrix.identity(xi_field, m)]
        for _ in range(1, m):
            self._a_pows.append(self._a_pows[-1] * self.a_mat)
            self._b_pows.append(self._b_pows[-1] * self.b_mat)
        self._validate_relations()

    def _validate_relations(self):
        m = self.algebra.m
        e = self.ext_field
        alpha_i = DiffMatrix.identity(e, m).scale(e.coerce(self.algebra.alpha))
        beta_i = DiffMatrix.identity(e, m).scale(e.coerce(self.algebra.beta))
        if not self._a_pows[m - 1] * self.a_mat == alpha_i:
            raise AssertionError("A^m != alpha I")
        if not self._b_pows[m - 1] * self.b_mat == beta_i:
            raise AssertionError("B^m != beta I")
        omega = e.coerce(e.cyclo.omega())
        if not self.b_mat * self.a_mat == (self.a_mat * self.b_mat).scale(omega):
            raise AssertionError("BA != omega AB")

    def apply(self, x: SymbolElem) -> DiffMatrix:
        x = self.ext_algebra.coerce_elem(x)
        m = self.algebra.m
        out = DiffMatrix.zero(self.ext_field, m)
        for i in range(m):
            for j in range(m):
                c = x.grid[i][j]
                if c.is_zero():
                    continue
                out = out + (self._a_pows[i] * self._b_pows[j]).scale(c)
        return out


def t_r_value(m: int, r: int) -> Fraction:
    """t_r as the cyclotomic sum, asserted equal to (m-1)/2 - r."""
    cyclo = CycloField(m)
    w = cyclo.omega()
    total = cyclo.zero()
    for i in range(1, m):
        total = total + (w ** (r * i) * (cyclo.one() - w**i)).inv()
    closed = Fraction(m - 1, 2) - r
    if not total == cyclo.from_rational(closed):
        raise AssertionError(f"t_r sum disagrees with the closed form at m={m}, r={r}")
    return closed


def compute_w(phi: PhiMap) -> SymbolElem:
    """w with d_Phi = d_s + inner(w) on A tensor k(xi)."""
    alg = phi.ext_algebra
    m = alg.m
    e = phi.ext_field
    dbeta = phi.algebra.beta.derive()
    grid = [[e.zero()] * m for _ in range(m)]
    if not dbeta.is_zero():
        xi = e.gen()
        w = e.cyclo.omega()
        denom_base = e.coerce(phi.algebra.alpha) * e.coerce(phi.algebra.beta) * m
        for i in range(1, m):
            grid[i][0] = e.coerce(dbeta) * xi ** (m - i) / (denom_base * (e.coerce(w**i) - e.one()))
    return SymbolElem(alg, grid)


def compute_Ps(phi: PhiMap) -> DiffMatrix:
    """P for the standard derivation: (delta(beta)/(m beta)) diag(t_0..t_{m-1})."""
    m = phi.algebra.m
    e = phi.ext_field
    rate = e.coerce(phi.algebra.beta.derive()) / (e.coerce(phi.algebra.beta) * m)
    return DiffMatrix.diagonal(e, [rate * Fraction(t_r_value(m, r)) for r in range(m)])


def closed_form_P(theta: SymbolElem, phi: PhiMap) -> DiffMatrix:
    """Entry-wise closed form of Phi(theta - w) from the theta coefficients.

    p_rs collects theta_{i,(r-s) mod m} * xi^i * w^{-ri}, with a beta factor
    above the diagonal and the w-correction on the diagonal; an independent
    path around the matrix products in PhiMap.apply.
    """
    m = phi.algebra.m
    e = phi.ext_field
    th = theta.grid
    xi = e.gen()
    w = e.cyclo.omega()
    beta = e.coerce(phi.algebra.beta)
    dbeta = e.coerce(phi.algebra.beta.derive())
    rows = []
    for r in range(m):
        row = []
        for s in range(m):
            j = (r - s) % m
            acc = e.zero()
            for i in range(m):
                if th[i][j].is_zero():
                    continue
                acc = acc + e.coerce(th[i][j]) * xi**i * e.coerce(w ** (((m - r) * i) % m))
            if r < s:
                acc = acc * beta
            if r == s and not dbeta.is_zero():
                for i in range(1, m):
                    acc = acc - e.coerce(w ** (((m - r) * i) % m)) * dbeta / (
                        (e.coerce(w**i) - e.one()) * beta * m
                    )
            row.append(acc)
        rows.append(row)
    return DiffMatrix(e, rows)


def compute_P_with_diagnostics(d: Derivation, phi: PhiMap):
    """P = Phi(theta - w), plus any disagreements with the entry-wise form."""
    theta = decompose(d)
    theta_e = phi.ext_algebra.coerce_elem(theta)
    p = phi.apply(theta_e - compute_w(phi))
    diagnostics = []
    literal = closed_form_P(theta, phi)
    for r in range(phi.algebra.m):
        for s in range(phi.algebra.m):
            if not (p.rows[r][s] - literal.rows[r][s]).is_zero():
                diagnostics.append(f"closed-form table disagrees at ({r},{s})")
    return p, diagnostics


def compute_P(d: Derivation, phi: PhiMap) -> DiffMatrix:
    p, diagnostics = compute_P_with_diagnostics(d, phi)
    for note in diagnostics:
        logger.info("compute_P cross-check: %s", note)
    return p


@dataclass
class IsoVerdict:
    ok: bool
    failing_basis: tuple | None

    def to_json(self):
        return {"ok": self.ok, "failing_basis": list(self.failing_basis) if self.failing_basis else None}


def verify_diff_isomorphism(phi: PhiMap, d: Derivation, p: DiffMatrix) -> IsoVerdict:
    """Check Phi(d*(x)) = d_P(Phi(x)) on the basis and on a xi scalar."""
    d_ext = d.extend(phi.ext_field)
    alg = phi.ext_algebra
    for i in range(alg.m):
        for j in range(alg.m):
            x = alg.monomial(i, j, phi.ext_field.one())
            lhs = phi.apply(d_ext.apply(x))
            rhs = apply_dP(p, phi.apply(x))
            if not lhs == rhs:
                return IsoVerdict(False, (i, j))
    x = alg.scalar(phi.ext_field.gen())
    if not phi.apply(d_ext.apply(x)) == apply_dP(p, phi.apply(x)):
        return IsoVerdict(False, ("xi",))
    return IsoVerdict(True, None)


@dataclass
class SplitReport:
    extension: dict
    p: DiffMatrix
    f: DiffMatrix
    gauge: GaugeVerdict
    isomorphism: IsoVerdict | None
    degree: int | None
    transcendence_degree: int
    diagnostics: list

    @property
    def passed(self) -> bool:
        return self.gauge.ok and (self.isomorphism is None or self.isomorphism.ok)

    def to_json(self):
        return {
            "extension": self.extension,
            "P": self.p.to_json(),
            "F": self.f.to_json(),
            "verdicts": {
                "gauge": self.gauge.to_json(),
                "isomorphism": self.isomorphism.to_json() if self.isomorphism else None,
            },
            "degree": self.degree,
            "transcendence_degree": self.transcendence_degree,
            "diagnostics": list(self.diagnostics),
        }


def _tower_entry(field: KummerField) -> dict:
    from .parser import scalar_to_str

    return {"gen": field.gen_name, "power": field.m, "radicand": scalar_to_str(field.alpha)}


def split_standard(algebra: SymbolAlgebra) -> SplitReport:
    """Finite splitting field for d_s: degree m^2 (m odd) or 2m^2 (m even)."""
    k = algebra.field
    if not isinstance(k, RatFuncField):
        raise ValueError("standard splitting is built over the rational function field")
    m = algebra.m
    xi_field = KummerField(k, algebra.alpha, m, "xi")
    phi = PhiMap(algebra, xi_field)
    ps = compute_Ps(phi)
    iso = verify_diff_isomorphism(phi, standard_derivation(algebra), ps)
    dbeta = algebra.beta.derive()
    tower = [_tower_entry(xi_field)]
    rules = [f"delta(xi) = delta(alpha)/({m} alpha) xi"]
    if dbeta.is_zero():
        e = xi_field
        f_mat = DiffMatrix.identity(e, m)
        degree = m
    elif m % 2 == 1:
        e = KummerField(xi_field, algebra.beta, m, "eta")
        eta = e.gen()
        f_mat = DiffMatrix.diagonal(e, [eta ** int(t_r_value(m, r)) for r in range(m)])
        tower.append(_tower_entry(e))
        rules.append(f"delta(eta) = delta(beta)/({m} beta) eta")
        degree = m * m
    else:
        e = KummerField(xi_field, algebra.beta, 2 * m, "zeta")
        zeta = e.gen()
        f_mat = DiffMatrix.diagonal(e, [zeta ** (m - 1 - 2 * r) for r in range(m)])
        tower.append(_tower_entry(e))
        rules.append(f"delta(zeta) = delta(beta)/({2 * m} beta) zeta")
        degree = 2 * m * m
    gauge = verify_gauge(ps.coerce_to(e), f_mat)
    return SplitReport(
        extension={"tower": tower, "derivation_rules": rules},
        p=ps,
        f=f_mat,
        gauge=gauge,
        isomorphism=iso,
        degree=degree,
        transcendence_degree=0,
        diagnostics=[],
    )


def find_twist_partner(rho1: SymbolElem):
    """Search for x with x rho1 = omega rho1 x and x^m scalar; None if absent."""
    alg = rho1.algebra
    omega = alg.field.coerce(alg.omega)
    cols = []
    for b in alg.basis():
        cols.append((b * rho1 - (rho1 * b).scale(omega)).to_vector())
    n = alg.m**2
    matrix = [[cols[c][r] for c in range(n)] for r in range(n)]
    for vec in kernel_basis(matrix, alg.field):
        grid = [[vec[i * alg.m + j] for j in range(alg.m)] for i in range(alg.m)]
        x = SymbolElem(alg, grid)
        if x.is_zero():
            continue
        xm = x**alg.m
        if xm.is_scalar() and not xm.is_zero():
            return x
    return None


def _require_zero_base(algebra: SymbolAlgebra):
    if not getattr(algebra.field, "is_zero_derivation", False):
        raise ValueError("this construction requires the zero base derivation")


def _u_polynomial_coeffs(rho: SymbolElem):
    alg = rho.algebra
    for i in range(alg.m):
        for j in range(1, alg.m):
            if not rho.grid[i][j].is_zero():
                raise ValueError(
                    "rho must be written as a polynomial in u; "
                    "rewrite it over a Kummer generator first (see find_twist_partner)"
                )
    return [rho.grid[i][0] for i in range(alg.m)]


def split_inner_cyclic(algebra: SymbolAlgebra, rho: SymbolElem) -> SplitReport:
    """Transcendence-degree-m splitting field for inner(rho), zero base derivation."""
    _require_zero_base(algebra)
    rho = algebra.coerce_elem(rho)
    if minimal_polynomial(rho).degree != algebra.m:
        raise ValueError("rho does not generate a degree-m subfield")
    coeffs = _u_polynomial_coeffs(rho)
    m = algebra.m
    xi_field = KummerField(algebra.field, algebra.alpha, m, "xi")
    phi = PhiMap(algebra, xi_field)
    p = DiffMatrix.zero(xi_field, m)
    for i, a in enumerate(coeffs):
        if not a.is_zero():
            p = p + phi._a_pows[i].scale(xi_field.coerce(a))
    iso = verify_diff_isomorphism(phi, inner_derivation(rho), p)
    names = [f"x{r}" for r in range(m)]
    rates = [p.rows[r][r] for r in range(m)]
    e = MonomialDiffField(xi_field, names, rates)
    f_mat = DiffMatrix.diagonal(e, [e.gen(r) for r in range(m)])
    gauge = verify_gauge(p.coerce_to(e), f_mat)
    from .parser import scalar_to_str

    return SplitReport(
        extension={
            "tower": [_tower_entry(xi_field)] + [{"gen": n, "power": None, "radicand": None} for n in names],
            "derivation_rules": [f"delta({n}) = ({scalar_to_str(r)}) {n}" for n, r in zip(names, rates)],
        },
        p=p,
        f=f_mat,
        gauge=gauge,
        isomorphism=iso,
        degree=None,
        transcendence_degree=m,
        diagnostics=[],
    )


def split_inner_even_half(algebra: SymbolAlgebra, rho: SymbolElem) -> SplitReport:
    """Transcendence degree m/2 for even m and rho a scalar multiple of u.

    The gauge matrix is diag(F0, F0^{-1}) with F0 = diag(x_0..x_{m/2-1}):
    the lower block must carry the inverse variables for delta^c(F) = PF
    to hold on the -P0 block.
    """
    _require_zero_base(algebra)
    m = algebra.m
    if m % 2 != 0:
        raise ValueError("the half construction needs even m")
    rho = algebra.coerce_elem(rho)
    scale = rho.grid[1][0]
    if scale.is_zero() or any(
        not rho.grid[i][j].is_zero() for i in range(m) for j in range(m) if (i, j) != (1, 0)
    ):
        raise ValueError("rho must be a nonzero scalar multiple of u")
    half = m // 2
    xi_field = KummerField(algebra.field, algebra.alpha, m, "xi")
    phi = PhiMap(algebra, xi_field)
    p = phi.apply(rho)
    diagnostics = []
    # cross-check the block form diag(P0, -P0)
    for r in range(half):
        if not (p.rows[r][r] + p.rows[half + r][half + r]).is_zero():
            diagnostics.append(f"block antisymmetry fails at row {r}")
    iso = verify_diff_isomorphism(phi, inner_derivation(rho), p)
    names = [f"x{r}" for r in range(half)]
    rates = [p.rows[r][r] for r in range(half)]
    e = MonomialDiffField(xi_field, names, rates)
    entries = [e.gen(r) for r in range(half)] + [e.gen(r) ** (-1) for r in range(half)]
    f_mat = DiffMatrix.diagonal(e, entries)
    gauge = verify_gauge(p.coerce_to(e), f_mat)
    from .parser import scalar_to_str

    return SplitReport(
        extension={
            "tower": [_tower_entry(xi_field)] + [{"gen": n, "power": None, "radicand": None} for n in names],
            "derivation_rules": [f"delta({n}) = ({scalar_to_str(r)}) {n}" for n, r in zip(names, rates)],
        },
        p=p,
        f=f_mat,
        gauge=gauge,
        isomorphism=iso,
        degree=None,
        transcendence_degree=half,
        diagnostics=diagnostics,
    )


def split_generic(p: DiffMatrix) -> SplitReport:
    """Generic splitting field: adjoin m^2 indeterminates with delta(X) = PX."""
    m = p.size
    base = p.field
    names = [f"x{r}{s}" for r in range(m) for s in range(m)]
    e = PolyDiffField(base, names)
    gens = [[e.gen(r * m + s) for s in range(m)] for r in range(m)]
    for r in range(m):
        for s in range(m):
            image = e.zero()
            for l in range(m):
                if not p.rows[r][l].is_zero():
                    image = image + gens[l][s].scale(p.rows[r][l])
            e.set_gen_derivative(r * m + s, image)
    f_mat = DiffMatrix(e, gens)
    gauge = verify_gauge(p.coerce_to(e), f_mat)
    return SplitReport(
        extension={
            "tower": [{"gen": n, "power": None, "radicand": None} for n in names],
            "derivation_rules": ["delta(X) = P X entry-wise"],
        },
        p=p,
        f=f_mat,
        gauge=gauge,
        isomorphism=None,
        degree=None,
        transcendence_degree=m * m,
        diagnostics=[],
    )


@dataclass
class NormSplitReport:
    p: int
    c: object
    ok: bool

    def to_json(self):
        from .parser import scalar_to_str

        return {"p": self.p, "c": scalar_to_str(self.c), "ok": self.ok}


def norm_split_check(algebra: SymbolAlgebra, d: Derivation, theta: SymbolElem) -> NormSplitReport:
    """From a constant theta outside k(u), produce c with (alpha, c beta^p) split.

    Requires x^m - alpha irreducible, so the norm is the full product of the
    m conjugates xi -> w^j xi.
    """
    from .deriv import subfield_stable

    theta = algebra.coerce_elem(theta)
    if not d.apply(theta).is_zero():
        raise ValueError("theta must be a constant of d")
    if not subfield_stable(d, algebra.u()):
        raise ValueError("d must preserve k(u)")
    m = algebra.m
    p = None
    for j in range(1, m):
        if any(not theta.grid[i][j].is_zero() for i in range(m)):
            p = j
            break
    if p is None:
        raise ValueError("theta lies in k(u); no invertible v-component")
    xi_field = KummerField(algebra.field, algebra.alpha, m, "xi")
    theta_p = xi_field.zero()
    xi = xi_field.gen()
    for i in range(m):
        c = theta.grid[i][p]
        if not c.is_zero():
            theta_p = theta_p + xi**i * xi_field.coerce(c)
    gamma = theta_p.inv()
    norm = xi_field.one()
    for j in range(m):
        norm = norm * gamma.conjugate(j)
    if not norm.is_base():
        raise AssertionError("norm did not land in the base field")
    c = norm.base_value() / algebra.beta**p
    ok = c.derive().is_zero()
    return NormSplitReport(p=p, c=c, ok=ok)


@dataclass
class MaxSubfieldReport:
    alpha_witness: tuple | None
    beta_witness: tuple | None

    @property
    def refuted(self) -> bool:
        return self.alpha_witness is None or self.beta_witness is None

    def to_json(self):
        from .parser import scalar_to_str

        def enc(wit):
            if wit is None:
                return None
            r, c, h = wit
            return {"r": r, "c": scalar_to_str(c), "h": scalar_to_str(h)}

        return {
            "alpha_witness": enc(self.alpha_witness),
            "beta_witness": enc(self.beta_witness),
            "refuted": self.refuted,
        }


def maximal_subfield_necessary(algebra: SymbolAlgebra, nu) -> MaxSubfieldReport:
    """Necessary-condition search for L = k(gamma), gamma^m = nu, splitting (A, d_s).

    Splitting requires constants lambda, mu with lambda*alpha and mu*beta
    both m-th powers times a power of nu; absence of a witness on either
    side refutes the candidate subfield.
    """
    m = algebra.m
    if not is_prime(m):
        raise ValueError("the necessary condition is stated for prime m")
    nu = algebra.field.coerce(nu)
    if nu.is_zero():
        raise ValueError("nu must be nonzero")
    for name, value in (("alpha", algebra.alpha), ("beta", algebra.beta)):
        if mth_power_up_to_constant(value, m) is not None:
            raise ValueError(f"hypothesis violation: {name} is an m-th power up to constant")

    def search(value):
        for r in range(1, m):
            res = mth_power_up_to_constant(value / nu**r, m)
            if res is not None:
                c, h = res
                return (r, c, h)
        return None

    return MaxSubfieldReport(alpha_witness=search(algebra.alpha), beta_witness=search(algebra.beta))
