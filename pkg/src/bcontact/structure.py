"""Almost contact B-metric structures and their basic-class lattice.

The structure is the quadruple (phi, xi, eta, g) on an odd-dimensional model,
where phi restricts to an anti-isometry of the contact distribution ker(eta)
and g has signature (n+1, n).  The associated metric

    g~(x,y) = g(x, phi y) + eta(x) eta(y)

is again a B-metric of the same signature, so every structure carries a pair
of Levi-Civita connections and a pair of fundamental tensors; the conversion
formulas between them are implemented here with two independent computation
routes each.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import scalars
from .liegroup import Connection, LieAlgebra, covariant_derivative
from .scalars import DEFAULT_EPS, RATIONAL
from .tensor import Metric, Tensor, sharp


class InvariantError(ArithmeticError):
    """A derived identity that must hold on any valid structure failed."""


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    passed: bool
    residual: float
    worst_index: Optional[tuple] = None

    def __str__(self):
        status = "ok" if self.passed else "FAIL"
        where = "" if self.worst_index is None else f" at {self.worst_index}"
        return f"{self.name}: {status} (residual {self.residual:.3g}{where})"


@dataclass(frozen=True)
class ValidationReport:
    checks: list[IdentityCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[IdentityCheck]:
        return [c for c in self.checks if not c.passed]


def _check(name, arr, eps, *context) -> IdentityCheck:
    arr = np.asarray(arr)
    res = scalars.residual(arr)
    ok = scalars.is_zero(arr, eps, *context)
    worst = None
    if not ok and arr.ndim:
        worst = tuple(
            int(k)
            for k in np.unravel_index(
                np.argmax(np.abs(scalars.to_float(arr))), arr.shape
            )
        )
    return IdentityCheck(name, ok, res, worst)


@dataclass(frozen=True)
class ACBStructure:
    """Almost contact B-metric structure on a left-invariant model."""

    algebra: LieAlgebra
    phi: Tensor  # (1,1)
    xi: Tensor  # (1,0)
    eta: Tensor  # (0,1)
    metric: Metric
    assoc: Metric = field(init=False)

    def __post_init__(self):
        if self.dim % 2 == 0:
            raise ValueError("almost contact structures need odd dimension")
        object.__setattr__(self, "assoc", associated_metric(self))

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def n(self) -> int:
        return (self.dim - 1) // 2

    @property
    def mode(self) -> str:
        return self.algebra.mode

    # small conveniences used all over the derived modules
    @property
    def phi_m(self) -> np.ndarray:
        return self.phi.data

    @property
    def phi2(self) -> np.ndarray:
        return self.phi.data @ self.phi.data

    @property
    def xi_v(self) -> np.ndarray:
        return self.xi.data

    @property
    def eta_v(self) -> np.ndarray:
        return self.eta.data

    def metric_for(self, role: str) -> Metric:
        if role == "g":
            return self.metric
        if role == "gtilde":
            return self.assoc
        raise ValueError(f"unknown metric role {role!r}")


def associated_of(m: Metric, s: "ACBStructure") -> Metric:
    """Associated metric of an arbitrary B-metric for the same (phi, eta)."""
    mat = np.einsum("im,mj->ij", m.matrix, s.phi_m) + np.einsum(
        "i,j->ij", s.eta_v, s.eta_v
    )
    return Metric.from_matrix(mat)


def associated_metric(s: ACBStructure) -> Metric:
    """g~(x,y) = g(x, phi y) + eta(x) eta(y)."""
    g, phi, eta = s.metric.matrix, s.phi_m, s.eta_v
    m = np.einsum("im,mj->ij", g, phi) + np.einsum("i,j->ij", eta, eta)
    return Metric.from_matrix(m)


def validate_structure(s: ACBStructure, eps: float = DEFAULT_EPS) -> ValidationReport:
    """Check every algebraic axiom of the structure, reporting each identity
    with its worst residual instead of raising, so callers can print diagnostics."""
    dim, n = s.dim, s.n
    phi, xi, eta, g = s.phi_m, s.xi_v, s.eta_v, s.metric.matrix
    eye = scalars.zeros((dim, dim), s.mode)
    for i in range(dim):
        eye[i, i] = scalars.one(s.mode)

    checks = [
        _check("phi(xi) = 0", phi @ xi, eps, phi),
        _check(
            "phi^2 = -id + eta (x) xi",
            phi @ phi + eye - np.einsum("i,j->ij", xi, eta),
            eps,
            phi,
        ),
        _check("eta o phi = 0", eta @ phi, eps, phi),
        _check("eta(xi) = 1", np.asarray(eta @ xi - scalars.one(s.mode)), eps),
        _check(
            "g(phi x, phi y) = -g(x,y) + eta(x) eta(y)",
            np.einsum("mi,rj,mr->ij", phi, phi, g) + g - np.einsum("i,j->ij", eta, eta),
            eps,
            g,
        ),
        _check("g(xi, xi) = 1", np.asarray(s.metric.inner(xi, xi) - scalars.one(s.mode)), eps, g),
        _check("g(xi, .) = eta", np.einsum("ij,i->j", g, xi) - eta, eps, g),
    ]

    sig = s.metric.signature
    checks.append(
        IdentityCheck(
            f"signature of g is ({n + 1},{n})",
            sig == (n + 1, n),
            0.0 if sig == (n + 1, n) else 1.0,
        )
    )
    asig = s.assoc.signature
    checks.append(
        IdentityCheck(
            f"signature of associated metric is ({n + 1},{n})",
            asig == (n + 1, n),
            0.0 if asig == (n + 1, n) else 1.0,
        )
    )
    gt = s.assoc.matrix
    checks.append(
        _check(
            "g~(xi, xi) = 1",
            np.asarray(s.assoc.inner(xi, xi) - scalars.one(s.mode)),
            eps,
            gt,
        )
    )
    checks.append(
        _check(
            "g~ is itself a B-metric",
            np.einsum("mi,rj,mr->ij", phi, phi, gt) + gt - np.einsum("i,j->ij", eta, eta),
            eps,
            gt,
        )
    )
    return ValidationReport(checks)


# ---------------------------------------------------------------------------
# fundamental tensor and Lee forms
# ---------------------------------------------------------------------------

def fundamental_tensor(
    s: ACBStructure, conn: Connection, m: Metric, eps: float = DEFAULT_EPS
) -> Tensor:
    """F(x,y,z) = m((nabla_x phi) y, z) for the Levi-Civita connection of m.

    The defining symmetries are asserted before the tensor is returned; their
    failure signals an inconsistent model rather than bad input, hence the
    InvariantError.
    """
    nphi = covariant_derivative(conn, s.phi)  # data[l, x, y]
    f = np.einsum("lxy,lz->xyz", nphi.data, m.matrix)
    phi, xi, eta = s.phi_m, s.xi_v, s.eta_v

    if not scalars.is_zero(f - np.swapaxes(f, 1, 2), eps, f):
        raise InvariantError("fundamental tensor is not symmetric in its last slots")
    # F(x,y,z) = F(x, phi y, phi z) + eta(y) F(x, xi, z) + eta(z) F(x, y, xi)
    fxiz = np.einsum("xmz,m->xz", f, xi)
    rhs = (
        np.einsum("xab,ay,bz->xyz", f, phi, phi)
        + np.einsum("y,xz->xyz", eta, fxiz)
        + np.einsum("z,xy->xyz", eta, fxiz)
    )
    if not scalars.is_zero(f - rhs, eps, f):
        raise InvariantError("fundamental tensor fails its projection identity")
    # F(x, phi y, xi) = (nabla_x eta)(y) = m(nabla_x xi, y)
    lam = np.einsum("ki,kj->ij", conn.nabla_of_constant(xi), m.matrix)
    neta = covariant_derivative(conn, Tensor(0, 1, eta)).data
    fphixi = np.einsum("xaz,ay,z->xy", f, phi, xi)
    if not scalars.is_zero(fphixi - lam, eps, f) or not scalars.is_zero(
        neta - lam, eps, f
    ):
        raise InvariantError("fundamental tensor disagrees with nabla xi")
    return Tensor(0, 3, f)


@dataclass(frozen=True)
class LeeForms:
    """The three metric contractions of a fundamental tensor."""

    theta: Tensor
    theta_star: Tensor
    omega: Tensor
    omega_sharp: Tensor

    def theta_xi(self, s: ACBStructure):
        return self.theta.data @ s.xi_v

    def theta_star_xi(self, s: ACBStructure):
        return self.theta_star.data @ s.xi_v


def lee_forms(s: ACBStructure, f: Tensor, m: Metric, eps: float = DEFAULT_EPS) -> LeeForms:
    """theta(z) = m^{ij} F(e_i,e_j,z), theta*(z) = m^{ij} F(e_i, phi e_j, z),
    omega(z) = F(xi, xi, z).

    The trace defining theta runs over an adapted basis of the contact
    distribution: in a frame where xi is a basis vector orthogonal to the
    rest, the full m-trace of F picks up an extra F(xi,xi,z) term, which is
    removed here.  This is the convention under which the standard identity
    theta* o phi = -theta o phi^2 holds with no omega correction (the two
    readings agree on every structure with omega = 0, and always agree at
    z = xi since omega(xi) = 0).
    """
    phi, xi = s.phi_m, s.xi_v
    omega = np.einsum("i,j,ijz->z", xi, xi, f.data)
    theta = np.einsum("ij,ijz->z", m.inv, f.data) - omega
    theta_star = np.einsum("ij,mj,imz->z", m.inv, phi, f.data)
    if not scalars.is_zero(np.asarray(omega @ xi), eps, f.data):
        raise InvariantError("omega(xi) must vanish")
    # theta* o phi = -theta o phi^2
    lhs = theta_star @ phi
    rhs = -(theta @ s.phi2)
    if not scalars.is_zero(lhs - rhs, eps, f.data):
        raise InvariantError("Lee form identity theta* o phi = -theta o phi^2 failed")
    om = Tensor(0, 1, omega)
    return LeeForms(Tensor(0, 1, theta), Tensor(0, 1, theta_star), om, sharp(om, m))


def divergences(
    s: ACBStructure,
    conn: Connection,
    m: Metric,
    m_assoc: Metric,
    lee: LeeForms,
    eps: float = DEFAULT_EPS,
):
    """div(eta) and div*(eta) for the structure carried by the metric m.

    Both divergences contract the same covariant derivative of eta (taken
    with the Levi-Civita connection of m); the plain one traces with m, the
    starred one with the associated metric of m.  The trace identities
    theta(xi) = div*(eta) and theta*(xi) = div(eta) are asserted.
    """
    neta = covariant_derivative(conn, s.eta).data
    div = np.einsum("ij,ij->", m.inv, neta)
    div_star = np.einsum("ij,ij->", m_assoc.inv, neta)
    if not scalars.is_zero(np.asarray(lee.theta_xi(s) - div_star), eps, neta):
        raise InvariantError("theta(xi) = div*(eta) failed")
    if not scalars.is_zero(np.asarray(lee.theta_star_xi(s) - div), eps, neta):
        raise InvariantError("theta*(xi) = div(eta) failed")
    return div, div_star


# ---------------------------------------------------------------------------
# potential of the second Levi-Civita connection and the conversion formulas
# ---------------------------------------------------------------------------

def connection_potential(conn_from: Connection, conn_to: Connection) -> Tensor:
    """Potential of conn_to with respect to conn_from, as a (1,2) tensor."""
    return Tensor(1, 2, conn_to.gamma.data - conn_from.gamma.data)


def phi_potential(
    s: ACBStructure,
    conn: Connection,
    conn_assoc: Connection,
    f: Tensor,
    lee: LeeForms,
    eps: float = DEFAULT_EPS,
) -> tuple[Tensor, Tensor]:
    """Potential of the associated Levi-Civita connection with respect to the
    first one, as (1,2) and g-lowered (0,3) tensors.

    Computed as the direct coefficient difference and independently through
    the closed form in the fundamental tensor; a mismatch (or a failure of
    symmetry, or of the reconstruction of F from the result) signals an
    implementation bug and raises.
    """
    pot = connection_potential(conn, conn_assoc)
    pot03 = potential_lowered(pot, s.metric)
    closed = potential_from_fundamental(s, f, lee)
    if not scalars.arrays_equal(pot03.data, closed.data, eps):
        raise InvariantError("potential disagrees with its closed form")
    if not scalars.is_zero(pot03.data - np.einsum("xyz->yxz", pot03.data), eps, pot03.data):
        raise InvariantError("potential of two torsion-free connections must be symmetric")
    rebuilt = fundamental_from_potential(s, pot03)
    if not scalars.arrays_equal(rebuilt.data, f.data, eps):
        raise InvariantError("fundamental tensor not recovered from the potential")
    return pot, pot03


def assoc_fundamental(
    s: ACBStructure, conn_assoc: Connection, f: Tensor, eps: float = DEFAULT_EPS
) -> Tensor:
    """Fundamental tensor of the associated structure, computed from its own
    Levi-Civita connection and cross-checked against the conversion from F."""
    direct = fundamental_tensor(s, conn_assoc, s.assoc, eps)
    converted = assoc_fundamental_from_fundamental(s, f)
    if not scalars.arrays_equal(direct.data, converted.data, eps):
        raise InvariantError(
            "associated fundamental tensor disagrees between its two routes"
        )
    return direct


def potential_lowered(pot: Tensor, m: Metric) -> Tensor:
    return Tensor(0, 3, np.einsum("lxy,lz->xyz", pot.data, m.matrix))


def potential_from_fundamental(s: ACBStructure, f: Tensor, lee: LeeForms) -> Tensor:
    """Closed form of the potential (0,3) tensor in terms of F:

    2 Phi(x,y,z) = -F(x,y,phi z) - F(y,x,phi z) + F(phi z,x,y)
                 + eta(x) {F(y,z,xi) + F(phi z, phi y, xi)}
                 + eta(y) {F(x,z,xi) + F(phi z, phi x, xi)}
                 + eta(z) {-F(xi,x,y) + F(x,y,xi) + F(x,phi y,xi) - omega(phi x) eta(y)
                           + F(y,x,xi) + F(y,phi x,xi) - omega(phi y) eta(x)}.
    """
    fd, phi, xi, eta = f.data, s.phi_m, s.xi_v, s.eta_v
    om_phi = np.einsum("m,mz->z", lee.omega.data, phi)  # omega(phi .)
    fxi = np.einsum("xym,m->xy", fd, xi)  # F(x,y,xi)
    fphiphixi = np.einsum("abm,ax,by,m->xy", fd, phi, phi, xi)  # F(phi x, phi y, xi)
    f_xyphiz = np.einsum("xym,mz->xyz", fd, phi)  # F(x,y,phi z)
    fphiz_xy = np.einsum("mxy,mz->xyz", fd, phi)  # F(phi z,x,y) indexed [x,y,z]
    fxiphiy = np.einsum("xam,ay,m->xy", fd, phi, xi)  # F(x, phi y, xi)
    f_xi_first = np.einsum("mxy,m->xy", fd, xi)  # F(xi, x, y)

    # bracket shared by the eta(x) and eta(y) terms: F(u,v,xi) + F(phi v, phi u, xi)
    b = fxi + fphiphixi.T
    zc = (
        -f_xi_first
        + fxi
        + fxiphiy
        - np.einsum("x,y->xy", om_phi, eta)
        + fxi.T
        + fxiphiy.T
        - np.einsum("y,x->xy", om_phi, eta)
    )
    two_phi = (
        -f_xyphiz
        - np.einsum("xyz->yxz", f_xyphiz)
        + fphiz_xy
        + np.einsum("x,yz->xyz", eta, b)
        + np.einsum("y,xz->xyz", eta, b)
        + np.einsum("z,xy->xyz", eta, zc)
    )
    return Tensor(0, 3, two_phi * scalars.half(s.mode))


def fundamental_from_potential(s: ACBStructure, phi03: Tensor) -> Tensor:
    """Reconstruct F from the potential:

    F(x,y,z) = Phi(x,y,phi z) + Phi(x,z,phi y)
             + 1/2 eta(z) {Phi(x,y,xi) - Phi(x,phi y,xi) + Phi(xi,x,y) - Phi(xi,x,phi y)}
             + 1/2 eta(y) {Phi(x,z,xi) - Phi(x,phi z,xi) + Phi(xi,x,z) - Phi(xi,x,phi z)}.
    """
    p, phi, xi, eta = phi03.data, s.phi_m, s.xi_v, s.eta_v
    p_xyphiz = np.einsum("xym,mz->xyz", p, phi)
    pxi = np.einsum("xym,m->xy", p, xi)  # Phi(x,y,xi)
    pxiphiy = np.einsum("xam,ay,m->xy", p, phi, xi)  # Phi(x,phi y,xi)
    pfirst = np.einsum("mxy,m->xy", p, xi)  # Phi(xi,x,y)
    pfirstphi = np.einsum("mxa,m,ay->xy", p, xi, phi)  # Phi(xi,x,phi y)
    bracket = pxi - pxiphiy + pfirst - pfirstphi  # indexed [x,y]
    h = scalars.half(s.mode)
    f = (
        p_xyphiz
        + np.einsum("xyz->xzy", p_xyphiz)
        + np.einsum("z,xy->xyz", eta, bracket) * h
        + np.einsum("y,xz->xyz", eta, bracket) * h
    )
    return Tensor(0, 3, f)


def assoc_fundamental_from_fundamental(s: ACBStructure, f: Tensor) -> Tensor:
    """Fundamental tensor of the associated structure computed from F alone:

    2 F~(x,y,z) = F(phi y,z,x) - F(y,phi z,x) + F(phi z,y,x) - F(z,phi y,x)
                + eta(x) {F(y,z,xi) + F(phi z,phi y,xi) + F(z,y,xi) + F(phi y,phi z,xi)}
                + eta(y) {F(x,z,xi) + F(phi z,phi x,xi) + F(x,phi z,xi)}
                + eta(z) {F(x,y,xi) + F(phi y,phi x,xi) + F(x,phi y,xi)}.
    """
    fd, phi, xi, eta = f.data, s.phi_m, s.xi_v, s.eta_v
    fxi = np.einsum("xym,m->xy", fd, xi)
    fphiphixi = np.einsum("abm,ax,by,m->xy", fd, phi, phi, xi)
    fxiphiy = np.einsum("xam,ay,m->xy", fd, phi, xi)

    t1 = np.einsum("azx,ay->xyz", fd, phi)  # F(phi y, z, x)
    t2 = np.einsum("yax,az->xyz", fd, phi)  # F(y, phi z, x)
    t3 = np.einsum("ayx,az->xyz", fd, phi)  # F(phi z, y, x)
    t4 = np.einsum("zax,ay->xyz", fd, phi)  # F(z, phi y, x)
    bx = fxi + fphiphixi.T + fxi.T + fphiphixi  # [y,z] bracket of the eta(x) term
    by = fxi + fphiphixi.T + fxiphiy  # [x,z] bracket of the eta(y) term
    two_ft = (
        t1
        - t2
        + t3
        - t4
        + np.einsum("x,yz->xyz", eta, bx)
        + np.einsum("y,xz->xyz", eta, by)
        + np.einsum("z,xy->xyz", eta, by)
    )
    return Tensor(0, 3, two_ft * scalars.half(s.mode))


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

BASIC_CLASSES = [f"F{i}" for i in range(1, 12)]
ALL_FLAGS = ["F0"] + BASIC_CLASSES + ["U1", "U2", "U3", "U1_assoc", "F3+U3", "F1+F2+U3"]


@dataclass(frozen=True)
class ClassificationReport:
    """Membership booleans over the basic classes and the named unions.

    Membership in a class means the fundamental tensor satisfies that class's
    defining identity, so the zero tensor (class F0) belongs to every listed
    set.  Each flag carries the residual of its defining condition.
    """

    metric_role: str
    membership: dict[str, bool]
    residuals: dict[str, float]
    scalars: dict[str, float]

    def __getitem__(self, flag: str) -> bool:
        return self.membership[flag]


def _class_conditions(s: ACBStructure, f: Tensor, lee: LeeForms, m: Metric):
    """Residual arrays for the defining identity of each basic class."""
    dim, n = s.dim, s.n
    fd, phi, xi, eta, g = f.data, s.phi_m, s.xi_v, s.eta_v, m.matrix
    phi2 = s.phi2
    theta, theta_star = lee.theta.data, lee.theta_star.data
    omega = lee.omega.data
    inv2n = (
        scalars.one(s.mode) / (2 * n)
        if s.mode == RATIONAL
        else 1.0 / (2 * n)
    )

    g_phi = np.einsum("im,mj->ij", g, phi)  # g(e_i, phi e_j)
    g_phiphi = np.einsum("mi,rj,mr->ij", phi, phi, g)  # g(phi e_i, phi e_j)
    th_phi = theta @ phi
    th_phi2 = theta @ phi2
    fxi = np.einsum("xym,m->xy", fd, xi)  # F(x,y,xi)
    f_first_xi = np.einsum("mxy,m->xy", fd, xi)  # F(xi,y,z)
    f_mid_xi = np.einsum("xmy,m->xy", fd, xi)  # F(x,xi,z)
    fxi_phiphi = np.einsum("abm,ax,by,m->xy", fd, phi, phi, xi)  # F(phi x, phi y, xi)

    conds: dict[str, list[np.ndarray]] = {}

    rhs1 = (
        np.einsum("xy,z->xyz", g_phi, th_phi)
        + np.einsum("xy,z->xyz", g_phiphi, th_phi2)
        + np.einsum("xz,y->xyz", g_phi, th_phi)
        + np.einsum("xz,y->xyz", g_phiphi, th_phi2)
    ) * inv2n
    conds["F1"] = [fd - rhs1]

    f_phi_z = np.einsum("xym,mz->xyz", fd, phi)  # F(x,y,phi z)
    cyc_phi = f_phi_z + np.einsum("xyz->yzx", f_phi_z) + np.einsum("xyz->zxy", f_phi_z)
    cyc = fd + np.einsum("xyz->yzx", fd) + np.einsum("xyz->zxy", fd)
    conds["F2"] = [f_first_xi, f_mid_xi, cyc_phi, theta]
    conds["F3"] = [f_first_xi, f_mid_xi, cyc]

    txi = lee.theta_xi(s)
    rhs4 = -(
        np.einsum("xy,z->xyz", g_phiphi, eta) + np.einsum("xz,y->xyz", g_phiphi, eta)
    ) * (txi * inv2n)
    conds["F4"] = [fd - rhs4]

    tsxi = lee.theta_star_xi(s)
    rhs5 = -(
        np.einsum("xy,z->xyz", g_phi, eta) + np.einsum("xz,y->xyz", g_phi, eta)
    ) * (tsxi * inv2n)
    conds["F5"] = [fd - rhs5]

    vert_form = np.einsum("xy,z->xyz", fxi, eta) + np.einsum("xz,y->xyz", fxi, eta)
    form_res = fd - vert_form
    conds["F6"] = [form_res, fxi - fxi.T, fxi + fxi_phiphi, theta, theta_star]
    conds["F7"] = [form_res, fxi + fxi.T, fxi + fxi_phiphi]
    conds["F8"] = [form_res, fxi - fxi.T, fxi - fxi_phiphi]
    conds["F9"] = [form_res, fxi + fxi.T, fxi - fxi_phiphi]

    f_xi_phiphi = np.einsum("mab,m,ay,bz->yz", fd, xi, phi, phi)  # F(xi, phi y, phi z)
    conds["F10"] = [fd - np.einsum("x,yz->xyz", eta, f_xi_phiphi)]

    rhs11 = np.einsum("x,y,z->xyz", eta, eta, omega) + np.einsum(
        "x,z,y->xyz", eta, eta, omega
    )
    conds["F11"] = [fd - rhs11]
    return conds


def classify(
    s: ACBStructure,
    f: Tensor,
    lee: LeeForms,
    m: Metric,
    conn: Connection,
    conn_partner: Connection,
    pot03: Tensor,
    div_pair,
    metric_role: str = "g",
    eps: float = DEFAULT_EPS,
) -> ClassificationReport:
    """Decide every membership flag by direct substitution into the defining
    identities over the whole basis.

    ``conn`` is the Levi-Civita connection belonging to ``m``; ``conn_partner``
    is the one belonging to the other metric of the pair, used for the
    U1_assoc flag.  ``pot03`` is the (0,3) potential of the partner connection
    with respect to ``conn``, lowered by ``m``.
    """
    fd, phi, xi, eta = f.data, s.phi_m, s.xi_v, s.eta_v
    phi2 = s.phi2
    membership: dict[str, bool] = {}
    residuals: dict[str, float] = {}

    def record(flag: str, arrays: list[np.ndarray]):
        res = max((scalars.residual(np.asarray(a)) for a in arrays), default=0.0)
        ok = all(scalars.is_zero(np.asarray(a), eps, fd) for a in arrays)
        membership[flag] = ok
        residuals[flag] = res

    record("F0", [fd])
    for name, arrays in _class_conditions(s, f, lee, m).items():
        record(name, arrays)

    record("U1", [conn.nabla_of_constant(xi)])
    record("U1_assoc", [conn_partner.nabla_of_constant(xi)])

    fxi = np.einsum("xym,m->xy", fd, xi)
    u2 = fd - np.einsum("xy,z->xyz", fxi, eta) - np.einsum("xz,y->xyz", fxi, eta)
    record("U2", [u2])

    p = pot03.data
    f3u3 = np.einsum("xab,ay,bz->xyz", p, phi2, phi2) + np.einsum(
        "xab,ay,bz->xyz", p, phi, phi
    )
    record("F3+U3", [f3u3])

    # F(phi y,phi z,x) + F(phi^2 y,phi^2 z,x) - F(phi z,phi y,x) - F(phi^2 z,phi^2 y,x)
    e1 = np.einsum("abx,ay,bz->xyz", fd, phi, phi)
    e2 = np.einsum("abx,ay,bz->xyz", fd, phi2, phi2)
    record("F1+F2+U3", [e1 + e2 - np.einsum("xyz->xzy", e1) - np.einsum("xyz->xzy", e2)])

    membership["U3"] = membership["U2"] and membership["F3+U3"]
    residuals["U3"] = max(residuals["U2"], residuals["F3+U3"])

    div, div_star = div_pair
    report_scalars = {
        "theta(xi)": lee.theta_xi(s),
        "theta*(xi)": lee.theta_star_xi(s),
        "div(eta)": div,
        "div*(eta)": div_star,
    }
    return ClassificationReport(metric_role, membership, residuals, report_scalars)


def nabla_xi_class_residuals(
    s: ACBStructure,
    conn: Connection,
    m: Metric,
    lee: LeeForms,
    div_pair,
    report: ClassificationReport,
) -> dict[str, float]:
    """For each basic class the structure belongs to, the residual of the
    covariant-derivative-of-xi identity that class forces:

      F1,F2,F3,F10: nabla xi = 0         F4: nabla xi = (div*(eta)/2n) phi
      F5: nabla xi = -(div(eta)/2n) phi^2
      F6: symmetric, sign-reversed under phi, both divergences vanish
      F7/F8/F9: the corresponding symmetry pattern of m(nabla_. xi, .)
      F11: nabla xi = eta (x) (phi omega#)
    """
    phi, xi, eta = s.phi_m, s.xi_v, s.eta_v
    n = s.n
    nxi = conn.nabla_of_constant(xi)  # [k, i]
    lam = np.einsum("ki,kj->ij", nxi, m.matrix)  # m(nabla_{e_i} xi, e_j)
    lam_phiphi = np.einsum("ab,ai,bj->ij", lam, phi, phi)
    div, div_star = div_pair
    inv2n = scalars.one(s.mode) / (2 * n) if s.mode == RATIONAL else 1.0 / (2 * n)

    out: dict[str, float] = {}

    def put(flag: str, arrays: list[np.ndarray]):
        if report.membership.get(flag):
            out[flag] = max(
                (scalars.residual(np.asarray(a)) for a in arrays), default=0.0
            )

    for flag in ("F1", "F2", "F3", "F10"):
        put(flag, [nxi])
    put("F4", [nxi - phi * (div_star * inv2n)])
    put("F5", [nxi + s.phi2 * (div * inv2n)])
    put("F6", [lam - lam.T, lam + lam_phiphi, np.asarray(div), np.asarray(div_star)])
    put("F7", [lam + lam.T, lam + lam_phiphi])
    put("F8", [lam + lam.T, lam - lam_phiphi])
    put("F9", [lam - lam.T, lam - lam_phiphi])
    phi_om = phi @ sharp(lee.omega, m).data
    put("F11", [nxi - np.einsum("k,i->ki", phi_om, eta)])
    return out
