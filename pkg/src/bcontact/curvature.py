"""Curvature of the four connections and the sectional-curvature relations.

For each metric in the pair there are two connections (Levi-Civita and its
Schouten-van Kampen projection); the (0,4) curvature of each is lowered with
the metric the connection belongs to.  The SvK curvatures are also computed
through the closed relation

    R^D(x,y,z,w) = R(x, y, phi^2 z, phi^2 w) + pi_1(S(x), S(y), z, w)

so that the direct route has an independent oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
import numpy as np

from . import scalars
from .hv import ShapeData, pi1
from .liegroup import Connection, LieAlgebra, covariant_derivative, curvature
from .structure import ACBStructure
from .tensor import Metric, Tensor


class DegeneratePlaneError(ValueError):
    """The 2-plane is degenerate for the metric in use."""


def curvature_04(algebra: LieAlgebra, conn: Connection, m: Metric) -> Tensor:
    """(0,4) curvature R(x,y,z,w) = m(R(x,y)z, w)."""
    r13 = curvature(algebra, conn)
    return Tensor(0, 4, np.einsum("lijk,lw->ijkw", r13.data, m.matrix))


def ricci(r04: Tensor, m: Metric) -> Tensor:
    """rho(y,z) = m^{ij} R(e_i, y, z, e_j)."""
    return Tensor(0, 2, np.einsum("ij,iabj->ab", m.inv, r04.data))


def scalar_curvature(rho: Tensor, m: Metric):
    return np.einsum("ij,ij->", m.inv, rho.data)


def svk_curvature_formula(
    s: ACBStructure, r04_base: Tensor, shape: ShapeData, m: Metric
) -> Tensor:
    """Right-hand side of the curvature relation tying the SvK connection to
    its base Levi-Civita connection."""
    phi2 = s.phi2
    first = np.einsum("ijab,ak,bl->ijkl", r04_base.data, phi2, phi2)
    sd = shape.diamond.data  # m(S(x), y)
    second = np.einsum("jk,il->ijkl", sd, sd) - np.einsum("ik,jl->ijkl", sd, sd)
    return Tensor(0, 4, first + second)


def svk_ricci_formula(
    s: ACBStructure, r04_base: Tensor, rho_base: Tensor, shape: ShapeData, m: Metric
) -> Tensor:
    """rho^D(y,z) = rho(y,z) - eta(z) rho(y,xi) - R(xi,y,z,xi)
    - m(S(S(y)), z) + tr(S) m(S(y), z)."""
    xi, eta = s.xi_v, s.eta_v
    rho_y_xi = np.einsum("ym,m->y", rho_base.data, xi)
    r_xi = np.einsum("iyzj,i,j->yz", r04_base.data, xi, xi)
    sop, sd = shape.operator.data, shape.diamond.data
    ss = np.einsum("km,mi->ki", sop, sop)
    ss_low = np.einsum("ky,kz->yz", ss, m.matrix)
    data = (
        rho_base.data
        - np.einsum("z,y->yz", eta, rho_y_xi)
        - r_xi
        - ss_low
        + sd * shape.trace
    )
    return Tensor(0, 2, data)


def svk_scalar_formula(tau_base, rho_xi_xi, shape: ShapeData):
    """tau^D = tau - 2 rho(xi,xi) - tr(S^2) + (tr S)^2."""
    s2 = np.trace(shape.operator.data @ shape.operator.data)
    return tau_base - 2 * rho_xi_xi - s2 + shape.trace**2


def ricci_xi_formula(
    s: ACBStructure, conn: Connection, shape: ShapeData, m: Metric
):
    """rho(xi,xi) = tr(nabla_xi S) - div(S(xi)) - tr(S^2)."""
    xi = s.xi_v
    nS = covariant_derivative(conn, shape.operator).data  # [k, x, i]
    tr_nabla_xi_s = np.einsum("kxk,x->", nS, xi)
    s_xi = np.einsum("ki,i->k", shape.operator.data, xi)
    div_s_xi = np.einsum(
        "ij,ki,kj->", m.inv, conn.nabla_of_constant(s_xi), m.matrix
    )
    s2 = np.trace(shape.operator.data @ shape.operator.data)
    return tr_nabla_xi_s - div_s_xi - s2


def curvature_reeb_identity(
    s: ACBStructure, conn: Connection, shape: ShapeData
) -> np.ndarray:
    """Residual of R(x,y) xi = -(nabla_x S) y + (nabla_y S) x over the basis."""
    from .liegroup import curvature as _curv

    r13 = _curv(s.algebra, conn).data
    lhs = np.einsum("lijk,k->lij", r13, s.xi_v)
    nS = covariant_derivative(conn, shape.operator).data  # [l, x, y]
    rhs = -nS + np.einsum("lxy->lyx", nS)
    return lhs - rhs


@dataclass(frozen=True)
class CurvatureData:
    """Curvature package of one metric: its Levi-Civita curvature and the
    curvature of the associated Schouten-van Kampen connection."""

    r04: Tensor
    rho: Tensor
    tau: object
    r04_svk: Tensor
    rho_svk: Tensor
    tau_svk: object


def curvature_data(
    s: ACBStructure,
    algebra: LieAlgebra,
    conn: Connection,
    svk_conn: Connection,
    m: Metric,
) -> CurvatureData:
    r04 = curvature_04(algebra, conn, m)
    rho = ricci(r04, m)
    tau = scalar_curvature(rho, m)
    r04_d = curvature_04(algebra, svk_conn, m)
    rho_d = ricci(r04_d, m)
    tau_d = scalar_curvature(rho_d, m)
    return CurvatureData(r04, rho, tau, r04_d, rho_d, tau_d)


# ---------------------------------------------------------------------------
# 2-plane sections
# ---------------------------------------------------------------------------

XI_SECTION = "xi-section"
HOLOMORPHIC = "phi-holomorphic"
TOTALLY_REAL = "phi-totally-real"
GENERIC = "generic"


@dataclass(frozen=True)
class SectionPlane:
    x: np.ndarray
    y: np.ndarray

    def denominator(self, m: Metric):
        return pi1(m, self.x, self.y, self.y, self.x)

    def check_nondegenerate(self, m: Metric, eps: float = scalars.DEFAULT_EPS):
        d = self.denominator(m)
        if scalars.is_zero(np.asarray(d), eps, m.matrix):
            raise DegeneratePlaneError("plane is degenerate for this metric")
        return d


def _in_span(vectors: list[np.ndarray], w: np.ndarray, eps: float) -> bool:
    """Exact (or eps-scaled) rank test: w in span(vectors) iff stacking does
    not raise the rank, decided via vanishing of all maximal minors."""
    a = np.stack(vectors + [w])
    k = a.shape[0]
    dim = a.shape[1]
    from itertools import combinations

    from .tensor import _rational_det

    for cols in combinations(range(dim), k):
        sub = a[:, cols]
        if a.dtype == object:
            det = _rational_det(sub)
            if det != 0:
                return False
        else:
            if abs(np.linalg.det(sub.astype(np.float64))) > scalars.tolerance(eps, a):
                return False
    return True


def section_type(
    plane: SectionPlane, s: ACBStructure, m: Metric, eps: float = scalars.DEFAULT_EPS
) -> tuple[str, bool]:
    """Classify the plane; returns (kind, orthogonal_to_xi).

    xi-section: xi lies in the plane.  phi-holomorphic: the plane is
    phi-invariant.  phi-totally-real: the plane is m-orthogonal to its
    phi-image (meaningful only from dimension 5 up).  The second value
    reports m-orthogonality of the plane to xi, which selects the right
    sectional-curvature specialization for totally-real planes.
    """
    plane.check_nondegenerate(m, eps)
    x, y = plane.x, plane.y
    phi = s.phi_m
    span = [x, y]
    ortho_to_xi = scalars.is_zero(
        np.asarray(s.eta_v @ x), eps, x
    ) and scalars.is_zero(np.asarray(s.eta_v @ y), eps, y)
    if _in_span(span, s.xi_v, eps):
        return XI_SECTION, ortho_to_xi
    if _in_span(span, phi @ x, eps) and _in_span(span, phi @ y, eps):
        return HOLOMORPHIC, ortho_to_xi
    pairs = [(x, x), (x, y), (y, y)]
    if all(
        scalars.is_zero(np.asarray(np.einsum("ij,i,j->", m.matrix, u, phi @ v)), eps, m.matrix)
        for u, v in pairs
    ):
        if s.dim < 5:
            raise DegeneratePlaneError(
                "totally-real planes require dimension at least 5"
            )
        return TOTALLY_REAL, ortho_to_xi
    return GENERIC, ortho_to_xi


def sectional(r04: Tensor, m: Metric, plane: SectionPlane, eps: float = scalars.DEFAULT_EPS):
    """k(plane) = R(x,y,y,x) / pi_1(x,y,y,x)."""
    den = plane.check_nondegenerate(m, eps)
    num = np.einsum("ijkl,i,j,k,l->", r04.data, plane.x, plane.y, plane.y, plane.x)
    return num / den


def svk_sectional_formula(
    plane: SectionPlane,
    r04_base: Tensor,
    shape: ShapeData,
    s: ACBStructure,
    m: Metric,
    eps: float = scalars.DEFAULT_EPS,
):
    """k^D through the base curvature:

    k^D = k + [pi_1(S x, S y, y, x) - eta(x) R(x,y,y,xi) - eta(y) R(x,y,xi,x)]
              / pi_1(x,y,y,x).
    """
    den = plane.check_nondegenerate(m, eps)
    x, y = plane.x, plane.y
    sx = shape.operator.data @ x
    sy = shape.operator.data @ y
    rd = r04_base.data
    corr = (
        pi1(m, sx, sy, y, x)
        - (s.eta_v @ x) * np.einsum("ijkl,i,j,k,l->", rd, x, y, y, s.xi_v)
        - (s.eta_v @ y) * np.einsum("ijkl,i,j,k,l->", rd, x, y, s.xi_v, x)
    )
    return sectional(r04_base, m, plane, eps) + corr / den
