"""Left-invariant homogeneous models.

A Lie algebra with structure constants carries every tensor field of the
model as an array of constant components; covariant derivatives then reduce
to finite algebra in the connection coefficients, which is what makes exact
verification possible at desk scale.
"""
from __future__ import annotations

from dataclasses import dataclass
import numpy as np

from . import scalars
from .scalars import DEFAULT_EPS
from .tensor import Metric, Tensor


class StructureError(ValueError):
    """Invalid Lie algebra data (antisymmetry or Jacobi failure)."""


@dataclass(frozen=True)
class LieAlgebra:
    """Lie algebra given by structure constants [e_i, e_j] = c^k_{ij} e_k."""

    c: Tensor  # (1,2), data[k,i,j]

    def __post_init__(self):
        if (self.c.up, self.c.down) != (1, 2):
            raise StructureError("structure constants must be a (1,2) tensor")
        eps = DEFAULT_EPS
        if not scalars.is_zero(self.c.data + np.swapaxes(self.c.data, 1, 2), eps):
            raise StructureError("structure constants are not antisymmetric")
        jac = self._jacobiator()
        if not scalars.is_zero(jac, eps, self.c.data):
            worst = np.unravel_index(np.argmax(np.abs(scalars.to_float(jac))), jac.shape)
            raise StructureError(f"Jacobi identity fails, worst component at {worst}")

    @property
    def dim(self) -> int:
        return self.c.dim

    @property
    def mode(self) -> str:
        return self.c.mode

    def _jacobiator(self) -> np.ndarray:
        c = self.c.data
        # [[e_i,e_j],e_k] = c^m_{ij} c^l_{mk}
        t = np.einsum("mij,lmk->lijk", c, c)
        return t + np.einsum("lijk->ljki", t) + np.einsum("lijk->lkij", t)

    def bracket(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if x.shape != (self.dim,) or y.shape != (self.dim,):
            raise ValueError("bracket arguments must be vectors of the model dimension")
        return np.einsum("kij,i,j->k", self.c.data, x, y)


@dataclass(frozen=True)
class Connection:
    """Affine connection nabla_{e_i} e_j = gamma^k_{ij} e_k on a fixed model."""

    gamma: Tensor  # (1,2), data[k,i,j]

    @property
    def dim(self) -> int:
        return self.gamma.dim

    @property
    def mode(self) -> str:
        return self.gamma.mode

    def nabla_vec(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """nabla_x y for constant-component vector fields x, y."""
        return np.einsum("kij,i,j->k", self.gamma.data, x, y)

    def nabla_of_constant(self, v: np.ndarray) -> np.ndarray:
        """(nabla v)[k, i] = component k of nabla_{e_i} v."""
        return np.einsum("kim,m->ki", self.gamma.data, v)

    def torsion(self, algebra: LieAlgebra) -> Tensor:
        """T(x,y) = nabla_x y - nabla_y x - [x,y], as a (1,2) tensor."""
        g = self.gamma.data
        return Tensor(1, 2, g - np.swapaxes(g, 1, 2) - algebra.c.data)


def levi_civita(algebra: LieAlgebra, m: Metric, eps: float = DEFAULT_EPS) -> Connection:
    """Levi-Civita connection of a left-invariant metric via the Koszul formula

        2 m(nabla_x y, z) = m([x,y],z) - m([y,z],x) + m([z,x],y),

    the only surviving terms for constant-component fields.  The result is
    asserted torsion-free and metric-compatible before being returned.
    """
    c, g = algebra.c.data, m.matrix
    rhs = (
        np.einsum("lij,lk->ijk", c, g)
        - np.einsum("ljk,li->ijk", c, g)
        + np.einsum("lki,lj->ijk", c, g)
    )
    gamma = np.einsum("ijk,km->mij", rhs, m.inv) * scalars.half(m.mode)
    conn = Connection(Tensor(1, 2, gamma))
    tor = conn.torsion(algebra)
    if not scalars.is_zero(tor.data, eps, gamma):
        raise ArithmeticError("Koszul connection failed the torsion-free check")
    dg = covariant_derivative(conn, m.tensor)
    if not scalars.is_zero(dg.data, eps, gamma, g):
        raise ArithmeticError("Koszul connection failed metric compatibility")
    return conn


def covariant_derivative(conn: Connection, t: Tensor) -> Tensor:
    """Covariant derivative of a constant-component tensor field.

    The direction slot is prepended to the covariant block, so a (r,s) input
    yields valence (r, s+1) with (nabla t)(x, y_1, ..., y_s) = (nabla_x t)(y_1, ...).
    Only connection terms survive since all components are constant.
    """
    if t.dim and t.dim != conn.dim:
        raise ValueError("tensor and connection dimensions differ")
    gamma = conn.gamma.data
    dim = conn.dim
    if t.rank == 0:
        return Tensor(0, 1, scalars.zeros((dim,), conn.mode))
    # result axes: up-axes of t, then direction axis, then down-axes of t
    out = scalars.zeros((dim,) * (t.rank + 1), conn.mode)
    letters = "abcdefgh"
    ups = letters[: t.up]
    downs = letters[t.up : t.rank]
    src = ups + downs
    for a in range(t.up):
        repl = src.replace(src[a], "m")
        out = out + np.einsum(f"{src[a]}xm,{repl}->{ups}x{downs}", gamma, t.data)
    for b in range(t.down):
        pos = t.up + b
        repl = src.replace(src[pos], "m")
        out = out - np.einsum(f"mx{src[pos]},{repl}->{ups}x{downs}", gamma, t.data)
    return Tensor(t.up, t.down + 1, out)


def curvature(algebra: LieAlgebra, conn: Connection) -> Tensor:
    """Curvature R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_{[x,y]} z
    as a (1,3) tensor with data[l, i, j, k] = component l of R(e_i, e_j) e_k."""
    if algebra.dim != conn.dim:
        raise ValueError("algebra and connection dimensions differ")
    g, c = conn.gamma.data, algebra.c.data
    r = (
        np.einsum("mjk,lim->lijk", g, g)
        - np.einsum("mik,ljm->lijk", g, g)
        - np.einsum("mij,lmk->lijk", c, g)
    )
    return Tensor(1, 3, r)


def d_eta(algebra: LieAlgebra, eta: Tensor) -> Tensor:
    """Exterior derivative of a left-invariant 1-form: d eta (x,y) = -eta([x,y])."""
    if (eta.up, eta.down) != (0, 1):
        raise ValueError("d_eta expects a (0,1) tensor")
    return Tensor(0, 2, -np.einsum("kij,k->ij", algebra.c.data, eta.data))


def lie_derivative_metric(conn: Connection, xi: np.ndarray, m: Metric) -> Tensor:
    """(L_xi g)(x,y) = g(nabla_x xi, y) + g(nabla_y xi, x) for torsion-free nabla."""
    nxi = conn.nabla_of_constant(xi)  # [k, i]
    low = np.einsum("ki,kj->ij", nxi, m.matrix)
    return Tensor(0, 2, low + low.T)


def basis_vector(i: int, dim: int, mode: str) -> np.ndarray:
    v = scalars.zeros((dim,), mode)
    v[i] = scalars.one(mode)
    return v
