"""Shape operators and the horizontal/vertical split of potential and torsion.

The splitting of the tangent bundle into ker(eta) and span(xi) turns the
potential Q and torsion T of a Schouten-van Kampen connection into four
components, each expressible through the shape operator S(x) = -nabla_x xi.
The wedge convention used throughout is

    (alpha ^ B)(x, y) = alpha(x) B(y) - alpha(y) B(x)

for a 1-form alpha and a vector-valued B; it is validated by the
cross-assertions in the check suite rather than assumed.  Self-adjointness of
operators is always tested through the bilinear form g(S(x), y), never via a
matrix transpose, because the metrics are indefinite.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import scalars
from .liegroup import Connection, covariant_derivative, d_eta, lie_derivative_metric
from .structure import ACBStructure
from .tensor import Metric, Tensor, alt2


@dataclass(frozen=True)
class ShapeData:
    """Shape operator of one metric of the pair: S as a (1,1) tensor
    (S(xi) = -nabla_xi xi included) and its bilinear form S<>(x,y) = m(S(x),y)."""

    operator: Tensor  # (1,1)
    diamond: Tensor  # (0,2)

    @property
    def trace(self):
        return np.trace(self.operator.data)


def shape_operator(s: ACBStructure, conn: Connection, m: Metric) -> ShapeData:
    op = -conn.nabla_of_constant(s.xi_v)  # [k, i] = component k of S(e_i)
    diamond = np.einsum("ki,kj->ij", op, m.matrix)
    return ShapeData(Tensor(1, 1, op), Tensor(0, 2, diamond))


def pi1(m: Metric, x, y, z, w):
    """pi_1(x,y,z,w) = m(y,z) m(x,w) - m(x,z) m(y,w)."""
    g = m.matrix
    return np.einsum("ij,i,j->", g, y, z) * np.einsum("ij,i,j->", g, x, w) - np.einsum(
        "ij,i,j->", g, x, z
    ) * np.einsum("ij,i,j->", g, y, w)


def pi1_tensor(m: Metric) -> Tensor:
    """pi_1 as a (0,4) tensor over the basis."""
    g = m.matrix
    data = np.einsum("jk,il->ijkl", g, g) - np.einsum("ik,jl->ijkl", g, g)
    return Tensor(0, 4, data)


@dataclass(frozen=True)
class HVComponents:
    """Horizontal/vertical components of a potential and torsion, all (1,2)."""

    q_h: Tensor
    q_v: Tensor
    t_h: Tensor
    t_v: Tensor


def hv_split(s: ACBStructure, q: Tensor, t: Tensor) -> HVComponents:
    """Split the output slot of Q and T into horizontal and vertical parts."""
    pv = np.einsum("k,l->kl", s.xi_v, s.eta_v)

    def split(x: Tensor):
        v = np.einsum("kl,lij->kij", pv, x.data)
        return Tensor(1, 2, x.data - v), Tensor(1, 2, v)

    qh, qv = split(q)
    th, tv = split(t)
    return HVComponents(qh, qv, th, tv)


def wedge_form_operator(alpha: np.ndarray, b: np.ndarray) -> np.ndarray:
    """(alpha ^ B)(x,y) = alpha(x) B(y) - alpha(y) B(x); b indexed [k, arg]."""
    return np.einsum("i,kj->kij", alpha, b) - np.einsum("j,ki->kij", alpha, b)


def reference_components(
    s: ACBStructure, conn: Connection, shape: ShapeData
) -> tuple[HVComponents, HVComponents]:
    """The two sets of closed forms the split components must reproduce:

    through the connection:  Q^h = -(nabla xi) (x) eta,  Q^v = (nabla eta) (x) xi,
                             T^h = eta ^ (nabla xi),     T^v = d eta (x) xi;
    through the shape data:  Q^h = S (x) eta,            Q^v = -S<> (x) xi,
                             T^h = -eta ^ S,             T^v = -2 Alt(S<>) (x) xi.
    """
    nxi = conn.nabla_of_constant(s.xi_v)
    neta = covariant_derivative(conn, s.eta).data
    de = d_eta(s.algebra, s.eta).data
    eta, xi = s.eta_v, s.xi_v

    by_conn = HVComponents(
        Tensor(1, 2, -np.einsum("ki,j->kij", nxi, eta)),
        Tensor(1, 2, np.einsum("ij,k->kij", neta, xi)),
        Tensor(1, 2, wedge_form_operator(eta, nxi)),
        Tensor(1, 2, np.einsum("ij,k->kij", de, xi)),
    )
    sop, sd = shape.operator.data, shape.diamond.data
    two = scalars.one(s.mode) * 2
    by_shape = HVComponents(
        Tensor(1, 2, np.einsum("ki,j->kij", sop, eta)),
        Tensor(1, 2, -np.einsum("ij,k->kij", sd, xi)),
        Tensor(1, 2, -wedge_form_operator(eta, sop)),
        Tensor(1, 2, -np.einsum("ij,k->kij", alt2(shape.diamond).data * two, xi)),
    )
    return by_conn, by_shape


def potential_pi1_form(s: ACBStructure, shape: ShapeData, m: Metric) -> Tensor:
    """Q(x,y,z) = -pi_1(xi, S(x), y, z) as a (0,3) tensor."""
    g, xi = m.matrix, s.xi_v
    sop = shape.operator.data
    # pi_1(xi, S(x), y, z) = m(S(x),y) m(xi,z) - m(xi,y) m(S(x),z)
    eta_like = np.einsum("ij,i->j", g, xi)
    sd = shape.diamond.data
    data = -(
        np.einsum("xy,z->xyz", sd, eta_like) - np.einsum("y,xz->xyz", eta_like, sd)
    )
    return Tensor(0, 3, data)


def torsion_pi1_form(s: ACBStructure, shape: ShapeData, m: Metric) -> Tensor:
    """T(x,y,z) = -pi_1(xi,S(x),y,z) + pi_1(xi,S(y),x,z)."""
    q = potential_pi1_form(s, shape, m).data
    return Tensor(0, 3, q - np.einsum("xyz->yxz", q))


# ---------------------------------------------------------------------------
# equivalence chains: each is a family of predicates that provably agree
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChainReport:
    name: str
    predicates: dict[str, bool]

    @property
    def consistent(self) -> bool:
        return len(set(self.predicates.values())) <= 1

    @property
    def value(self) -> bool:
        # meaningful only when consistent
        return next(iter(self.predicates.values()))


def equivalence_chains(
    s: ACBStructure,
    conn: Connection,
    svk_conn: Connection,
    shape: ShapeData,
    q: Tensor,
    t: Tensor,
    m: Metric,
    eps: float = scalars.DEFAULT_EPS,
) -> tuple[ChainReport, ChainReport, ChainReport]:
    """The three predicate chains for one metric of the pair: within each
    chain all predicates must evaluate to the same boolean on any model."""
    neta = covariant_derivative(conn, s.eta).data
    de = d_eta(s.algebra, s.eta).data
    lg = lie_derivative_metric(conn, s.xi_v, m).data
    comps = hv_split(s, q, t)
    qv = comps.q_v.data
    sd = shape.diamond.data
    sop = shape.operator.data
    g = m.matrix
    adj = np.einsum("ki,kj->ij", sop, g)  # m(S(x), y)
    adj_t = np.einsum("kj,ki->ij", sop, g)  # m(x, S(y))

    def z(a, *ctx):
        return scalars.is_zero(np.asarray(a), eps, *(c for c in ctx))

    ctx = (conn.gamma.data,)
    chain_sym = ChainReport(
        "symmetric",
        {
            "nabla-eta symmetric": z(neta - neta.T, *ctx),
            "eta closed": z(de, *ctx),
            "Q-vertical symmetric": z(qv - np.einsum("kij->kji", qv), *ctx),
            "T-vertical vanishes": z(comps.t_v.data, *ctx),
            "shape self-adjoint": z(adj - adj_t, *ctx),
            "shape form symmetric": z(sd - sd.T, *ctx),
        },
    )
    chain_skew = ChainReport(
        "skew",
        {
            "nabla-eta skew": z(neta + neta.T, *ctx),
            "reeb killing": z(lg, *ctx),
            "Q-vertical skew": z(qv + np.einsum("kij->kji", qv), *ctx),
            "shape anti-self-adjoint": z(adj + adj_t, *ctx),
            "shape form skew": z(sd + sd.T, *ctx),
        },
    )
    chain_zero = ChainReport(
        "vanishing",
        {
            "nabla-eta zero": z(neta, *ctx),
            "eta closed and reeb killing": z(de, *ctx) and z(lg, *ctx),
            "nabla-xi zero": z(conn.nabla_of_constant(s.xi_v), *ctx),
            "shape zero": z(sop, *ctx),
            "shape form zero": z(sd, *ctx),
            "svk equals levi-civita": z(svk_conn.gamma.data - conn.gamma.data, *ctx),
        },
    )
    return chain_sym, chain_skew, chain_zero
