"""One-stop computation of every derived quantity for a model.

A Workspace takes the raw structure data, builds both metrics of the pair and
everything downstream of them (connections, fundamental tensors, Lee forms,
potential, Schouten-van Kampen pair, shape operators, curvature), and keeps
the results around for the check suite, the classifier and the CLI.  All
fields are computed once, eagerly, along the *primary* route; the independent
second routes live in the check suite.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import scalars, svk as svk_mod
from .curvature import (
    CurvatureData,
    curvature_data,
    ricci_xi_formula,
    svk_curvature_formula,
)
from .hv import ShapeData, shape_operator
from .liegroup import Connection, d_eta, levi_civita
from .scalars import DEFAULT_EPS
from .structure import (
    ACBStructure,
    ClassificationReport,
    LeeForms,
    assoc_fundamental,
    associated_of,
    classify,
    connection_potential,
    divergences,
    fundamental_tensor,
    lee_forms,
    nabla_xi_class_residuals,
    phi_potential,
    potential_lowered,
    validate_structure,
)
from .tensor import Metric, Tensor, lower_out


@dataclass
class MetricView:
    """Everything attached to one metric of the pair."""

    role: str
    metric: Metric
    conn: Connection
    fundamental: Tensor
    lee: LeeForms
    svk: Connection
    potential: Tensor  # (1,2) Q of the SvK connection
    torsion: Tensor  # (1,2) T of the SvK connection
    potential03: Tensor
    torsion03: Tensor
    svk_phi: Tensor  # (1,2) covariant derivative of phi under the SvK connection
    shape: ShapeData
    curv: CurvatureData
    classification: Optional[ClassificationReport] = None
    nabla_xi_residuals: dict = field(default_factory=dict)

    @property
    def rho_xi_xi(self):
        xi = self._xi
        return np.einsum("yz,y,z->", self.curv.rho.data, xi, xi)

    _xi: np.ndarray = None  # set by the workspace


class Workspace:
    """Derived data for one structure, in one scalar mode."""

    def __init__(self, s: ACBStructure, eps: float = DEFAULT_EPS):
        self.s = s
        self.eps = eps
        self.algebra = s.algebra
        self.mode = s.mode

        self.validation = validate_structure(s, eps)
        self.d_eta = d_eta(s.algebra, s.eta)

        self.g = self._build_view("g", s.metric)
        self.gt = self._build_view("gtilde", s.assoc)

        # potential of the second Levi-Civita connection w.r.t. the first,
        # cross-asserted against its closed form in the fundamental tensor
        self.pot, self.pot03 = phi_potential(
            s, self.g.conn, self.gt.conn, self.g.fundamental, self.g.lee, eps
        )
        assoc_fundamental(s, self.gt.conn, self.g.fundamental, eps)
        via_pot = svk_mod.svk_pair_from_potential(self.g.svk, self.pot, s)
        if not scalars.arrays_equal(
            via_pot.gamma.data, self.gt.svk.gamma.data, eps
        ):
            raise ArithmeticError(
                "the two routes to the second projected connection disagree"
            )
        # potential of the pair seen from the associated side, lowered by g~
        self.pot03_assoc = potential_lowered(
            connection_potential(self.gt.conn, self.g.conn), s.assoc
        )

        # the associated metric of g~ itself (needed for the tilde-side
        # starred divergence; it is -g + 2 eta (x) eta, not g again)
        self.assoc_of_assoc = associated_of(s.assoc, s)
        self.div_pair = divergences(s, self.g.conn, s.metric, s.assoc, self.g.lee, eps)
        self.div_pair_assoc = divergences(
            s, self.gt.conn, s.assoc, self.assoc_of_assoc, self.gt.lee, eps
        )

        self.g.classification = classify(
            s, self.g.fundamental, self.g.lee, s.metric,
            self.g.conn, self.gt.conn, self.pot03, self.div_pair, "g", eps,
        )
        self.gt.classification = classify(
            s, self.gt.fundamental, self.gt.lee, s.assoc,
            self.gt.conn, self.g.conn, self.pot03_assoc, self.div_pair_assoc,
            "gtilde", eps,
        )
        self.g.nabla_xi_residuals = nabla_xi_class_residuals(
            s, self.g.conn, s.metric, self.g.lee, self.div_pair, self.g.classification
        )
        self.gt.nabla_xi_residuals = nabla_xi_class_residuals(
            s, self.gt.conn, s.assoc, self.gt.lee, self.div_pair_assoc,
            self.gt.classification,
        )

    def _build_view(self, role: str, m: Metric) -> MetricView:
        s = self.s
        conn = levi_civita(self.algebra, m, self.eps)
        f = fundamental_tensor(s, conn, m, self.eps)
        lee = lee_forms(s, f, m, self.eps)
        d = svk_mod.svk_connection(conn, s, self.eps)
        q, t = svk_mod.potential_and_torsion(d, conn, s, self.eps)
        shape = shape_operator(s, conn, m)
        curv = curvature_data(s, self.algebra, conn, d, m)
        formula = svk_curvature_formula(s, curv.r04, shape, m)
        if not scalars.arrays_equal(curv.r04_svk.data, formula.data, self.eps):
            raise ArithmeticError(
                "projected-connection curvature disagrees with its closed relation"
            )
        view = MetricView(
            role=role,
            metric=m,
            conn=conn,
            fundamental=f,
            lee=lee,
            svk=d,
            potential=q,
            torsion=t,
            potential03=lower_out(q, m),
            torsion03=lower_out(t, m),
            svk_phi=svk_mod.svk_covariant_phi(d, conn, s, self.eps),
            shape=shape,
            curv=curv,
        )
        view._xi = s.xi_v
        return view

    def view(self, role: str) -> MetricView:
        if role == "g":
            return self.g
        if role in ("gtilde", "g~"):
            return self.gt
        raise ValueError(f"unknown metric role {role!r}")

    def ricci_xi_both_routes(self, view: MetricView):
        direct = view.rho_xi_xi
        formula = ricci_xi_formula(self.s, view.conn, view.shape, view.metric)
        return direct, formula

    def reported_scalars(self) -> dict[str, float]:
        """Every scalar the reports print, as floats (used for backend
        agreement checks and the JSON output)."""
        out = {}
        for view in (self.g, self.gt):
            tag = view.role
            cls = view.classification
            for k, v in cls.scalars.items():
                out[f"{tag}:{k}"] = float(v)
            out[f"{tag}:tau"] = float(view.curv.tau)
            out[f"{tag}:tau_svk"] = float(view.curv.tau_svk)
            out[f"{tag}:rho(xi,xi)"] = float(view.rho_xi_xi)
            out[f"{tag}:tr(shape)"] = float(view.shape.trace)
        return out
