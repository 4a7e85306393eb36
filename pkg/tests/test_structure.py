from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from bcontact import scalars, zoo
from bcontact.liegroup import basis_vector
from bcontact.scalars import RATIONAL
from bcontact.structure import (
    ACBStructure,
    associated_of,
    fundamental_from_potential,
    validate_structure,
)
from bcontact.tensor import Metric, Tensor

from support import workspace

ALL_NAMES = zoo.names()


def test_validate_canonical_flat_structure():
    assert workspace("abelian3").validation.passed


def test_validate_flags_flipped_reeb_norm():
    entry = zoo.builtin("abelian3")
    g_bad = [list(r) for r in entry.g]
    g_bad[2][2] = -1
    s = ACBStructure(
        workspace("abelian3").algebra,
        Tensor(1, 1, scalars.array(entry.phi, RATIONAL)),
        Tensor(1, 0, scalars.array(entry.xi, RATIONAL)),
        Tensor(0, 1, scalars.array(entry.eta, RATIONAL)),
        Metric.from_matrix(scalars.array(g_bad, RATIONAL)),
    )
    report = validate_structure(s)
    assert not report.passed
    failed = {c.name for c in report.failures()}
    assert any("signature" in f for f in failed)
    assert "g(xi, xi) = 1" in failed


def test_validate_random_structure_seed7():
    entry = zoo.random_structure(7, 1)
    assert validate_structure(entry.structure(RATIONAL)).passed


def test_associated_metric_flat_model_matrix():
    # hand-substitution of g~(x,y) = g(x, phi y) + eta(x) eta(y) on all pairs
    ws = workspace("abelian3")
    expected = scalars.array([[0, -1, 0], [-1, 0, 0], [0, 0, 1]], RATIONAL)
    assert np.array_equal(ws.s.assoc.matrix, expected)
    assert ws.s.assoc.inner(ws.s.xi_v, ws.s.xi_v) == 1


def test_associated_metric_is_b_metric_everywhere():
    for name in ALL_NAMES:
        ws = workspace(name)
        gt, phi, eta = ws.s.assoc.matrix, ws.s.phi_m, ws.s.eta_v
        res = (
            np.einsum("mi,rj,mr->ij", phi, phi, gt)
            + gt
            - np.einsum("i,j->ij", eta, eta)
        )
        assert scalars.residual(res) == 0.0
        assert ws.s.assoc.signature == (ws.s.n + 1, ws.s.n)


def test_fundamental_tensor_flat_model_vanishes():
    ws = workspace("abelian3")
    assert scalars.residual(ws.g.fundamental.data) == 0.0
    assert ws.g.classification["F0"]


def test_fundamental_symmetric_in_last_slots():
    for name in ALL_NAMES:
        f = workspace(name).g.fundamental.data
        assert scalars.residual(f - np.einsum("xyz->xzy", f)) == 0.0


def test_fundamental_bruteforce_oracle():
    # independent evaluation over all 27 basis triples:
    # F(x,y,z) = g(nabla_x (phi y) - phi (nabla_x y), z)
    ws = workspace("solv3-a")
    s, conn = ws.s, ws.g.conn
    dim = s.dim
    for i, j, k in product(range(dim), repeat=3):
        ei = basis_vector(i, dim, RATIONAL)
        ej = basis_vector(j, dim, RATIONAL)
        ek = basis_vector(k, dim, RATIONAL)
        nabla_phi_y = conn.nabla_vec(ei, s.phi_m @ ej) - s.phi_m @ conn.nabla_vec(ei, ej)
        assert ws.g.fundamental[i, j, k] == s.metric.inner(nabla_phi_y, ek)


def test_lee_forms_vanish_in_zero_class():
    lee = workspace("abelian3").g.lee
    for form in (lee.theta, lee.theta_star, lee.omega):
        assert scalars.residual(form.data) == 0.0


def test_lee_identity_all_entries():
    # theta*(phi z) + theta(phi^2 z) = 0 for every z, including the entry
    # with nonzero omega and the boundary family
    for name in ALL_NAMES + zoo.boundary_names():
        ws = workspace(name)
        for view in (ws.g, ws.gt):
            lhs = view.lee.theta_star.data @ ws.s.phi_m
            rhs = -(view.lee.theta.data @ ws.s.phi2)
            assert np.array_equal(lhs, rhs), name
            assert view.lee.omega.data @ ws.s.xi_v == 0


def test_divergence_trace_identities():
    # theta(xi) = div*(eta) on the pure-trace entry, both sides evaluated
    # through different contractions
    ws = workspace("solv3-f4")
    div, div_star = ws.div_pair
    assert ws.g.lee.theta_xi(ws.s) == div_star == 2
    assert ws.g.lee.theta_star_xi(ws.s) == div == 0


def test_divergences_vanish_for_commuting_traceless_action():
    ws = workspace("solv5-f6")
    assert ws.div_pair == (0, 0)
    assert ws.g.classification["F6"]


def test_potential_vanishes_iff_zero_class():
    assert scalars.residual(workspace("abelian3").pot.data) == 0.0
    assert scalars.residual(workspace("solv3-a").pot.data) > 0


def test_potential_symmetric_and_trace_free():
    for name in ALL_NAMES:
        ws = workspace(name)
        p = ws.pot03.data
        assert scalars.residual(p - np.einsum("xyz->yxz", p)) == 0.0
        tr = np.einsum("ij,mij,m->", ws.s.metric.inv, p, ws.s.xi_v)
        assert tr == 0


def test_fundamental_reconstruction_round_trip():
    for name in ALL_NAMES:
        ws = workspace(name)
        rebuilt = fundamental_from_potential(ws.s, ws.pot03)
        assert np.array_equal(rebuilt.data, ws.g.fundamental.data)


def test_assoc_fundamental_zero_class():
    ws = workspace("abelian3")
    assert scalars.residual(ws.gt.fundamental.data) == 0.0


def test_classification_expected_flags():
    for name in ALL_NAMES + zoo.boundary_names():
        entry = zoo.builtin(name)
        ws = workspace(name)
        derived = {
            "g": {k for k, v in ws.g.classification.membership.items() if v},
            "gtilde": {k for k, v in ws.gt.classification.membership.items() if v},
        }
        assert derived == {k: set(v) for k, v in entry.expected.items()}, name


def test_classify_pure_trace_entry():
    rep = workspace("solv3-f4").g.classification
    assert rep["F4"] and rep["U2"] and not rep["U1"]


def test_classify_omega_entry_nabla_xi_row():
    # nabla xi = eta (x) phi(omega#) checked componentwise
    ws = workspace("solv3-f11")
    assert ws.g.classification["F11"]
    nxi = ws.g.conn.nabla_of_constant(ws.s.xi_v)
    phi_om = ws.s.phi_m @ ws.g.lee.omega_sharp.data
    assert np.array_equal(nxi, np.einsum("k,i->ki", phi_om, ws.s.eta_v))


def test_nabla_xi_rows_for_members():
    # every class a structure belongs to forces its covariant-derivative row
    for name in ALL_NAMES + zoo.boundary_names():
        ws = workspace(name)
        for view in (ws.g, ws.gt):
            assert all(v == 0.0 for v in view.nabla_xi_residuals.values()), name


def test_second_trace_entry_row():
    # nabla xi + (div(eta)/2n) phi^2 = 0 for the second pure-trace class
    ws = workspace("solv3-a")
    assert ws.g.classification["F5"]
    div = ws.div_pair[0]
    nxi = ws.g.conn.nabla_of_constant(ws.s.xi_v)
    res = nxi + ws.s.phi2 * (Fraction(div) / (2 * ws.s.n))
    assert scalars.residual(res) == 0.0


def test_symmetry_row_of_boundary_entry():
    # m(nabla_x xi, y) = m(nabla_y xi, x) = m(nabla_phi(x) xi, phi y)
    ws = workspace("x-solv3-f9")
    assert ws.g.classification["F9"]
    lam = np.einsum(
        "ki,kj->ij", ws.g.conn.nabla_of_constant(ws.s.xi_v), ws.s.metric.matrix
    )
    lam_phiphi = np.einsum("ab,ai,bj->ij", lam, ws.s.phi_m, ws.s.phi_m)
    assert np.array_equal(lam, lam.T)
    assert np.array_equal(lam, lam_phiphi)


def test_skew_row_of_symmetric_one_sided_entry():
    # m(nabla_x xi, y) = -m(nabla_y xi, x) = m(nabla_phi(x) xi, phi y)
    ws = workspace("x-mix5-f8")
    assert ws.g.classification["F8"]
    lam = np.einsum(
        "ki,kj->ij", ws.g.conn.nabla_of_constant(ws.s.xi_v), ws.s.metric.matrix
    )
    lam_phiphi = np.einsum("ab,ai,bj->ij", lam, ws.s.phi_m, ws.s.phi_m)
    assert np.array_equal(lam, -lam.T)
    assert np.array_equal(lam, lam_phiphi)
    assert scalars.residual(lam) > 0


def test_first_class_entry_lee_form():
    # the pure first-class entry has a nonzero first Lee form that vanishes
    # on the Reeb vector
    ws = workspace("solv5-f1")
    assert ws.g.classification["F1"]
    assert scalars.residual(ws.g.lee.theta.data) > 0
    assert ws.g.lee.theta_xi(ws.s) == 0


def test_double_associated_metric():
    # assoc(assoc(g)) = -g + 2 eta (x) eta
    ws = workspace("solv3-f4")
    twice = associated_of(ws.s.assoc, ws.s).matrix
    expected = -ws.s.metric.matrix + 2 * np.einsum(
        "i,j->ij", ws.s.eta_v, ws.s.eta_v
    )
    assert np.array_equal(twice, expected)


def test_invalid_dimension_rejected():
    c = scalars.zeros((2, 2, 2), RATIONAL)
    from bcontact.liegroup import LieAlgebra

    alg = LieAlgebra(Tensor(1, 2, c))
    with pytest.raises(ValueError, match="odd"):
        ACBStructure(
            alg,
            Tensor(1, 1, scalars.zeros((2, 2), RATIONAL)),
            Tensor(1, 0, scalars.zeros((2,), RATIONAL)),
            Tensor(0, 1, scalars.zeros((2,), RATIONAL)),
            Metric.from_matrix(scalars.array([[1, 0], [0, -1]], RATIONAL)),
        )
