from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from bcontact import scalars, zoo
from bcontact.curvature import (
    DegeneratePlaneError,
    GENERIC,
    HOLOMORPHIC,
    SectionPlane,
    TOTALLY_REAL,
    XI_SECTION,
    curvature_reeb_identity,
    ricci_xi_formula,
    section_type,
    sectional,
    svk_curvature_formula,
    svk_ricci_formula,
    svk_scalar_formula,
    svk_sectional_formula,
)
from bcontact.liegroup import basis_vector
from bcontact.scalars import RATIONAL

from support import workspace

ALL_NAMES = zoo.names()


def test_flat_model_everything_vanishes():
    ws = workspace("abelian3")
    for view in (ws.g, ws.gt):
        assert scalars.residual(view.curv.r04.data) == 0.0
        assert scalars.residual(view.curv.r04_svk.data) == 0.0
        assert view.curv.tau == view.curv.tau_svk == 0
        assert view.rho_xi_xi == 0


def test_svk_curvature_relation_direct_vs_formula():
    for name in ALL_NAMES:
        ws = workspace(name)
        for view in (ws.g, ws.gt):
            formula = svk_curvature_formula(ws.s, view.curv.r04, view.shape, view.metric)
            assert np.array_equal(view.curv.r04_svk.data, formula.data), name


def test_svk_curvature_on_parallel_entry_is_projected_base():
    # with a vanishing shape operator the relation collapses to the
    # double-phi projection of the base curvature, checked over all quadruples
    ws = workspace("nil5-u1")
    r, rd = ws.g.curv.r04.data, ws.g.curv.r04_svk.data
    phi2 = ws.s.phi2
    dim = ws.s.dim
    for i, j, k, l in product(range(dim), repeat=4):
        pk = phi2[:, k]
        pl = phi2[:, l]
        expected = sum(
            r[i, j, a, b] * pk[a] * pl[b] for a in range(dim) for b in range(dim)
        )
        assert rd[i, j, k, l] == expected


def test_svk_ricci_and_scalar_relations():
    for name in ALL_NAMES:
        ws = workspace(name)
        for view in (ws.g, ws.gt):
            rho_formula = svk_ricci_formula(
                ws.s, view.curv.r04, view.curv.rho, view.shape, view.metric
            )
            assert np.array_equal(view.curv.rho_svk.data, rho_formula.data), name
            tau_formula = svk_scalar_formula(view.curv.tau, view.rho_xi_xi, view.shape)
            assert view.curv.tau_svk == tau_formula, name


def test_ricci_reeb_formula():
    for name in ALL_NAMES:
        ws = workspace(name)
        for view in (ws.g, ws.gt):
            direct, via_shape = ws.ricci_xi_both_routes(view)
            assert direct == via_shape, name


def test_curvature_reeb_identity_over_basis_pairs():
    for name in ("solv3-a", "solv3-f11", "solv7-u2"):
        ws = workspace(name)
        res = curvature_reeb_identity(ws.s, ws.g.conn, ws.g.shape)
        assert scalars.residual(res) == 0.0, name


def test_section_types_on_dim5_entry():
    ws = workspace("dim5-tr")
    e0 = basis_vector(0, 5, RATIONAL)
    e1 = basis_vector(1, 5, RATIONAL)
    e2 = basis_vector(2, 5, RATIONAL)
    kind, _ = section_type(SectionPlane(e0, ws.s.xi_v), ws.s, ws.s.metric)
    assert kind == XI_SECTION
    kind, _ = section_type(SectionPlane(e0, e2), ws.s, ws.s.metric)
    assert kind == HOLOMORPHIC
    kind, ortho = section_type(SectionPlane(e0, e1), ws.s, ws.s.metric)
    assert kind == TOTALLY_REAL and ortho
    # a slanted plane: non-degenerate, not phi-invariant, pairs with its
    # phi-image, contains no Reeb direction
    mixed = SectionPlane(e0 * Fraction(2) + e2, e1)
    kind, _ = section_type(mixed, ws.s, ws.s.metric)
    assert kind == GENERIC
    # totally-real but not orthogonal to the Reeb vector
    tilted = SectionPlane(e0 + ws.s.xi_v, e1)
    kind, ortho = section_type(tilted, ws.s, ws.s.metric)
    assert kind == TOTALLY_REAL and not ortho


def test_recorded_planes_verify():
    for name in ALL_NAMES:
        entry = zoo.builtin(name)
        ws = workspace(name)
        for kind, x, y in entry.planes:
            plane = SectionPlane(
                scalars.array(x, RATIONAL), scalars.array(y, RATIONAL)
            )
            derived, _ = section_type(plane, ws.s, ws.s.metric)
            assert derived == kind, (name, kind)


def test_totally_real_rejected_in_dim3():
    ws = workspace("solv3-a")
    # in dimension 3 no horizontal 2-plane can be orthogonal to its phi-image;
    # the classifier never reports the totally-real type there
    e0, e1 = basis_vector(0, 3, RATIONAL), basis_vector(1, 3, RATIONAL)
    kind, _ = section_type(SectionPlane(e0, e1), ws.s, ws.s.metric)
    assert kind != TOTALLY_REAL


def test_degenerate_plane_raises():
    ws = workspace("dim5-tr")
    e0 = basis_vector(0, 5, RATIONAL)
    e1 = basis_vector(1, 5, RATIONAL)
    # the (e0,e1)-plane is degenerate for the associated metric of this entry
    with pytest.raises(DegeneratePlaneError):
        sectional(ws.gt.curv.r04, ws.s.assoc, SectionPlane(e0, e1))
    # and a rank-deficient pair is degenerate for any metric
    with pytest.raises(DegeneratePlaneError):
        sectional(ws.g.curv.r04, ws.s.metric, SectionPlane(e0, e0))


def test_reeb_sections_flat_for_svk():
    for name in ALL_NAMES:
        ws = workspace(name)
        for view in (ws.g, ws.gt):
            for i in range(ws.s.dim):
                e = basis_vector(i, ws.s.dim, RATIONAL)
                h = e - (ws.s.eta_v @ e) * ws.s.xi_v
                if scalars.residual(h) == 0.0:
                    continue
                for x in (h, h + ws.s.phi_m @ h):
                    plane = SectionPlane(x, ws.s.xi_v)
                    try:
                        k = sectional(view.curv.r04_svk, view.metric, plane)
                    except DegeneratePlaneError:
                        continue
                    assert k == 0, name


def test_sectional_formula_on_seeded_planes():
    rng = np.random.default_rng(11)
    for name in ("solv3-a", "dim5-tr"):
        ws = workspace(name)
        checked = 0
        while checked < 20:
            x = scalars.array(rng.integers(-3, 4, size=ws.s.dim).tolist(), RATIONAL)
            y = scalars.array(rng.integers(-3, 4, size=ws.s.dim).tolist(), RATIONAL)
            plane = SectionPlane(x, y)
            try:
                direct = sectional(ws.g.curv.r04_svk, ws.s.metric, plane)
                formula = svk_sectional_formula(
                    plane, ws.g.curv.r04, ws.g.shape, ws.s, ws.s.metric
                )
            except DegeneratePlaneError:
                continue
            assert direct == formula
            checked += 1


def test_sectional_holomorphic_correction():
    # k_svk = k + pi1(Sx, Sy, y, x) / pi1(x, y, y, x) on a phi-invariant plane
    from bcontact.hv import pi1

    ws = workspace("dim5-tr")
    e0 = basis_vector(0, 5, RATIONAL)
    plane = SectionPlane(e0, ws.s.phi_m @ e0)
    sx = ws.g.shape.operator.data @ plane.x
    sy = ws.g.shape.operator.data @ plane.y
    corr = pi1(ws.s.metric, sx, sy, plane.y, plane.x) / plane.denominator(ws.s.metric)
    k_base = sectional(ws.g.curv.r04, ws.s.metric, plane)
    k_svk = sectional(ws.g.curv.r04_svk, ws.s.metric, plane)
    assert k_svk == k_base + corr
    assert corr != 0  # the correction genuinely matters on this entry


def test_sectional_totally_real_correction():
    from bcontact.hv import pi1

    ws = workspace("dim5-tr")
    e0, e1 = basis_vector(0, 5, RATIONAL), basis_vector(1, 5, RATIONAL)
    plane = SectionPlane(e0, e1)
    kind, ortho = section_type(plane, ws.s, ws.s.metric)
    assert kind == TOTALLY_REAL and ortho
    sx = ws.g.shape.operator.data @ plane.x
    sy = ws.g.shape.operator.data @ plane.y
    corr = pi1(ws.s.metric, sx, sy, plane.y, plane.x) / plane.denominator(ws.s.metric)
    assert sectional(ws.g.curv.r04_svk, ws.s.metric, plane) == sectional(
        ws.g.curv.r04, ws.s.metric, plane
    ) + corr


def test_sectional_invariant_under_basis_change():
    ws = workspace("solv3-f4")
    e0 = basis_vector(0, 3, RATIONAL)
    e1 = basis_vector(1, 3, RATIONAL)
    plane = SectionPlane(e0, e1)
    base = sectional(ws.g.curv.r04_svk, ws.s.metric, plane)
    rng = np.random.default_rng(23)
    tried = 0
    while tried < 10:
        a, b, c, d = (int(v) for v in rng.integers(-4, 5, size=4))
        if a * d - b * c == 0:
            continue
        x2 = e0 * Fraction(a) + e1 * Fraction(b)
        y2 = e0 * Fraction(c) + e1 * Fraction(d)
        assert sectional(ws.g.curv.r04_svk, ws.s.metric, SectionPlane(x2, y2)) == base
        tried += 1


def test_ricci_xi_formula_pieces_nonzero():
    # the identity is only interesting when the pieces are individually nonzero
    ws = workspace("solv3-f11")
    val = ricci_xi_formula(ws.s, ws.g.conn, ws.g.shape, ws.s.metric)
    assert val == ws.g.rho_xi_xi
    assert scalars.residual(ws.g.shape.operator.data) > 0
