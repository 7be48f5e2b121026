"""Extremal search: the vectorized sweep against a scalar reference,
frozen bound values, certificate plumbing, refinement behavior, and the
conjecture scan."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

import random

from oracles import random_member
from ucv.model import (
    a_closed,
    f_series,
    gamma_closed,
    hankel_values,
    inverse_closed,
    validate,
    zalcman_values,
)
from ucv.search import (
    BoundCertificate,
    CSV_HEADER,
    FUNCTIONAL_NAMES,
    SearchConfig,
    _better,
    _move_directions,
    _optimize_detail,
    _sweep,
    an_functional,
    bound_info,
    certificate_csv_row,
    certificate_to_dict,
    certificates_to_csv,
    closed_form_bound,
    conjecture_scan,
    enumerate_feasible,
    functional_by_name,
    optimize,
    verify_bounds,
)

F = Fraction


# -- scalar reference for the vectorized sweep ------------------------------


def brute_force_sweep(lam, cfg, names):
    """Literal loop over enumerate_feasible with the same float conversion
    the fast path uses; any disagreement at all is a bug."""
    fns = [functional_by_name(n) for n in names]
    best = {(n, d): (-math.inf if d == "max" else math.inf, None) for n in names for d in ("max", "min")}
    for b in enumerate_feasible(lam, cfg):
        bf = tuple(float(x) for x in b)
        for fn in fns:
            v = fn.evaluate(bf) + 0.0
            cur = best[(fn.name, "max")]
            if _better(v, b, cur[0], cur[1], +1):
                best[(fn.name, "max")] = (v, b)
            cur = best[(fn.name, "min")]
            if _better(v, b, cur[0], cur[1], -1):
                best[(fn.name, "min")] = (v, b)
    return best


SWEEP_GRIDS = [
    (F(1), SearchConfig(grid_step=F(1, 10))),
    (F(3, 4), SearchConfig(grid_step=F(1, 7))),
    (F(1, 2), SearchConfig(grid_step=F(1, 9), dims=5)),
    (F(1, 4), SearchConfig(grid_step=F(1, 8), dims=3)),
    (F(1), SearchConfig(grid_step=F(1, 6), dims=2)),
    (F(1, 3), SearchConfig(grid_step=F(1, 5), dims=1)),
]


@pytest.mark.parametrize("lam,cfg", SWEEP_GRIDS, ids=lambda v: str(v))
def test_sweep_matches_brute_force_bit_for_bit(lam, cfg):
    names = list(FUNCTIONAL_NAMES) + ["AN(5)"]
    got = _sweep(lam, cfg, names)
    want = brute_force_sweep(lam, cfg, names)
    for key, (wv, wa) in want.items():
        gv, ga = got[key]
        assert gv == wv, (key, gv, wv)  # exact float equality, no tolerance
        assert ga == wa, (key, ga, wa)


def test_sweep_parallel_merge_identical(monkeypatch):
    lam, cfg = F(1), SearchConfig(grid_step=F(1, 10))
    serial = _sweep(lam, cfg, FUNCTIONAL_NAMES)
    monkeypatch.setenv("UCV_THREADS", "3")
    parallel = _sweep(lam, cfg, FUNCTIONAL_NAMES)
    assert serial == parallel


# -- feasible enumeration ----------------------------------------------------


def test_enumerate_unit_step_dims1():
    pts = list(enumerate_feasible(1, SearchConfig(dims=1, grid_step=F(1))))
    # b1 = 2 alone is rejected: 1 + 2z vanishes at -1/2
    assert pts == [(F(0),) * 4, (F(1), F(0), F(0), F(0))]


def test_enumerate_unit_step_dims2_reaches_corner():
    pts = list(enumerate_feasible(1, SearchConfig(dims=2, grid_step=F(1))))
    assert (F(2), F(1), F(0), F(0)) in pts
    for b in pts:
        validate(1, b)  # every yielded point is a member


def test_enumerate_zero_cap_large_step():
    cfg = SearchConfig(grid_step=F(2), b1_max=F(0))
    assert list(enumerate_feasible(F(1, 2), cfg)) == [(F(0),) * 4]


def test_enumerate_is_lexicographic():
    pts = list(enumerate_feasible(F(1, 2), SearchConfig(grid_step=F(1, 4))))
    assert pts == sorted(pts)


# -- closed-form bound table -------------------------------------------------


def test_closed_form_examples():
    assert closed_form_bound("A4", F(1, 2), "max") == F(45, 8)
    assert closed_form_bound("G2", 1, "max") == F(3, 2)
    assert closed_form_bound("H3INV", F(3, 10), "min") == F(-9, 400)
    assert closed_form_bound("A2", F(1, 3), "max") == F(4, 3)
    assert closed_form_bound("AN(5)", F(1, 2), "max") == F(31, 16)


def test_closed_form_absences():
    assert closed_form_bound("Z24", 1, "min") is None
    assert closed_form_bound("A4C", F(1, 2), "max") is None
    assert closed_form_bound("A4C", 1, "max") == pytest.approx(4 * math.sqrt(6) / 9)
    assert closed_form_bound("A5C", F(1, 2), "max") is None
    assert closed_form_bound("A5C", F(1, 2), "min") is None
    assert closed_form_bound("A5C", 1, "min") == F(-9, 4)
    assert closed_form_bound("AN(6)", 1, "min") is None


def test_closed_form_rejections():
    with pytest.raises(ValueError):
        closed_form_bound("A2", 1, "both")
    with pytest.raises(KeyError):
        closed_form_bound("NOPE", 1, "max")


def test_max_bounds_nondecreasing_in_lambda():
    # every max-side closed form is monotone on a step-0.05 lambda grid
    grid = [F(k, 20) for k in range(1, 21)]
    for name in list(FUNCTIONAL_NAMES) + [f"AN({n})" for n in range(2, 7)]:
        values = [bound_info(name, lam)["max"][0] for lam in grid]
        known = [float(v) for v in values if v is not None]
        assert known == sorted(known), name


def test_functional_lookup():
    assert functional_by_name("H3INV").arity == 4
    assert functional_by_name("AN(4)").name == "AN(4)"
    with pytest.raises(KeyError):
        functional_by_name("B7")
    with pytest.raises(ValueError):
        an_functional(1)
    with pytest.raises(ValueError):
        an_functional(9)
    assert len(FUNCTIONAL_NAMES) == 16


def test_functionals_agree_with_model_closed_forms():
    # the search-side evaluators and the model closed forms are separate
    # code; they must agree exactly on members
    rng = random.Random(23)
    for _ in range(30):
        m = random_member(rng)
        b = m.b
        a2, a3, a4, a5 = a_closed(m)
        A2, A3, A4 = inverse_closed(m)
        g1, g2, g3 = gamma_closed(m)
        h2f, h3f, h2inv, h3inv = hankel_values(m)
        z23, z24 = zalcman_values(m)
        expected = {
            "A2": A2, "A3": A3, "A4": A4,
            "G1": g1, "G2": g2, "G3": g3,
            "H2F": h2f, "H3F": h3f, "H2INV": h2inv, "H3INV": h3inv,
            "Z23": z23, "Z24": z24,
            "A2C": a2, "A3C": a3, "A4C": a4, "A5C": a5,
        }
        for name, want in expected.items():
            assert functional_by_name(name).evaluate(b) == want, name
        for n, want in ((2, a2), (3, a3), (4, a4), (5, a5)):
            assert an_functional(n).evaluate(b) == abs(want)
        a7 = f_series(m, 7).coefficient(7)
        assert an_functional(7).evaluate(b) == abs(a7)


# -- configuration -----------------------------------------------------------


def test_search_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(grid_step=0)
    with pytest.raises(ValueError):
        SearchConfig(dims=0)
    with pytest.raises(ValueError):
        SearchConfig(refine_rounds=-1)
    cfg = SearchConfig(grid_step=0.02)
    assert cfg.grid_step == F(1, 50)  # decimal, not binary-float, intent
    assert cfg.b1_cap(F(1, 2)) == F(3, 2)
    assert SearchConfig(b1_max=0.5).b1_cap(F(1)) == F(1, 2)


def test_optimize_input_validation():
    with pytest.raises(ValueError):
        optimize("A2", 0, "max")
    with pytest.raises(ValueError):
        optimize("A2", F(3, 2), "max")
    with pytest.raises(ValueError):
        optimize("A2", 1, "sideways")


# -- certificates against the lambda=1 sweep ---------------------------------


@pytest.fixture(scope="module")
def certs_lam1():
    return verify_bounds([1])


def row(certs, name, direction):
    for c in certs:
        if c.functional == name and c.direction == direction:
            return c
    raise KeyError((name, direction))


def test_verify_row_order(certs_lam1):
    keys = [(c.functional, c.direction) for c in certs_lam1]
    assert keys == [(n, d) for n in FUNCTIONAL_NAMES for d in ("max", "min")]


def test_a3_max_attained_exactly(certs_lam1):
    c = row(certs_lam1, "A3", "max")
    assert c.status == "PASS" and not c.warn
    assert c.searched_value == 5.0
    assert c.argmax == (F(2), F(1), F(0), F(0))


def test_h2f_min_attained(certs_lam1):
    c = row(certs_lam1, "H2F", "min")
    assert c.status == "PASS" and not c.warn
    assert c.searched_value == -1.0
    assert c.argmax == (F(0), F(1), F(0), F(0))


def test_h3f_min_attained(certs_lam1):
    c = row(certs_lam1, "H3F", "min")
    assert c.status == "PASS" and not c.warn
    assert c.searched_value == -0.25
    assert c.argmax == (F(0), F(0), F(1, 2), F(0))


def test_z24_min_has_no_closed_form(certs_lam1):
    c = row(certs_lam1, "Z24", "min")
    assert c.status == "NO_CLOSED_FORM"
    assert c.closed_form is None and c.gap is None
    # the two-sided |Z24| <= 3 claim still holds at the searched minimum
    assert c.searched_value >= -3.0 - 1e-7


def test_h2f_max_exceeds_the_tabled_value(certs_lam1):
    # the quarter-circle-style value (1 - lam/2)(lam/2) is NOT the class
    # maximum at lam = 1: b = (5/7, 1/7, 3/7) is a member with
    # h2f = 2/7 > 1/4, and the search finds it
    c = row(certs_lam1, "H2F", "max")
    assert c.status == "FAIL"
    assert c.closed_form == 0.25
    assert c.searched_value == pytest.approx(2 / 7, abs=1e-8)
    validate(1, c.argmax)  # the refuting point really is a member


def test_a5c_min_bound_is_not_sharp(certs_lam1):
    # -9/4 is a valid lower bound for a5 but unattained on this class;
    # the true minimum is -5/4 at b = (sqrt(3/2), 1, 0, 0)
    c = row(certs_lam1, "A5C", "min")
    assert c.status == "PASS"
    assert c.warn  # sharpness miss is flagged, not hidden
    assert c.searched_value == pytest.approx(-1.25, abs=1e-6)


def test_soundness_argmax_validates(certs_lam1):
    for c in certs_lam1:
        validate(c.lam, c.argmax)


def test_never_exceed_all_rows(certs_lam1):
    for c in certs_lam1:
        if c.closed_form is None or c.status == "FAIL":
            continue
        if c.direction == "max":
            assert c.searched_value <= c.closed_form + 1e-7
        else:
            assert c.searched_value >= c.closed_form - 1e-7


# -- single optimize runs ----------------------------------------------------


def test_optimize_h2f_max_on_formula_below_half():
    c = optimize("H2F", F(1, 2), "max")
    assert c.status == "PASS" and not c.warn
    assert c.closed_form == pytest.approx(3 / 16)
    assert c.searched_value == pytest.approx(3 / 16, abs=1e-9)


def test_optimize_h3inv_max_small_lambda_exceeds():
    # for lam < 1/9 the maximum of b2 b4 - b3^2 + b2^3 moves off the
    # b2 = lam slice: with 9t^2 - 2t + lam = 0, t = (1 - sqrt(1-9 lam))/9,
    # the point (0, t, 0, (lam-t)/3) gives t(lam-t)/3 + t^3 > lam^3
    lam = F(1, 10)
    t = (1 - math.sqrt(1 - 9 * float(lam))) / 9
    g = t * (float(lam) - t) / 3 + t**3
    c = optimize("H3INV", lam, "max")
    assert c.status == "FAIL"
    assert c.closed_form == pytest.approx(1e-3)
    assert c.searched_value == pytest.approx(g, abs=1e-8)
    validate(lam, c.argmax)


def test_optimize_deterministic():
    a = optimize("Z23", F(2, 5), "max", SearchConfig(grid_step=F(1, 20)))
    b = optimize("Z23", F(2, 5), "max", SearchConfig(grid_step=F(1, 20)))
    assert a == b


def test_refinement_history_monotone():
    up = _optimize_detail("A4", F(37, 100), "max", SearchConfig(grid_step=F(1, 20)))
    assert up.round_values[0] == up.coarse_value
    assert list(up.round_values) == sorted(up.round_values)
    down = _optimize_detail("H2F", F(61, 100), "min", SearchConfig(grid_step=F(1, 20)))
    assert list(down.round_values) == sorted(down.round_values, reverse=True)


def test_move_directions_shape():
    moves = _move_directions(4)
    assert len(moves) == 44
    assert all(len(m) == 4 for m in moves)
    for m in moves:
        assert any(x != 0 for x in m)
        assert tuple(-x for x in m) in moves
    # budget-preserving pair and its facet-preserving triple
    assert (0, 3, 0, -1) in moves
    assert (2, 3, 0, -1) in moves
    assert (0, 0, -3, 2) in moves
    assert list(moves) == sorted(moves)


# -- verify plumbing ---------------------------------------------------------


def test_verify_empty_grid():
    assert verify_bounds([]) == []


def test_verify_rejects_bad_lambda():
    with pytest.raises(ValueError):
        verify_bounds([F(3, 2)])


def test_verify_deterministic_small():
    cfg = SearchConfig(grid_step=F(1, 20), refine_rounds=2)
    assert verify_bounds([F(1, 2)], cfg) == verify_bounds([F(1, 2)], cfg)


# -- serialization -----------------------------------------------------------


def test_csv_shape():
    cert = BoundCertificate(
        lam=F(1, 2), functional="A3", direction="max",
        searched_value=2.75, argmax=(F(3, 2), F(1, 2), F(0), F(0)),
        closed_form=2.75, gap=0.0, status="PASS", warn=False,
    )
    assert CSV_HEADER == "lambda,functional,direction,searched,closed_form,gap,status,argmax"
    assert certificate_csv_row(cert) == "0.5,A3,max,2.75,2.75,0.0,PASS,1.5;0.5;0;0"
    text = certificates_to_csv([cert])
    assert text.startswith(CSV_HEADER + "\n")
    assert text.endswith("\n")


def test_csv_empty_fields_for_missing_closed_form():
    cert = BoundCertificate(
        lam=F(1), functional="Z24", direction="min",
        searched_value=-2.0, argmax=(F(0), F(1), F(0), F(0)),
        closed_form=None, gap=None, status="NO_CLOSED_FORM", warn=False,
    )
    assert certificate_csv_row(cert) == "1,Z24,min,-2.0,,,NO_CLOSED_FORM,0;1;0;0"


def test_certificate_dict_keys():
    cert = BoundCertificate(
        lam=F(1), functional="A2", direction="max",
        searched_value=2.0, argmax=(F(2), F(1), F(0), F(0)),
        closed_form=2.0, gap=0.0, status="PASS", warn=False,
    )
    d = certificate_to_dict(cert)
    assert d == {
        "lambda": 1.0, "functional": "A2", "direction": "max",
        "searched": 2.0, "closed_form": 2.0, "gap": 0.0,
        "status": "PASS", "warn": False, "argmax": ["2", "1", "0", "0"],
    }


# -- conjecture scan ---------------------------------------------------------


def test_conjecture_n2():
    c = conjecture_scan(2, F(1, 2))
    assert c.functional == "AN(2)"
    assert c.status == "PASS"
    assert c.closed_form == 1.5
    assert c.searched_value == pytest.approx(1.5, abs=1e-9)


def test_conjecture_n3_attains_on_grid():
    c = conjecture_scan(3, F(1, 2))
    assert c.status == "PASS"
    assert c.closed_form == 1.75
    assert c.searched_value == pytest.approx(1.75, abs=1e-9)
    assert c.argmax[:2] == (F(3, 2), F(1, 2))


def test_conjecture_n4_at_one():
    c = conjecture_scan(4, 1)
    assert c.status == "PASS"
    assert c.closed_form == 4.0
    assert c.searched_value == pytest.approx(4.0, abs=1e-9)


def test_conjecture_rejects_bad_n():
    with pytest.raises(ValueError):
        conjecture_scan(1, F(1, 2))
    with pytest.raises(ValueError):
        conjecture_scan(9, F(1, 2))
