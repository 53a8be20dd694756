"""Coproducts, coalgebra axioms, 1-cocycles and bialgebra suites."""

import itertools
import random

import numpy as np
import oracles
import pytest
from conftest import (
    DERIVATION_FAMILY,
    derivation_algebra,
    euler_map,
    exact,
    random_two_tensor,
    sparse_tensors,
    truncated,
)
from hypothesis import given

from tpalg.algebra import AlgebraPresentation, passes, zero_algebra
from tpalg.coalgebra import (
    BialgebraKind,
    CoalgebraClass,
    Coproduct,
    check_bialgebra,
    check_coalgebra,
    check_one_cocycle,
    coproducts_from_dual,
    dual_algebra,
    dual_coproduct_on_dual,
    dualize_product_coproduct,
)
from tpalg.data import load_examples
from tpalg.errors import ConfigurationError, DimensionError, PreconditionError
from tpalg.matched_pairs import (
    check_matched_pair,
    lie_pair_from_apl,
    standard_pair_from_dual,
    tpa_pair_from_aplp,
)
from tpalg.operators import canonical_r, pre_aplp_from_zinbiel
from tpalg.yang_baxter import coboundary_coproducts

A3 = derivation_algebra(3, euler_map(3))


def _perturb(t, rng, count=1):
    arr = np.array(t)
    for _ in range(count):
        idx = tuple(rng.randrange(s) for s in arr.shape)
        arr[idx] += rng.choice((-1, 1, 2))
    return exact(arr)


def test_dualize_truncated_product():
    Delta = dualize_product_coproduct(truncated(3)["dot"])
    image = Delta([0, 0, 1])
    assert image.tolist() == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
    assert np.array_equal(dualize_product_coproduct(Delta), truncated(3)["dot"])
    zero = Coproduct.zero(2)
    assert not np.any(dualize_product_coproduct(zero) != 0)


@given(sparse_tensors((3, 3, 3)))
def test_dualization_is_an_involution(t):
    assert np.array_equal(dualize_product_coproduct(dualize_product_coproduct(t)), t)
    cop = Coproduct(t)
    assert dualize_product_coproduct(dualize_product_coproduct(cop)) == cop


@pytest.mark.parametrize("cls", list(CoalgebraClass))
def test_zero_coproducts_satisfy_every_class(cls):
    cop = {"delta": Coproduct.zero(3), "Delta": Coproduct.zero(3)}
    if cls is CoalgebraClass.APL_COALG:
        cop.pop("Delta")
    assert all(r.holds for r in check_coalgebra(cop, cls))


def test_dual_of_anti_pre_lie_product_is_a_coalgebra():
    assert all(r.holds for r in check_coalgebra(dualize_product_coproduct(A3["circ"]), "apl_coalg"))
    cop = coproducts_from_dual(A3.only("dot", "circ"))
    assert all(r.holds for r in check_coalgebra(cop, "aplp_coalg"))
    assert dual_algebra(cop).same_as(A3.only("dot", "circ"))


def _apl_value(c, i, j, k):
    """Both anti-pre-Lie identities at a basis triple, concatenated."""
    n = len(c)
    br = oracles.commutator(c)
    x, y, z = (oracles.basis(n, v) for v in (i, j, k))
    first = oracles.sub(
        oracles.sub(oracles.mul(c, x, oracles.mul(c, y, z)), oracles.mul(c, y, oracles.mul(c, x, z))),
        oracles.mul(c, oracles.mul(br, y, x), z),
    )
    second = oracles.add(
        oracles.mul(c, oracles.mul(br, x, y), z), oracles.mul(c, oracles.mul(br, y, z), x), oracles.mul(c, oracles.mul(br, z, x), y)
    )
    return first + second


def test_coalgebra_check_agrees_with_dual_class_and_transposed_witness():
    """Coalgebra axioms versus the brute-force class check of the dual product."""
    rng = random.Random(17)
    seen = {True: 0, False: 0}
    for trial in range(60):
        a = rng.choice(DERIVATION_FAMILY[:8])
        D = dualize_product_coproduct(a["circ"]).tensor
        if trial % 4:
            D = _perturb(D, rng, rng.choice((1, 2)))
        reports = check_coalgebra(Coproduct(D), "apl_coalg")
        c = oracles.dual_product(oracles.to_lists(D))
        dual_ok = oracles.all_pass(oracles.apl(c))
        assert all(r.holds for r in reports) == dual_ok
        seen[dual_ok] += 1
        for r in reports:
            if r.holds:
                continue
            assert r.reevaluate() == r.defect
            (k,) = r.witness
            n = a.dim
            field = np.array(r.defect, dtype=object).reshape(n, n, n)
            p, q, s = next(idx for idx in itertools.product(range(n), repeat=3) if field[idx] != 0)
            values = [_apl_value(c, *perm)[k] for perm in itertools.permutations((p, q, s))]
            values += [_apl_value(c, *perm)[n + k] for perm in itertools.permutations((p, q, s))]
            assert any(v != 0 for v in values)
    assert seen[True] and seen[False]


def test_poisson_coalgebra_agrees_with_dual_class():
    rng = random.Random(23)
    for trial in range(40):
        a = rng.choice(DERIVATION_FAMILY[:8])
        cop = coproducts_from_dual(a.only("dot", "circ"))
        if trial % 3:
            key = rng.choice(("delta", "Delta"))
            cop[key] = Coproduct(_perturb(cop[key].tensor, rng))
        holds = all(r.holds for r in check_coalgebra(cop, "aplp_coalg"))
        dual = dual_algebra(cop)
        d, c = oracles.to_lists(dual["dot"]), oracles.to_lists(dual["circ"])
        brute = oracles.all_pass(oracles.comm_assoc(d) + oracles.apl(c) + oracles.aplp_extra(d, c))
        assert holds == brute == passes(dual, "ANTI_PRE_LIE_POISSON")


def test_alternate_second_axiom_is_equivalent_under_the_first():
    rng = random.Random(29)
    checked = 0
    for _ in range(80):
        a = rng.choice(DERIVATION_FAMILY)
        D = _perturb(dualize_product_coproduct(a["circ"]).tensor, rng, rng.choice((0, 1)))
        first, second = check_coalgebra(Coproduct(D), "apl_coalg")
        _, alt = check_coalgebra(Coproduct(D), "apl_coalg", alternate=True)
        if first.holds:
            checked += 1
            assert second.holds == alt.holds
    assert checked >= 10


def test_coalgebra_configuration_errors():
    with pytest.raises(ConfigurationError):
        check_coalgebra({"Delta": Coproduct.zero(2)}, "apl_coalg")
    with pytest.raises(ConfigurationError):
        check_coalgebra({"gamma": Coproduct.zero(2)}, "apl_coalg")
    with pytest.raises(DimensionError):
        check_coalgebra({"delta": Coproduct.zero(2), "Delta": Coproduct.zero(3)}, "aplp_coalg")
    with pytest.raises(DimensionError):
        Coproduct(exact(np.zeros((2, 3, 3), dtype=int)))


def test_zero_coproduct_is_a_one_cocycle():
    assert check_one_cocycle(A3, Coproduct.zero(3)).holds


def test_coboundary_coproduct_is_always_a_one_cocycle():
    rng = random.Random(31)
    for a in DERIVATION_FAMILY:
        for _ in range(3):
            r = random_two_tensor(rng, a.dim)
            delta, _ = coboundary_coproducts(a, r)
            assert check_one_cocycle(a, delta).holds


def test_perturbed_one_cocycle_fails():
    rng = random.Random(37)
    a = DERIVATION_FAMILY[5]
    failures = 0
    for _ in range(20):
        delta, _ = coboundary_coproducts(a, random_two_tensor(rng, a.dim))
        report = check_one_cocycle(a, Coproduct(_perturb(delta.tensor, rng)))
        if not report.holds:
            failures += 1
            assert report.reevaluate() == report.defect
    assert failures >= 10


def test_one_cocycle_rejects_inconsistent_bracket():
    bad = A3.with_products(bracket=zero_algebra(3, "bracket")["bracket"])
    with pytest.raises(ConfigurationError):
        check_one_cocycle(bad, Coproduct.zero(3))


@pytest.mark.parametrize("kind", list(BialgebraKind))
def test_zero_coproducts_give_bialgebras(kind):
    cop = {"delta": Coproduct.zero(3), "Delta": Coproduct.zero(3)}
    if kind is BialgebraKind.APL:
        cop.pop("Delta")
    if kind is BialgebraKind.COMM_COCOMM_INF:
        cop.pop("delta")
    assert all(r.holds for r in check_bialgebra(A3, cop, kind))


def test_bialgebra_enforces_hypotheses():
    with pytest.raises(PreconditionError):
        check_bialgebra(A3, Coproduct(_perturb(Coproduct.zero(3).tensor, random.Random(2), 3)), "apl")
    not_apl = AlgebraPresentation(2, {"circ": exact([[[0, 0], [1, 0]], [[0, 0], [0, 0]]])})
    reports = check_bialgebra(not_apl, Coproduct.zero(2), "apl", preconditions="report")
    assert not all(r.holds for r in reports)
    with pytest.raises(ConfigurationError):
        check_bialgebra(truncated(3), Coproduct.zero(3), "apl")


def _bialgebra_cases():
    """An algebra with the dual of another algebra of the same dimension, plus the zero
    dual and the coboundary coproducts of a canonical solution."""
    cases = []
    for a in DERIVATION_FAMILY:
        if a.dim > 3:
            continue
        cases.append((a, zero_algebra(a.dim, "dot", "circ")))
        for b in DERIVATION_FAMILY:
            if a.dim == b.dim:
                cases.append((a, b))
    ws = load_examples()
    pre = pre_aplp_from_zinbiel(ws.get("algebras", "Z2"), ws.get("maps", "P_grading"))
    ambient, r = canonical_r(pre)
    delta, Delta = coboundary_coproducts(ambient, r)
    cases.append((ambient, dual_algebra({"delta": delta, "Delta": Delta})))
    return cases


def test_apl_bialgebra_cocycle_and_matched_pair_routes_agree():
    outcomes = set()
    for a, b in _bialgebra_cases():
        delta = dualize_product_coproduct(b["circ"])
        suite = all(r.holds for r in check_bialgebra(a, delta, "apl"))
        a_star = dual_algebra({"delta": delta})
        beta = dual_coproduct_on_dual(a)
        cocycles = check_one_cocycle(a, delta).holds and check_one_cocycle(a_star, beta).holds
        mp = lie_pair_from_apl(standard_pair_from_dual(a, a_star, "APL"))
        pair = all(r.holds for r in check_matched_pair(mp))
        assert suite == cocycles == pair
        outcomes.add(suite)
    assert outcomes == {True, False}


def test_aplp_bialgebra_and_tpa_matched_pair_agree():
    outcomes = set()
    for a, b in _bialgebra_cases():
        cop = coproducts_from_dual(b.only("dot", "circ"))
        suite = all(r.holds for r in check_bialgebra(a, cop, "aplp"))
        mp = tpa_pair_from_aplp(standard_pair_from_dual(a, dual_algebra(cop), "APLP"))
        pair = all(r.holds for r in check_matched_pair(mp))
        assert suite == pair
        outcomes.add(suite)
    assert outcomes == {True, False}
