"""A Zinbiel algebra with a derivation gives a skew solution of the Yang-Baxter
type equations, hence a bialgebra, a matched pair, a double and a Manin triple.

Run: python demos/canonical_bialgebra.py
"""

from tpalg import (
    build_double,
    canonical_r,
    check_bialgebra,
    check_manin_triple,
    check_matched_pair,
    coboundary_coproducts,
    passes,
    pre_aplp_from_zinbiel,
    standard_pair_from_dual,
)
from tpalg.coalgebra import dual_algebra
from tpalg.data import load_examples
from tpalg.matched_pairs import tpa_pair_from_aplp
from tpalg.yang_baxter import is_solution


def all_hold(reports) -> bool:
    return all(r.holds for r in reports)


examples = load_examples()
zinbiel = examples.get("algebras", "Z2")
grading = examples.get("maps", "P_grading")
print("Z2 is Zinbiel:", passes(zinbiel, "ZINBIEL"))

pre = pre_aplp_from_zinbiel(zinbiel, grading)
print("the derivation splits it into a pre-anti-pre-Lie Poisson algebra:", passes(pre, "PRE_APLP"))

ambient, r = canonical_r(pre)
print(f"canonical r lives on a {ambient.dim}-dimensional ambient algebra; skew: {r.is_skew}")
print("T(r) = 0 and A(r) = 0:", is_solution(ambient, r, "aplp"))

delta, Delta = coboundary_coproducts(ambient, r)
coproducts = {"delta": delta, "Delta": Delta}
print("(ambient, delta_r, Delta_r) is a bialgebra:", all_hold(check_bialgebra(ambient, coproducts, "aplp", "report")))

pair = standard_pair_from_dual(ambient, dual_algebra(coproducts), "APLP")
tpa_pair = tpa_pair_from_aplp(pair)
print("the algebra and its dual form a matched pair:", all_hold(check_matched_pair(pair)))
print("so do the sub-adjacent transposed Poisson algebras:", all_hold(check_matched_pair(tpa_pair)))

double = build_double(tpa_pair)
n = ambient.dim
print(f"the {double.dim}-dimensional double is transposed Poisson:", passes(double, "TRANSPOSED_POISSON"))
print("with the standard pairing it is a Manin triple:", all_hold(check_manin_triple(double, (n, n), "tpa")))
