"""From a commutative algebra and a derivation to a Lie bracket, an anti-pre-Lie
product and an invariant form.

Run: python demos/derivation_pipeline.py
"""

from tpalg import (
    AlgebraPresentation,
    BilinearForm,
    LinearMap,
    apl_from_derivation,
    check_derivation,
    check_form,
    commutator,
    induce_anti_pre_lie,
    passes,
    witt_lie,
)
from tpalg.tensor import as_tensor

N = 4


def truncated(n: int) -> AlgebraPresentation:
    """Q[t]/(t^n): t^i . t^j = t^(i+j), zero past degree n - 1."""
    dot = [[[int(i + j == k) for k in range(n)] for j in range(n)] for i in range(n)]
    return AlgebraPresentation(n, {"dot": as_tensor(dot)}, tuple(f"t^{k}" for k in range(n)))


def diagonal(values) -> LinearMap:
    n = len(values)
    return LinearMap(as_tensor([[values[i] if i == j else 0 for j in range(n)] for i in range(n)]))


a = truncated(N)
euler = diagonal(list(range(N)))  # t^k -> k t^k
print(f"Q[t]/(t^{N}) is commutative associative:", passes(a, "COMM_ASSOC"))
print("the Euler map is a derivation:", check_derivation(a, "dot", euler).holds)

witt = witt_lie(a, euler)
print("[x, y] = P(x).y - x.P(y) is a Lie bracket:", passes(witt.only("bracket"), "LIE"))
print("dot and bracket form a transposed Poisson algebra:", passes(witt, "TRANSPOSED_POISSON"))

apl = apl_from_derivation(a, euler)
print("x o y = P(x.y) + P(x).y is anti-pre-Lie:", passes(apl.only("circ"), "ANTI_PRE_LIE"))
print("its commutator is the bracket above:", (commutator(apl.only("circ"))["bracket"] == witt["bracket"]).all())
print("dot with circ is anti-pre-Lie Poisson:", passes(apl, "ANTI_PRE_LIE_POISSON"))

B = BilinearForm(as_tensor([[int(i + j == N - 1) for j in range(N)] for i in range(N)]))
print("the residue pairing B(t^i, t^j) = [i + j = n - 1] is invariant:", check_form(a, B, "invariant_dot").holds)
print("and a commutative 2-cocycle of the bracket:", check_form(witt, B, "comm_2_cocycle").holds)

induced = induce_anti_pre_lie(witt.only("bracket"), B)
print("the product with B(x o y, z) = B(y, [x, z]) is anti-pre-Lie:", passes(induced.only("circ"), "ANTI_PRE_LIE"))
print("and satisfies that compatibility:", check_form(induced, B, "compatible_circ").holds)
print("it differs from the derived product:", not (induced["circ"] == apl["circ"]).all())
