"""Brute-force reference implementations in plain Python.

Nothing here touches numpy or the identity engine: structure constants are
nested lists of ``Fraction`` and every identity is a loop over basis
tuples.  Tests compare the kernel against these.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np


def to_lists(t):
    """Nested lists of Fraction from an exact tensor (or nested lists)."""
    arr = np.asarray(t, dtype=object)
    if arr.ndim == 0:
        v = arr.item()
        return Fraction(int(v.numerator), int(v.denominator))
    return [to_lists(sub) for sub in arr]


def zero_vec(n):
    return [Fraction(0)] * n


def add(*vs):
    return [sum(col, Fraction(0)) for col in zip(*vs)]


def scale(c, v):
    return [c * x for x in v]


def sub(u, v):
    return [a - b for a, b in zip(u, v)]


def basis(n, i):
    v = zero_vec(n)
    v[i] = Fraction(1)
    return v


def mul(c, u, v):
    """Bilinear product with constants ``c[i][j][k]`` on coordinate vectors."""
    n = len(c[0][0])
    out = zero_vec(n)
    for i, ui in enumerate(u):
        if ui == 0:
            continue
        for j, vj in enumerate(v):
            if vj == 0:
                continue
            for k in range(n):
                out[k] += ui * vj * c[i][j][k]
    return out


def apply(m, v):
    """Matrix with images as columns applied to a vector."""
    return [sum((m[k][j] * v[j] for j in range(len(v))), Fraction(0)) for k in range(len(m))]


def first_failure(dim, arity, fn):
    """First basis tuple (lexicographic) where ``fn`` is nonzero, with the value."""
    for idx in itertools.product(range(dim), repeat=arity):
        vecs = [basis(dim, i) for i in idx]
        val = fn(*vecs)
        if any(x != 0 for x in val):
            return idx, val
    return None


# ---------------------------------------------------------------------------
# truncated polynomials and derivations


def truncated_product(n):
    """``t^i t^j = t^(i+j)`` in Q[t]/(t^n), basis 1, t, ..., t^(n-1)."""
    return [[[Fraction(int(i + j == k)) for k in range(n)] for j in range(n)] for i in range(n)]


def monomial_derivation(n, images):
    """Matrix of ``P(t^k) = images[k]`` given as {degree: coefficient}."""
    m = [[Fraction(0)] * n for _ in range(n)]
    for k, img in enumerate(images):
        for deg, c in img.items():
            if deg < n:
                m[deg][k] = Fraction(c)
    return m


def euler(n):
    return monomial_derivation(n, [{k: k} for k in range(n)])


def nilpotent(n):
    """``P(t^k) = k t^(k+1)``, the derivation with ``P(t) = t^2``."""
    return monomial_derivation(n, [{k + 1: k} for k in range(n)])


def witt_bracket(dot, P):
    n = len(dot)
    return [[sub(mul(dot, apply(P, basis(n, i)), basis(n, j)), mul(dot, basis(n, i), apply(P, basis(n, j))))
             for j in range(n)] for i in range(n)]


def derived_circ(dot, P):
    n = len(dot)
    return [[add(apply(P, mul(dot, basis(n, i), basis(n, j))), mul(dot, apply(P, basis(n, i)), basis(n, j)))
             for j in range(n)] for i in range(n)]


def leibniz_failure(c, P):
    n = len(c)
    return first_failure(n, 2, lambda x, y: sub(apply(P, mul(c, x, y)), add(mul(c, apply(P, x), y), mul(c, x, apply(P, y)))))


# ---------------------------------------------------------------------------
# class identities, one function per identity returning the first failure


def commutator(circ):
    n = len(circ)
    return [[sub(circ[i][j], circ[j][i]) for j in range(n)] for i in range(n)]


def comm_assoc(d):
    n = len(d)
    return [
        first_failure(n, 2, lambda x, y: sub(mul(d, x, y), mul(d, y, x))),
        first_failure(n, 3, lambda x, y, z: sub(mul(d, mul(d, x, y), z), mul(d, x, mul(d, y, z)))),
    ]


def lie(b):
    n = len(b)
    return [
        first_failure(n, 2, lambda x, y: add(mul(b, x, y), mul(b, y, x))),
        first_failure(n, 3, lambda x, y, z: add(mul(b, x, mul(b, y, z)), mul(b, y, mul(b, z, x)), mul(b, z, mul(b, x, y)))),
    ]


def tpa_compat(d, b):
    n = len(d)
    return first_failure(
        n, 3, lambda x, y, z: sub(scale(2, mul(d, z, mul(b, x, y))), add(mul(b, mul(d, z, x), y), mul(b, x, mul(d, z, y))))
    )


def apl(c):
    n = len(c)
    br = commutator(c)
    left = first_failure(
        n, 3, lambda x, y, z: sub(sub(mul(c, x, mul(c, y, z)), mul(c, y, mul(c, x, z))), mul(c, mul(br, y, x), z))
    )
    cyclic = first_failure(
        n, 3, lambda x, y, z: add(mul(c, mul(br, x, y), z), mul(c, mul(br, y, z), x), mul(c, mul(br, z, x), y))
    )
    return [left, cyclic]


def aplp_extra(d, c):
    n = len(d)
    first = first_failure(
        n,
        3,
        lambda x, y, z: add(
            scale(2, mul(d, mul(c, x, y), z)),
            scale(-2, mul(d, mul(c, y, x), z)),
            scale(-1, mul(d, y, mul(c, x, z))),
            mul(d, x, mul(c, y, z)),
        ),
    )
    second = first_failure(
        n,
        3,
        lambda x, y, z: add(scale(2, mul(c, x, mul(d, y, z))), scale(-1, mul(c, mul(d, z, x), y)), scale(-1, mul(d, z, mul(c, x, y)))),
    )
    return [first, second]


def zinbiel(s):
    n = len(s)
    return first_failure(
        n, 3, lambda x, y, z: sub(mul(s, x, mul(s, y, z)), add(mul(s, mul(s, y, x), z), mul(s, mul(s, x, y), z)))
    )


def all_pass(failures):
    return all(f is None for f in failures)


# ---------------------------------------------------------------------------
# Yang-Baxter tensors and coboundary coproducts


def yb_T(circ, r):
    """``r12 o r13 + r12 o r23 - [r13, r23]`` as a dict of nonzero entries."""
    n = len(circ)
    br = commutator(circ)
    out = {}

    def put(idx, v):
        out[idx] = out.get(idx, Fraction(0)) + v

    for i, j, k, l in itertools.product(range(n), repeat=4):
        c = r[i][j] * r[k][l]
        if c == 0:
            continue
        for m in range(n):
            put((m, j, l), c * circ[i][k][m])  # (a_i o a_k) (x) b_j (x) b_l
            put((i, m, l), c * circ[j][k][m])  # a_i (x) (b_j o a_k) (x) b_l
            put((i, k, m), -c * br[j][l][m])  # a_i (x) a_k (x) [b_j, b_l]
    return {k: v for k, v in out.items() if v != 0}


def yb_A(dot, r):
    """``r12 . r13 - r23 . r12 + r13 . r23``."""
    n = len(dot)
    out = {}

    def put(idx, v):
        out[idx] = out.get(idx, Fraction(0)) + v

    for i, j, k, l in itertools.product(range(n), repeat=4):
        c = r[i][j] * r[k][l]
        if c == 0:
            continue
        for m in range(n):
            put((m, j, l), c * dot[i][k][m])  # a_i a_k (x) b_j (x) b_l
            put((k, m, j), -c * dot[i][l][m])  # a_k (x) a_i b_l (x) b_j
            put((i, k, m), c * dot[j][l][m])  # a_i (x) a_k (x) b_j b_l
    return {k: v for k, v in out.items() if v != 0}


def coboundary_delta(circ, r):
    """``delta_r(x) = sum r_ij (-(x o a_i) (x) b_j + a_i (x) [x, b_j])`` as ``D[x][p][q]``."""
    n = len(circ)
    br = commutator(circ)
    D = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for x, i, j, m in itertools.product(range(n), repeat=4):
        D[x][m][j] -= r[i][j] * circ[x][i][m]
        D[x][i][m] += r[i][j] * br[x][j][m]
    return D


def coboundary_Delta(dot, r):
    """``Delta_r(x) = sum r_ij ((x.a_i) (x) b_j - a_i (x) (x.b_j))``."""
    n = len(dot)
    D = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for x, i, j, m in itertools.product(range(n), repeat=4):
        D[x][m][j] += r[i][j] * dot[x][i][m]
        D[x][i][m] -= r[i][j] * dot[x][j][m]
    return D


def dual_product(D):
    """The product on the dual space: ``c[i][j][k] = D[k][i][j]``."""
    n = len(D)
    return [[[D[k][i][j] for k in range(n)] for j in range(n)] for i in range(n)]


def dense(entries, n, rank=3):
    arr = np.zeros((n,) * rank, dtype=object)
    arr[...] = Fraction(0)
    for idx, v in entries.items():
        arr[idx] = v
    return arr


# ---------------------------------------------------------------------------
# class membership by name, on a dict of product lists


def class_failures(products, cls):
    """First failures of every identity of ``cls``; ``products`` maps names to nested lists."""
    p = products
    if cls == "COMM_ASSOC":
        return comm_assoc(p["dot"])
    if cls == "LIE":
        return lie(p["bracket"])
    if cls == "TRANSPOSED_POISSON":
        return comm_assoc(p["dot"]) + lie(p["bracket"]) + [tpa_compat(p["dot"], p["bracket"])]
    if cls == "ANTI_PRE_LIE":
        return apl(p["circ"])
    if cls == "ANTI_PRE_LIE_POISSON":
        return comm_assoc(p["dot"]) + apl(p["circ"]) + aplp_extra(p["dot"], p["circ"])
    if cls == "ZINBIEL":
        return [zinbiel(p["star"])]
    raise ValueError(f"no oracle for {cls}")


def in_class(products, cls):
    return all_pass(class_failures(products, cls))


KIND_CLASS = {
    "LIE": "LIE",
    "COMM_ASSOC": "COMM_ASSOC",
    "APL": "ANTI_PRE_LIE",
    "TPA": "TRANSPOSED_POISSON",
    "APLP": "ANTI_PRE_LIE_POISSON",
}
KIND_PRODUCTS = {
    "LIE": ("bracket",),
    "COMM_ASSOC": ("dot",),
    "APL": ("circ",),
    "TPA": ("dot", "bracket"),
    "APLP": ("dot", "circ"),
}


def zero_cube(n):
    return [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]


def _act(maps, x, v):
    """``f(e_x) e_v`` for a family given as matrices ``maps[x][k][v]``."""
    return [maps[x][k][v] for k in range(len(maps[x]))]


def bowtie(kind, prods_a, prods_b, maps_a_on_b, maps_b_on_a):
    """Products on ``A + B`` from two algebras and their mutual actions, by the bowtie formulas."""
    n = len(next(iter(prods_a.values())))
    m = len(next(iter(prods_b.values())))
    out = {}
    for name in KIND_PRODUCTS[kind]:
        big = zero_cube(n + m)
        for i, j, k in itertools.product(range(n), repeat=3):
            big[i][j][k] = prods_a[name][i][j][k]
        for i, j, k in itertools.product(range(m), repeat=3):
            big[n + i][n + j][n + k] = prods_b[name][i][j][k]
        for x in range(n):
            for b in range(m):
                if name == "bracket":
                    on_b = _act(maps_a_on_b["rho"], x, b)
                    on_a = [-c for c in _act(maps_b_on_a["rho"], b, x)]
                    rev_b, rev_a = [-c for c in on_b], [-c for c in on_a]
                elif name == "dot":
                    on_b, on_a = _act(maps_a_on_b["mu"], x, b), _act(maps_b_on_a["mu"], b, x)
                    rev_b, rev_a = on_b, on_a
                else:  # circ: x o b = l_A(x)b + r_B(b)x, b o x = l_B(b)x + r_A(x)b
                    on_b, on_a = _act(maps_a_on_b["l"], x, b), _act(maps_b_on_a["r"], b, x)
                    rev_b, rev_a = _act(maps_a_on_b["r"], x, b), _act(maps_b_on_a["l"], b, x)
                for k in range(m):
                    big[x][n + b][n + k] += on_b[k]
                    big[n + b][x][n + k] += rev_b[k]
                for k in range(n):
                    big[x][n + b][k] += on_a[k]
                    big[n + b][x][k] += rev_a[k]
        out[name] = big
    return out


def semidirect(kind, base, maps):
    """``A + V`` with ``V`` carrying the zero product: the bowtie with a trivial partner."""
    n = len(next(iter(base.values())))
    m = len(next(iter(maps.values()))[0])
    zero_b = {name: zero_cube(m) for name in KIND_PRODUCTS[kind]}
    zero_maps = {f: [[[Fraction(0)] * n for _ in range(n)] for _ in range(m)] for f in maps}
    return bowtie(kind, base, zero_b, maps, zero_maps)


def transpose_family(prod):
    """Coadjoint-style family from a product: matrix ``[j][k] = prod[x][j][k]``, i.e. ``a* -> a* o L(x)``."""
    return [[list(prod[x][j]) for j in range(len(prod))] for x in range(len(prod))]


def standard_double(kind, prods_a, prods_b):
    """The double of ``A`` and ``A*`` for the coboundary and bialgebra equivalences.

    ``LIE``: commutator brackets with ``-L*`` on both sides (from ``circ``).
    ``TPA``: additionally ``dot`` with ``-L.*``.
    """
    a = {"bracket": commutator(prods_a["circ"])}
    b = {"bracket": commutator(prods_b["circ"])}
    on_b = {"rho": transpose_family(prods_a["circ"])}
    on_a = {"rho": transpose_family(prods_b["circ"])}
    if kind == "TPA":
        a["dot"], b["dot"] = prods_a["dot"], prods_b["dot"]
        on_b["mu"], on_a["mu"] = transpose_family(prods_a["dot"]), transpose_family(prods_b["dot"])
    return bowtie(kind, a, b, on_b, on_a)


def apl_bialgebra(circ, D):
    """Anti-pre-Lie bialgebra test through the Lie double of ``A`` and the dual algebra."""
    dual = dual_product(D)
    return in_class({"circ": circ}, "ANTI_PRE_LIE") and in_class({"circ": dual}, "ANTI_PRE_LIE") and in_class(
        standard_double("LIE", {"circ": circ}, {"circ": dual}), "LIE"
    )


def aplp_bialgebra(dot, circ, D_dot, D_circ):
    """Anti-pre-Lie Poisson bialgebra test through the transposed Poisson double."""
    a = {"dot": dot, "circ": circ}
    b = {"dot": dual_product(D_dot), "circ": dual_product(D_circ)}
    return (
        in_class(a, "ANTI_PRE_LIE_POISSON")
        and in_class(b, "ANTI_PRE_LIE_POISSON")
        and in_class(standard_double("TPA", a, b), "TRANSPOSED_POISSON")
    )


# ---------------------------------------------------------------------------
# forms, operators, cocycles


def form_value(B, u, v):
    n = len(B)
    return sum((u[i] * B[i][j] * v[j] for i in range(n) for j in range(n)), Fraction(0))


def rank(rows):
    m = [list(r) for r in rows]
    rk, cols = 0, len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rk, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for r in range(len(m)):
            if r != rk and m[r][c] != 0:
                f = m[r][c] / m[rk][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rk])]
        rk += 1
    return rk


def form_holds(products, B, predicate):
    n = len(B)
    e = [basis(n, i) for i in range(n)]
    if predicate == "nondegenerate":
        return rank(B) == n
    if predicate == "symmetric":
        return all(B[i][j] == B[j][i] for i in range(n) for j in range(n))
    for x, y, z in itertools.product(e, repeat=3):
        if predicate == "invariant_dot":
            d = products["dot"]
            val = form_value(B, mul(d, x, y), z) - form_value(B, x, mul(d, y, z))
        elif predicate == "invariant_bracket":
            b = products["bracket"]
            val = form_value(B, mul(b, x, y), z) - form_value(B, x, mul(b, y, z))
        elif predicate == "comm_2_cocycle":
            b = products["bracket"]
            val = form_value(B, mul(b, x, y), z) + form_value(B, mul(b, y, z), x) + form_value(B, mul(b, z, x), y)
        elif predicate == "compatible_circ":
            c, b = products["circ"], products["bracket"]
            val = form_value(B, mul(c, x, y), z) - form_value(B, y, mul(b, x, z))
        else:
            raise ValueError(predicate)
        if val != 0:
            return False
    return True


def closed(prod, indices):
    inside = set(indices)
    outside = [k for k in range(len(prod)) if k not in inside]
    return all(prod[i][j][k] == 0 for i in inside for j in inside for k in outside)


def _family_apply(maps, x, v):
    """``f(x) v`` for coordinate vectors ``x`` (in the base) and ``v`` (in the space)."""
    m = len(v)
    out = zero_vec(m)
    for i, xi in enumerate(x):
        if xi != 0:
            out = add(out, scale(xi, apply(maps[i], v)))
    return out


def o_operator_holds(kind, products, maps, T):
    """Defining equations of an O-operator ``T`` (``T[k][i]``: e_k coefficient of ``T(v_i)``)."""
    m = len(T[0])
    for i, j in itertools.product(range(m), repeat=2):
        u, v = basis(m, i), basis(m, j)
        Tu, Tv = apply(T, u), apply(T, v)
        checks = []
        if kind in ("COMM_ASSOC", "TPA", "APLP"):
            rhs = add(_family_apply(maps["mu"], Tu, v), _family_apply(maps["mu"], Tv, u))
            checks.append(sub(mul(products["dot"], Tu, Tv), apply(T, rhs)))
        if kind in ("LIE", "TPA"):
            rhs = sub(_family_apply(maps["rho"], Tu, v), _family_apply(maps["rho"], Tv, u))
            checks.append(sub(mul(products["bracket"], Tu, Tv), apply(T, rhs)))
        if kind in ("APL", "APLP"):
            rhs = add(_family_apply(maps["l"], Tu, v), _family_apply(maps["r"], Tv, u))
            checks.append(sub(mul(products["circ"], Tu, Tv), apply(T, rhs)))
        if any(any(c != 0 for c in vec) for vec in checks):
            return False
    return True


def tpa_dual_condition_holds(products, maps):
    """``mu([x,y]) = 0`` and ``rho(x.y) = mu(x) rho(y)`` as matrices on every basis pair."""
    n = len(products["dot"])
    mu, rho = maps["mu"], maps["rho"]
    m = len(mu[0])
    for x, y in itertools.product(range(n), repeat=2):
        ex, ey = basis(n, x), basis(n, y)
        br, dt = mul(products["bracket"], ex, ey), mul(products["dot"], ex, ey)
        for v in range(m):
            ev = basis(m, v)
            if any(c != 0 for c in _family_apply(mu, br, ev)):
                return False
            lhs = _family_apply(rho, dt, ev)
            rhs = apply(mu[x], apply(rho[y], ev))
            if lhs != rhs:
                return False
    return True


def coproduct_image(D, x):
    n = len(D)
    return [[sum((x[k] * D[k][i][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]


def one_cocycle_holds(circ, D):
    """``delta([x,y]) = (id (x) ad(x) - L(x) (x) id)delta(y) - (id (x) ad(y) - L(y) (x) id)delta(x)``."""
    n = len(circ)
    br = commutator(circ)

    def act(x, M):
        out = [[Fraction(0)] * n for _ in range(n)]
        for i, j in itertools.product(range(n), repeat=2):
            if M[i][j] == 0:
                continue
            for k in range(n):
                out[i][k] += M[i][j] * br[x][j][k]
                out[k][j] -= M[i][j] * circ[x][i][k]
        return out

    for x, y in itertools.product(range(n), repeat=2):
        lhs = coproduct_image(D, br[x][y])
        ax, ay = act(x, coproduct_image(D, basis(n, y))), act(y, coproduct_image(D, basis(n, x)))
        if any(lhs[i][j] != ax[i][j] - ay[i][j] for i in range(n) for j in range(n)):
            return False
    return True
