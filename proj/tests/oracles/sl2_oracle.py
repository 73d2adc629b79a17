"""Independent oracle for the sl(2) and Block-algebra fixtures.

Works from the defining 2x2 matrix realization of sl(2) and plain
Fractions; shares no code with the C++ library. Run directly to print the
values frozen into tests/unit and tests/acceptance, or under pytest to
re-assert them.
"""
from fractions import Fraction as F
from itertools import product

# Basis order used throughout the project: H, X, Y.
H = ((F(1), F(0)), (F(0), F(-1)))
X = ((F(0), F(1)), (F(0), F(0)))
Y = ((F(0), F(0)), (F(1), F(0)))
BASIS = [H, X, Y]
NAMES = ["H", "X", "Y"]


def mm(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def msub(a, b):
    return tuple(tuple(a[i][j] - b[i][j] for j in range(2)) for i in range(2))


def comm(a, b):
    return msub(mm(a, b), mm(b, a))


def coords(m):
    # m = h*H + x*X + y*Y  =>  m00 = h, m01 = x, m10 = y
    return (m[0][0], m[0][1], m[1][0])


def from_coords(v):
    out = ((F(0), F(0)), (F(0), F(0)))
    for c, b in zip(v, BASIS):
        out = tuple(tuple(out[i][j] + c * b[i][j] for j in range(2)) for i in range(2))
    return out


def br(u, v):
    return coords(comm(from_coords(u), from_coords(v)))


def trace(m):
    return m[0][0] + m[1][1]


def S(u, v):
    return trace(mm(from_coords(u), from_coords(v)))


E = [(F(1), F(0), F(0)), (F(0), F(1), F(0)), (F(0), F(0), F(1))]


def lin(f):
    """Return f as a callable on coordinate vectors given images of basis."""
    imgs = [f(e) for e in E]

    def g(v):
        return tuple(sum(v[k] * imgs[k][i] for k in range(3)) for i in range(3))
    return g


def B(v):
    # B(H)=2X, B(X)=0, B(Y)=-H
    h, x, y = v
    return (-y, 2 * h, F(0))


def vadd(*vs):
    return tuple(sum(c) for c in zip(*vs))


def vneg(v):
    return tuple(-c for c in v)


def induced(u, v, R):
    return vadd(br(R(u), v), br(u, R(v)), vneg(br(R(u), R(v))))


def descendent(u, v, R, lam=F(0)):
    return vadd(br(R(u), v), br(u, R(v)), tuple(lam * c for c in br(u, v)))


# r = H (x) X - X (x) H as a bilinear form on g*: r(xi, eta) = sum r_ij xi_i eta_j
r_sl2 = {(0, 1): F(1), (1, 0): F(-1)}


def r_plus(r, xi):
    # r_+(xi) = r(xi, .) = sum_ij xi_i r_ij e_j
    out = [F(0)] * 3
    for (i, j), c in r.items():
        out[j] += xi[i] * c
    return tuple(out)


def r_minus(r, xi):
    # r_- = -r_+^*: <r_-(xi), eta> = -<xi, r_+(eta)>
    out = [F(0)] * 3
    for k in range(3):
        eta = E[k]
        out[k] = -sum(xi[a] * r_plus(r, eta)[a] for a in range(3))
    return tuple(out)


def coad(x, xi):
    # <ad*_x xi, z> = -<xi, [x, z]>
    return tuple(-sum(xi[a] * br(x, E[k])[a] for a in range(3)) for k in range(3))


def r_bracket(r, xi, eta):
    return vadd(coad(r_plus(r, xi), eta), vneg(coad(r_minus(r, eta), xi)))


def cobracket(r, x):
    """Delta(x) = (ad_x (x) 1 + 1 (x) ad_x) r as dict (i,j)->c."""
    out = {}
    for (i, j), c in r.items():
        left = br(x, E[i])
        right = br(x, E[j])
        for a in range(3):
            if left[a]:
                out[(a, j)] = out.get((a, j), F(0)) + c * left[a]
            if right[a]:
                out[(i, a)] = out.get((i, a), F(0)) + c * right[a]
    return {k: v for k, v in out.items() if v}


def det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def cybe(r, dim, bracket):
    """[[r,r]] by the three displayed contractions, brute force."""
    out = {}

    def add(key, c):
        if c:
            out[key] = out.get(key, F(0)) + c
    for (a, b), c1 in r.items():
        for (c, d), c2 in r.items():
            w = c1 * c2
            # [r12, r13] = [x_a, x_c] (x) y_b (x) y_d
            v = bracket(a, c)
            for p in range(dim):
                add((p, b, d), w * v[p])
            # [r13, r23] = x_a (x) x_c (x) [y_b, y_d]
            v = bracket(b, d)
            for p in range(dim):
                add((a, c, p), w * v[p])
            # [r12, r23] = x_a (x) [y_b, x_c] (x) y_d
            v = bracket(b, c)
            for p in range(dim):
                add((a, p, d), w * v[p])
    return {k: v for k, v in out.items() if v}


def sl2_by_index(i, j):
    return br(E[i], E[j])


def semidirect_ad_bracket(i, j):
    """sl2 |x ad sl2 on 6 coordinates: [x+u, y+v] = [x,y] + ad_x v - ad_y u."""
    def split(k):
        e = [F(0)] * 6
        e[k] = F(1)
        return tuple(e[:3]), tuple(e[3:])
    x, u = split(i)
    y, v = split(j)
    top = br(x, y)
    bottom = vadd(br(x, v), vneg(br(y, u)))
    return top + bottom


def block_checks(q, lo, hi, drop_singular):
    checked = skipped = singular = 0
    for m, i, n, j in product(range(lo, hi + 1), repeat=4):
        if m + i + 1 == 0 or n + j + 1 == 0:
            if not drop_singular:
                raise ValueError("singular index in window")
            singular += 1
            continue
        c = n * (i + q) - m * (j + q)
        a = F(1, m + i + 1)
        b = F(1, n + j + 1)
        s = m + n + i + j + 1
        induced = c * a + c * b - c * a * b
        closed = F(s) * c / ((m + i + 1) * (n + j + 1))
        assert induced == closed
        if s == 0:
            skipped += 1
            continue
        lhs = c * a * b
        rhs = (c * a + c * b - c * a * b) * F(1, s)
        assert lhs == rhs, (m, i, n, j)
        checked += 1
    return checked, skipped, singular


def dual_br(xi, eta):
    return r_bracket(r_sl2, xi, eta)


def coad_dual(xi, x):
    # <ad*_xi x, eta> = -<x, [xi, eta]_*>, a vector of g
    return tuple(-sum(x[a] * dual_br(xi, E[k])[a] for a in range(3)) for k in range(3))


def double_mixed(x, xi):
    """[x, xi] in g |><| g*_r as (g part, g* part): ad*_x xi - ad*_xi x."""
    return vneg(coad_dual(xi, x)), coad(x, xi)


def rey1_residual(R, Rd, i):
    """ad*_{Rx}(Rd xi) - Rd(ad*_x(Rd xi) + ad*_{Rx} xi - ad*_{Rx}(Rd xi)) for x = e_i, as columns over xi."""
    x = E[i]
    cols = []
    for a in range(3):
        xi = E[a]
        lhs = coad(R(x), Rd(xi))
        inner = vadd(coad(x, Rd(xi)), coad(R(x), xi), vneg(coad(R(x), Rd(xi))))
        cols.append(vadd(lhs, vneg(Rd(inner))))
    return cols


def minus_BT(v):
    # -B^t on g*: B^t(H*) = 2X*... columns of B^t are rows of B
    h, x, y = v
    return (-(2 * x), F(0), -(-h))


def plus_BT(v):
    return vneg(minus_BT(v))


def rb_residual(R, lam, i, j):
    u, v = E[i], E[j]
    return vadd(br(R(u), R(v)), vneg(R(descendent(u, v, R, lam))))


def qrb_form_residual(R, lam):
    return [[S(u, R(v)) + S(R(u), v) + lam * S(u, v) for v in E] for u in E]


def prelie_relrb(u, v):
    """{u,v} = ad*_{r_+ u} v on sl2*, K = r_+ of r_sl2."""
    return coad(r_plus(r_sl2, u), v)


def reynolds_on_rk(rk, R6):
    """((R (+) -T^t) (x) 1 + 1 (x) (R (+) -T^t)) r_K as dict."""
    out = {}
    for (i, j), c in rk.items():
        for a in range(6):
            if R6[a][i]:
                out[(a, j)] = out.get((a, j), F(0)) + R6[a][i] * c
            if R6[a][j]:
                out[(i, a)] = out.get((i, a), F(0)) + R6[a][j] * c
    return {k: v for k, v in out.items() if v}


def compute():
    out = {}
    out["sl2 [H,X]"] = br(E[0], E[1])
    out["sl2 [H,Y]"] = br(E[0], E[2])
    out["sl2 [X,Y]"] = br(E[1], E[2])
    out["trace gram"] = [[S(a, b) for b in E] for a in E]
    out["induced [H,Y]_B"] = induced(E[0], E[2], B)
    out["induced [H,X]_B"] = induced(E[0], E[1], B)
    out["induced [X,Y]_B"] = induced(E[1], E[2], B)
    out["ns H<Y"] = br(B(E[0]), E[2])
    out["ns H>Y"] = vneg(br(B(E[0]), B(E[2])))
    out["descendent [H,X]_B"] = descendent(E[0], E[1], B)
    out["descendent [H,Y]_B"] = descendent(E[0], E[2], B)
    out["descendent [X,Y]_B"] = descendent(E[1], E[2], B)
    out["rb B l=0"] = [rb_residual(B, F(0), i, j) for i in range(3) for j in range(i + 1, 3)]
    out["qrb form B l=0"] = qrb_form_residual(B, F(0))
    out["rb Id l=-1"] = [rb_residual(lambda v: v, F(-1), i, j) for i in range(3) for j in range(i + 1, 3)]
    out["descendent Id l=-1 [H,X]"] = descendent(E[0], E[1], lambda v: v, F(-1))
    out["r-bracket [H*,X*]"] = r_bracket(r_sl2, E[0], E[1])
    out["r-bracket [H*,Y*]"] = r_bracket(r_sl2, E[0], E[2])
    out["r-bracket [X*,Y*]"] = r_bracket(r_sl2, E[1], E[2])
    out["cobracket Delta(H)"] = cobracket(r_sl2, E[0])
    out["cobracket Delta(X)"] = cobracket(r_sl2, E[1])
    out["cobracket Delta(Y)"] = cobracket(r_sl2, E[2])
    out["cybe r_sl2"] = cybe(r_sl2, 3, sl2_by_index)
    out["cybe H(x)H"] = cybe({(0, 0): F(1)}, 3, sl2_by_index)
    out["cybe X(x)Y-Y(x)X"] = cybe({(1, 2): F(1), (2, 1): F(-1)}, 3, sl2_by_index)
    # Casimir 1/2 H(x)H + X(x)Y + Y(x)X: I = r_+ - r_- = r + r^T as matrix.
    cas = {(0, 0): F(1, 2), (1, 2): F(1), (2, 1): F(1)}
    imat = [[cas.get((i, j), F(0)) + cas.get((j, i), F(0)) for j in range(3)] for i in range(3)]
    out["casimir I"] = imat
    out["casimir det I"] = det3(imat)
    out["casimir Delta(H)"] = cobracket(cas, E[0])
    out["casimir Delta(X)"] = cobracket(cas, E[1])
    # r_K for K = r_+ of r_sl2 with the coadjoint rep: ambient sl2 |x ad sl2.
    K = [[F(0), F(-1), F(0)], [F(1), F(0), F(0)], [F(0), F(0), F(0)]]
    rk = {}
    for i in range(3):
        for a in range(3):
            if K[i][a]:
                rk[(3 + a, i)] = K[i][a]
                rk[(i, 3 + a)] = -K[i][a]
    out["r_K entries"] = dict(sorted(rk.items()))
    out["cybe r_K"] = cybe(rk, 6, semidirect_ad_bracket)
    bm = [[B(E[j])[i] for j in range(3)] for i in range(3)]
    R6 = [[F(0)] * 6 for _ in range(6)]
    for i in range(3):
        for j in range(3):
            R6[i][j] = bm[i][j]
            # W = sl2* with T = -B^t, so the W* block -T^t is B again
            R6[3 + i][3 + j] = bm[i][j]
    out["reynolds r_K"] = reynolds_on_rk(rk, R6)
    out["prelie table"] = {(i, j): prelie_relrb(E[i], E[j]) for i in range(3) for j in range(3)
                           if any(prelie_relrb(E[i], E[j]))}
    out["block q=1/2 [1,3]"] = block_checks(F(1, 2), 1, 3, False)
    out["block q=2 [1,2]"] = block_checks(F(2), 1, 2, False)
    for q in (F(1, 2), F(2), F(-3)):
        out[f"block q={q} [1,3]"] = block_checks(q, 1, 3, False)
        out[f"block q={q} [-3,3] drop"] = block_checks(q, -3, 3, True)
    out["double [H,X*]"] = double_mixed(E[0], E[1])
    out["double [H,Y*]"] = double_mixed(E[0], E[2])
    out["double [X,X*]"] = double_mixed(E[1], E[1])
    out["double [Y,H*]"] = double_mixed(E[2], E[0])
    out["rey1 +B^t x=H"] = rey1_residual(B, plus_BT, 0)
    out["rey1 +B^t x=X"] = rey1_residual(B, plus_BT, 1)
    out["rey1 -B^t x=H"] = rey1_residual(B, minus_BT, 0)
    out["rey1 -B^t x=X"] = rey1_residual(B, minus_BT, 1)
    out["rey1 -B^t x=Y"] = rey1_residual(B, minus_BT, 2)
    out["rey1 +B^t x=Y"] = rey1_residual(B, plus_BT, 2)
    return out


def test_frozen_values():
    v = compute()
    assert v["induced [H,Y]_B"] == (F(2), F(-4), F(0))
    assert v["descendent [H,Y]_B"] == (F(2), F(0), F(0))
    assert v["descendent [X,Y]_B"] == (F(0), F(2), F(0))
    assert v["descendent [H,X]_B"] == (F(0), F(0), F(0))
    assert all(not any(c) for c in v["rb B l=0"])
    assert all(not any(c) for c in v["qrb form B l=0"])
    assert all(not any(c) for c in v["rb Id l=-1"])
    assert v["descendent Id l=-1 [H,X]"] == (F(0), F(2), F(0))
    assert v["casimir I"] == [[1, 0, 0], [0, 0, 2], [0, 2, 0]]
    assert v["r-bracket [H*,X*]"] == (F(2), F(0), F(0))
    assert v["r-bracket [H*,Y*]"] == (F(0), F(0), F(0))
    assert v["r-bracket [X*,Y*]"] == (F(0), F(0), F(-2))
    assert v["cybe r_sl2"] == {}
    assert v["cybe r_K"] == {}
    assert v["casimir det I"] == F(-4)
    assert v["reynolds r_K"] == {}
    assert v["prelie table"] == {(0, 0): (0, 0, -1), (0, 1): (2, 0, 0), (1, 1): (0, 2, 0), (1, 2): (0, 0, -2)}
    assert v["casimir Delta(H)"] == {} and v["casimir Delta(X)"] == {}
    assert v["block q=1/2 [1,3]"] == (81, 0, 0)
    assert v["double [H,X*]"] == ((-2, 0, 0), (0, -2, 0))
    assert v["double [H,Y*]"] == ((0, 0, 0), (0, 0, 2))
    assert v["double [X,X*]"] == ((0, 0, 0), (2, 0, 0))
    assert v["double [Y,H*]"] == ((0, 0, 0), (0, 1, 0))
    for x in "HXY":
        assert not any(any(c) for c in v[f"rey1 -B^t x={x}"])
    assert v["rey1 +B^t x=Y"][0] == (0, 0, 4)


if __name__ == "__main__":
    for k, val in compute().items():
        print(f"{k}: {val}")
