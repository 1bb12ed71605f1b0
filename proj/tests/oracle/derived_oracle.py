"""Independent sympy check of the derived bundle E0^(1) built from the
torsion-free connection nabla_{X_j^i} X_l^k = 2 x^k delta_j^k X_l^i.

Frame of E0^(1): e0..e3 (E0 frame X11, X21, X12, X22), then e_a^e_b for a<b in
lexicographic order (indices 4..9).
"""
import itertools
import sympy as sp

x1, x2 = sp.symbols("x1 x2")
X = [x1, x2]
M = 4
IJ = [(1, 1), (1, 2), (2, 1), (2, 2)]
PAIRS = list(itertools.combinations(range(M), 2))
N = M + len(PAIRS)


def dl(a, b):
    return 1 if a == b else 0


def vec(n):
    return [sp.Integer(0)] * n


def anchor_gen(a):
    i, j = IJ[a]
    v = [0, 0]
    v[j - 1] = X[i - 1] ** 2
    return v


def vf_apply(v, f):
    return sp.expand(sum(v[k] * sp.diff(f, X[k]) for k in range(2)))


def bracket_e(a, b):
    i, j = IJ[a]
    k, l = IJ[b]
    out = vec(M)
    out[IJ.index((i, l))] += 2 * X[k - 1] * dl(j, k)
    out[IJ.index((k, j))] -= 2 * X[i - 1] * dl(l, i)
    return out


def nabla_e(a, b):
    i, j = IJ[a]
    k, l = IJ[b]
    out = vec(M)
    out[IJ.index((i, l))] += 2 * X[k - 1] * dl(j, k)
    return out


def add(u, v, c=1):
    return [sp.expand(p + c * q) for p, q in zip(u, v)]


def scale(u, f):
    return [sp.expand(f * p) for p in u]


def E_bracket(s, t):
    out = vec(M)
    for a in range(M):
        for b in range(M):
            if s[a] != 0 and t[b] != 0:
                out = add(out, scale(bracket_e(a, b), s[a] * t[b]))
    for b in range(M):
        for a in range(M):
            out[b] += s[a] * vf_apply(anchor_gen(a), t[b]) - t[a] * vf_apply(anchor_gen(a), s[b])
    return [sp.expand(p) for p in out]


def E_nabla(s, t):
    out = vec(M)
    for a in range(M):
        for b in range(M):
            out = add(out, scale(nabla_e(a, b), s[a] * t[b]))
            out[b] += s[a] * vf_apply(anchor_gen(a), t[b])
    return [sp.expand(p) for p in out]


def unit(a, n=M):
    v = vec(n)
    v[a] = sp.Integer(1)
    return v


def R(s, t, u):
    return add(add(E_nabla(s, E_nabla(t, u)), E_nabla(t, E_nabla(s, u)), -1), E_nabla(E_bracket(s, t), u), -1)


def wedge(s, t):
    """E-sections s, t -> E^(1) section supported on wedge frame."""
    out = vec(N)
    for p, (a, b) in enumerate(PAIRS):
        out[M + p] = sp.expand(s[a] * t[b] - s[b] * t[a])
    return out


def embed(s):
    return list(s) + [sp.Integer(0)] * len(PAIRS)


half = sp.Rational(1, 2)
# nabla^(1) on frame pairs
L = {}
for a in range(M):
    for b in range(M):
        L[(a, b)] = add(embed(nabla_e(a, b)), scale(wedge(unit(a), unit(b)), half))
    for q, (c, d) in enumerate(PAIRS):
        L[(a, M + q)] = add(wedge(nabla_e(a, c), unit(d)), wedge(unit(c), nabla_e(a, d)))
for p, (a, b) in enumerate(PAIRS):
    for c in range(M):
        L[(M + p, c)] = embed(R(unit(a), unit(b), unit(c)))
    for q, (c, d) in enumerate(PAIRS):
        L[(M + p, M + q)] = add(wedge(R(unit(a), unit(b), unit(c)), unit(d)), wedge(unit(c), R(unit(a), unit(b), unit(d))))

BR = {(u, v): add(L[(u, v)], L[(v, u)], -1) for u in range(N) for v in range(N)}


def anchor1(u):
    return anchor_gen(u) if u < M else [0, 0]


def D_bracket(s, t):
    out = vec(N)
    for a in range(N):
        if s[a] == 0:
            continue
        for b in range(N):
            if t[b] != 0:
                out = add(out, scale(BR[(a, b)], s[a] * t[b]))
    for b in range(N):
        for a in range(M):
            out[b] += s[a] * vf_apply(anchor_gen(a), t[b]) - t[a] * vf_apply(anchor_gen(a), s[b])
    return [sp.expand(p) for p in out]


bad = 0
for tr in itertools.combinations(range(N), 3):
    u, v, w = (unit(k, N) for k in tr)
    J = add(add(D_bracket(u, D_bracket(v, w)), D_bracket(v, D_bracket(w, u))), D_bracket(w, D_bracket(u, v)))
    if any(p != 0 for p in J):
        bad += 1
        print("nonzero J", tr, J)
print("nonzero jacobiator triples:", bad, "of", len(list(itertools.combinations(range(N), 3))))
print("[e0,e1] =", BR[(0, 1)])
print("[e0^e2, e1] =", BR[(M + 1, 1)])
