"""Independent sympy oracle for the E0 example values frozen into the C++ tests.

Sections are sympy column vectors over the frame (X11, X21, X12, X22), where
Xji is the matrix unit at row i, column j. Nothing here shares code with the
C++ engine; run it with `python3 tests/oracle/e0_oracle.py`.
"""
import itertools
import sympy as sp

x1, x2 = sp.symbols("x1 x2")
X = [x1, x2]
M = 4
# frame index -> (i, j) with generator X_j^i
IJ = [(1, 1), (1, 2), (2, 1), (2, 2)]


def e(a):
    v = sp.zeros(M, 1)
    v[a] = 1
    return v


def anchor_gen(a):
    i, j = IJ[a]
    v = [0, 0]
    v[j - 1] = X[i - 1] ** 2
    return v


def anchor(s):
    out = [0, 0]
    for a in range(M):
        g = anchor_gen(a)
        out = [sp.expand(out[k] + s[a] * g[k]) for k in range(2)]
    return out


def vf_apply(v, f):
    return sp.expand(sum(v[k] * sp.diff(f, X[k]) for k in range(2)))


def vf_bracket(v, w):
    return [sp.expand(vf_apply(v, w[k]) - vf_apply(w, v[k])) for k in range(2)]


def d(a, b):
    return 1 if a == b else 0


def gen_bracket_compact(a, b):
    i, j = IJ[a]
    k, l = IJ[b]
    out = sp.zeros(M, 1)
    out += 2 * X[k - 1] * d(j, k) * e(IJ.index((i, l)))
    out -= 2 * X[i - 1] * d(l, i) * e(IJ.index((k, j)))
    return out


def bracket(s, t, table=gen_bracket_compact, anc=anchor_gen):
    out = sp.zeros(M, 1)
    for a in range(M):
        for b in range(M):
            out += s[a] * t[b] * table(a, b)
    rs = [sp.expand(sum(s[a] * anc(a)[k] for a in range(M))) for k in range(2)]
    rt = [sp.expand(sum(t[a] * anc(a)[k] for a in range(M))) for k in range(2)]
    for b in range(M):
        out[b] += vf_apply(rs, t[b]) - vf_apply(rt, s[b])
    return out.applyfunc(sp.expand)


def jac(a, b, c):
    return (bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).applyfunc(sp.expand)


def show(v):
    names = ["X11", "X21", "X12", "X22"]
    return " + ".join(f"({sp.factor(v[a])})*{names[a]}" for a in range(M) if v[a] != 0) or "0"


K1 = x2**2 * e(0) - x1**2 * e(2)
K2 = x2**2 * e(1) - x1**2 * e(3)

print("== anchor compatibility defects (compact)")
for a, b in itertools.combinations(range(M), 2):
    lhs = anchor(bracket(e(a), e(b)))
    rhs = vf_bracket(anchor_gen(a), anchor_gen(b))
    print(a, b, [sp.expand(r - l) for l, r in zip(lhs, rhs)])

print("== brackets")
for a, b in itertools.combinations(range(M), 2):
    print(a, b, show(bracket(e(a), e(b))))

print("== itemized variant defect on (0,1): [rho,rho] - rho([,])")
item = 2 * x2 * e(1)
print(vf_bracket(anchor_gen(0), anchor_gen(1)), anchor(item),
      [sp.expand(p - q) for p, q in zip(vf_bracket(anchor_gen(0), anchor_gen(1)), anchor(item))])

print("== jacobiators")
for t in itertools.combinations(range(M), 3):
    J = jac(*[e(a) for a in t])
    print(t, show(J), "  K1 coeff/K2 coeff:",
          sp.simplify(J[0] / x2**2) if J[0] != 0 else 0, sp.simplify(J[1] / x2**2) if J[1] != 0 else 0)

print("== kernel table")
names = ["X11", "X21", "X12", "X22"]
for kn, K in (("K1", K1), ("K2", K2)):
    for a in range(M):
        print(f"[{kn},{names[a]}] =", show(bracket(K, e(a))))
print("[K1,K2] =", show(bracket(K1, K2)))

print("== leibniz example [X11, x1*X22]", show(bracket(e(0), x1 * e(3))))

print("== E0'' bracket")
A1 = e(0) + e(2)
B1 = e(1) + e(3)
print("[A1,B1] =", show(bracket(A1, B1)), " target:", show(-2 * x2 * A1 + 2 * x1 * B1))

print("== Nijenhuis (displayed J table)")
Jm = sp.zeros(M, M)
# columns: J(X11) = -X21, J(X21) = X11, J(X12) = -X22, J(X22) = X12
Jm[1, 0] = -1
Jm[0, 1] = 1
Jm[3, 2] = -1
Jm[2, 3] = 1
print("J^2 =", Jm * Jm)
for a, b in itertools.combinations(range(M), 2):
    A, B = e(a), e(b)
    N = bracket(Jm * A, Jm * B) - Jm * bracket(A, Jm * B) - Jm * bracket(Jm * A, B) - bracket(A, B)
    print(a, b, show(N.applyfunc(sp.expand)))

print("== torsion-free connection curvature")


def conn_tf(a, b):
    # nabla_{X_j^i} X_l^k = 2 x^k delta_j^k X_l^i
    i, j = IJ[a]
    k, l = IJ[b]
    return 2 * X[k - 1] * d(j, k) * e(IJ.index((i, l)))


def nabla(conn, s, t):
    out = sp.zeros(M, 1)
    for a in range(M):
        ra = anchor_gen(a)
        for b in range(M):
            out += s[a] * t[b] * conn(a, b)
            out[b] += s[a] * vf_apply(ra, t[b])
    return out.applyfunc(sp.expand)


def curv(conn, s, t, u):
    return (nabla(conn, s, nabla(conn, t, u)) - nabla(conn, t, nabla(conn, s, u)) - nabla(conn, bracket(s, t), u)).applyfunc(sp.expand)


for a, b in itertools.combinations(range(M), 2):
    for c in range(M):
        R = curv(conn_tf, e(a), e(b), e(c))
        if R != sp.zeros(M, 1):
            print(f"R({names[a]},{names[b]}){names[c]} =", show(R), " rho:", anchor(R))
print("torsion:", [show((nabla(conn_tf, e(a), e(b)) - nabla(conn_tf, e(b), e(a)) - bracket(e(a), e(b))).applyfunc(sp.expand))
                   for a, b in itertools.combinations(range(M), 2)])

print("== forms: d and d^2 on omega_{2}^{1} (frame index 1)")


def d1form(w):
    # w: list of 4 polys (values on frame). returns dict (a,b)->poly, a<b
    out = {}
    for a, b in itertools.combinations(range(M), 2):
        val = vf_apply(anchor_gen(a), w[b]) - vf_apply(anchor_gen(b), w[a])
        br = bracket(e(a), e(b))
        val -= sum(w[c] * br[c] for c in range(M))
        out[(a, b)] = sp.expand(val)
    return out


def eval2(w2, s, t):
    tot = 0
    for (a, b), c in w2.items():
        tot += c * (s[a] * t[b] - s[b] * t[a])
    return sp.expand(tot)


def d2form(w2):
    out = {}
    for a, b, c in itertools.combinations(range(M), 3):
        E = [e(a), e(b), e(c)]
        val = 0
        for i in range(3):
            rest = [E[k] for k in range(3) if k != i]
            val += (-1) ** i * vf_apply(anchor(E[i]), eval2(w2, *rest))
        for i, j in itertools.combinations(range(3), 2):
            rest = [E[k] for k in range(3) if k not in (i, j)]
            val += (-1) ** (i + j) * eval2(w2, bracket(E[i], E[j]), rest[0])
        out[(a, b, c)] = sp.expand(val)
    return out


for g in range(M):
    w = [1 if k == g else 0 for k in range(M)]
    dw = d1form(w)
    ddw = d2form(dw)
    print(f"d w{g} =", {k: v for k, v in dw.items() if v != 0})
    print(f"d2 w{g} =", {k: v for k, v in ddw.items() if v != 0},
          " w o J:", {t: sp.expand(jac(*[e(a) for a in t])[g]) for t in itertools.combinations(range(M), 3)})

print("df for f=x1:", [vf_apply(anchor_gen(a), x1) for a in range(M)])

print("== Courant: constant symmetric G solving rho G rho^T = 0")
gs = sp.symbols("g0:10")
G = sp.zeros(M, M)
idx = 0
for a in range(M):
    for b in range(a, M):
        G[a, b] = G[b, a] = gs[idx]
        idx += 1
R = sp.Matrix([[x1**2, 0, x2**2, 0], [0, x1**2, 0, x2**2]])
D = (R * G * R.T).applyfunc(sp.expand)
eqs = []
for ent in D:
    eqs += sp.Poly(ent, x1, x2).coeffs()
sol = sp.solve(eqs, gs, dict=True)
print("constant solutions:", sol)
Gs = G.subs(sol[0])
print(Gs, "det:", sp.factor(Gs.det()))
print("identity defect:", (R * R.T).applyfunc(sp.expand))
