import time
from fractions import Fraction

from qsl2 import *
from qsl2.algebra import braiding_matrix, r_action, universal_r_literal, scalars_for, irrep, dual_module, QuantumAlgebra
from qsl2.evaluate import ColoredDiagram, evaluate_scalar, colored_invariant
from qsl2.diagrams import braid_closure, builtin, insert_kink, Gen, SliceDiagram
from qsl2.linalg import mat_mul, kron
from qsl2.cyclotomic import CycNum, sqrt2, constants

t0 = time.time()
Z = CycNum.zeta(16)
S2 = sqrt2(16)
one = CycNum.one(16)

# 1. field basics
assert S2 * S2 == 2, S2 * S2
assert S2.inv() == S2 / 2
assert (Z ** 4) * (Z ** 4) == -1
re, im = S2.approx()
assert abs(re - 2 ** 0.5) < 1e-12 and abs(im) < 1e-12
print("field ok")

# 2. quantum integers at r=4
qi = [quantum_integer(k, 4) for k in range(5)]
assert qi[0] == CycNum.zero(16)
assert qi[1] == one
assert qi[2] == S2, qi[2]
assert qi[3] == one, qi[3]
assert qi[4] == CycNum.zero(16), qi[4]
print("quantum integers ok")

# relations on modules
A = QuantumAlgebra(4)
for k in (1, 2, 3, 4):
    assert A.relations_hold(irrep(k, 4)), k
    assert A.relations_hold(dual_module(k, 4)), k
print("module relations ok")

# 3. unknot = [k]
u = builtin("unknot")
for k in (1, 2, 3, 4):
    v = colored_invariant(u, (k,))
    assert v == qi[k], (k, v)
print("unknot ok")

# 4. zig-zags: straight strand identities (down and up strands)
zigzags = [
    ((-1,), [Gen("cup", 1, "rl"), Gen("cap", 0, "rl")], "down/cup-right"),
    ((-1,), [Gen("cup", 0, "lr"), Gen("cap", 1, "lr")], "down/cup-left"),
    ((+1,), [Gen("cup", 1, "lr"), Gen("cap", 0, "lr")], "up/cup-right"),
    ((+1,), [Gen("cup", 0, "rl"), Gen("cap", 1, "rl")], "up/cup-left"),
]
for bottom, word, label in zigzags:
    for k in (1, 2, 3):
        d = SliceDiagram(bottom, word)
        op = evaluate(ColoredDiagram(d, [k] * d.ncomponents), 4)
        idm = tuple(tuple(one if i == j else CycNum.zero(16) for j in range(k)) for i in range(k))
        assert op.mat == idm, (label, k, op.mat)
print("zigzags ok")

# 5. kink scalar
ku = builtin("unknot_kink_pos")
for k in (2, 3):
    v = colored_invariant(ku, (k,))
    tw = twist_scalar(k, 4)
    print(f"kink color {k}: value {v}, twist {tw}, [k]*tw == v: {qi[k] * tw == v}")
assert twist_scalar(2, 4) == Z ** 3, twist_scalar(2, 4)
assert twist_scalar(3, 4) == Z ** 8, twist_scalar(3, 4)

# 6. Yang-Baxter on V^a (x) V^b (x) V^c
s = scalars_for(4, "exact")
def eye(n):
    return [[one if i == j else CycNum.zero(16) for j in range(n)] for i in range(n)]
for (a, b, c) in [(2, 2, 2), (2, 2, 3), (2, 3, 2), (3, 2, 2), (2, 3, 3), (3, 3, 3)]:
    Rab = [list(r) for r in braiding_matrix(a, False, b, False, 4)]
    Rac = [list(r) for r in braiding_matrix(a, False, c, False, 4)]
    Rbc = [list(r) for r in braiding_matrix(b, False, c, False, 4)]
    lhs = mat_mul(kron(Rbc, eye(a), s.zero),
                  mat_mul(kron(eye(b), Rac, s.zero), kron(Rab, eye(c), s.zero), s.zero), s.zero)
    rhs = mat_mul(kron(eye(c), Rab, s.zero),
                  mat_mul(kron(Rac, eye(b), s.zero), kron(eye(a), Rbc, s.zero), s.zero), s.zero)
    assert lhs == rhs, (a, b, c)
print("yang-baxter ok")

# 7. quasi-triangularity on pairs
for (k, l) in [(2, 2), (2, 3), (3, 2), (3, 3)]:
    m1, m2 = irrep(k, 4), irrep(l, 4)
    R = r_action(k, False, l, False, 4)
    for sym in ("X", "Y", "K"):
        lhs = mat_mul(R, A.coproduct_action(sym, m1, m2), s.zero)
        rhs = mat_mul(A.coproduct_action(sym, m1, m2, flipped=True), R, s.zero)
        assert lhs == rhs, (k, l, sym)
print("quasi-triangularity ok")

# 8. literal universal R equals collapsed form
for (k1, d1, k2, d2) in [(2, False, 2, False), (2, False, 3, False), (2, True, 2, False), (3, False, 2, True)]:
    lit = universal_r_literal(k1, d1, k2, d2, 4)
    fast = r_action(k1, d1, k2, d2, 4)
    assert [list(r) for r in lit] == [list(r) for r in fast], (k1, d1, k2, d2)
print("literal R ok")

# 9. hopf values
h = builtin("hopf")
lm = h.linking_matrix()
print("hopf linking", lm.matrix)
assert lm.matrix == ((0, 1), (1, 0))
assert colored_invariant(h, (2, 2)) == CycNum.zero(16)
v23 = colored_invariant(h, (2, 3))
print("hopf (2,3):", v23, "expected -sqrt2:", -S2)
assert v23 == -S2
assert colored_invariant(h, (1, 2)) == S2
assert colored_invariant(h, (3, 3)) == one  # [9] = 1 at r=4
print("hopf ok")

# 10. skein engine
assert skein_I(builtin("unknot")) == one
assert skein_I(builtin("unlink2")) == S2
assert skein_I(builtin("hopf")) == CycNum.zero(16)
assert skein_I(builtin("trefoil")) == -one
un = [skein_I(FramedLink(braid_closure([1] * n, 2), (0, 0) if n % 2 == 0 else (0,))) for n in range(7)]
print("torus family:", un)
t1 = time.time()
wh = builtin("whitehead")
print("whitehead writhes:", wh.diagram.writhes, "lk:", wh.linking_matrix().matrix)
iw = skein_I(wh)
print("I(whitehead) =", iw, "(expected -sqrt2)", time.time() - t1, "s")
assert iw == -S2

# 11. whitehead matrix at framing (0,0)
t1 = time.time()
vals = evaluate_colored_link_family(wh, [(i, j) for i in (1, 2, 3) for j in (1, 2, 3)])
print("J matrix (0,0):")
for j in (1, 2, 3):
    print("  ", [vals[(i, j)] for i in (1, 2, 3)])
print("matrix time", time.time() - t1, "s")

m = transfer_matrix(wh)
det = m.determinant()
print("det M00 =", det)
print("limit rank:", limit_rank(m))
print("total time", time.time() - t0, "s")
