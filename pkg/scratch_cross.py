import time
from qsl2 import *
from qsl2.cyclotomic import CycNum, sqrt2
from qsl2.diagrams import builtin, cable, FramedLink
from qsl2.evaluate import colored_invariant
from qsl2.skein import skein_I, jones_from_skein, colored_via_cabling

S2 = sqrt2(16)
wh = builtin("whitehead")

# independent skein values of the 0-framed cables
t0 = time.time()
for mult, label in [((2, 1), "K2H"), ((1, 2), "KH2"), ((2, 2), "K2H2")]:
    c = cable(wh, mult)
    t1 = time.time()
    v = skein_I(c)
    print(f"I({label}) framing(0,0)-cable = {v}   [{c.diagram.ncomponents} comps, "
          f"{len(c.diagram.crossings)} crossings, {time.time()-t1:.2f}s]")

# cross-engine: colored_via_cabling vs evaluator on whitehead & hopf, colors {1,2,3}^2
for name in ("whitehead", "hopf"):
    link = builtin(name)
    ok = True
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            a = colored_via_cabling(link, (i, j))
            b = colored_invariant(link, (i, j))
            if a != b:
                ok = False
                print(f"MISMATCH {name} ({i},{j}): cabling={a} evaluator={b}")
    print(f"cross-engine {name} colors (1..3)^2: {'OK' if ok else 'FAIL'}")

# cross-engine corpus with framings -1,0,1 per component at color 2
corpus = ["unknot", "unlink2", "hopf", "trefoil", "whitehead"]
from itertools import product
count = 0
for name in corpus:
    base = builtin(name)
    n = base.ncomponents
    for fr in product((-1, 0, 1), repeat=n):
        link = base.with_framing(fr)
        a = colored_invariant(link, (2,) * n)
        b = jones_from_skein(link)
        assert a == b, (name, fr, a, b)
        count += 1
print(f"bridge formula exact on {count} (link, framing) pairs")

# twisted-matrix framing relation: direct evaluation vs twist-corrected
from qsl2.algebra import twist_scalar
m00 = transfer_matrix(wh)
for (a, b) in [(1, 0), (0, 1), (2, 2), (-1, 3)]:
    m = transfer_matrix(wh.with_framing((a, b)))
    tw = [twist_scalar(k, 4) for k in (1, 2, 3)]
    for j in range(3):
        for i in range(3):
            assert m.entries[j][i] == tw[i] ** a * tw[j] ** b * m00.entries[j][i], (a, b, i, j)
print("framing change = twist scalars: OK")

# limit ranks at many framings
for fr in [(0, 0), (0, 2), (2, 0), (1, 1), (-1, 2), (3, 3)]:
    m = transfer_matrix(wh.with_framing(fr))
    print(f"framing {fr}: limit_rank {limit_rank(m)}, det {m.determinant()}")

print("total", time.time() - t0, "s")
