"""The finite quantum sl2 algebra at a 4r-th root of unity and its module
calculus.

With omega = exp(2*pi*i/4r) and q = omega^2, the algebra A is generated by
X, Y, K with

    K X = q X K,   K Y = q^{-1} Y K,
    [X, Y] = (K^2 - K^{-2}) / (q - q^{-1}),
    X^r = Y^r = 0,  K^{4r} = 1,

comultiplication D(X) = X (x) K + K^{-1} (x) X (same shape for Y),
D(K) = K (x) K, antipode s(X) = -qX, s(Y) = -q^{-1}Y, s(K) = K^{-1}.
There is a unique k-dimensional module V^k for each k; in the weight basis
e_0 .. e_{k-1} (highest weight m = k-1)

    K e_j = omega^(m-2j) e_j,
    X e_j = [m-j+1] e_{j-1},   Y e_j = [j+1] e_{j+1},

with the quantum integers [n] = (q^n - q^{-n})/(q - q^{-1}).  Duals carry
the transposed antipode action.  The universal R element acts on any pair
of modules; summing its root-of-unity Fourier factors over the K-powers
collapses it to

    R(u (x) v) = sum_n  ((q - q^{-1})^n / [n]!) *
                 omega^(l*m' - n(l - m' + n + 1)) * X^n u (x) Y^n v

on weight vectors u, v of weights l, m'.  The flip of this action is the
braiding; the literal double Fourier sum is kept alongside as an
independent construction and the two are compared in the tests, together
with the Yang-Baxter and quasi-triangularity checks that pin the
conventions down.

At r = 4 all scalars are exact elements of Q(zeta_16); other levels run in
approximate complex arithmetic (tolerance 1e-9), selected explicitly.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import ApproximateOnlyError, CycNum
from .linalg import kron, mat_inverse, mat_mul

__all__ = [
    "Scalars", "scalars_for", "Module", "irrep", "dual_module",
    "quantum_integer", "braiding", "braiding_inv", "r_action",
    "universal_r_literal", "cupcap", "twist_scalar", "Operator",
    "QuantumAlgebra", "ColorError",
]


class ColorError(ValueError):
    pass


class Scalars:
    """Scalar backend: exact cyclotomic numbers at level 4, complex floats
    at any level.  All algebra below is written against this interface."""

    def __init__(self, r: int, mode: str):
        if r < 2:
            raise ColorError(f"level must be at least 2, got {r}")
        if mode == "exact":
            if r != 4:
                raise ApproximateOnlyError(
                    f"exact arithmetic is provided at level 4 only, not r={r}"
                )
            self.order = 16
        elif mode != "approx":
            raise ValueError(f"unknown mode {mode!r}")
        self.r = r
        self.mode = mode
        self.tol = 1e-9
        if mode == "exact":
            self.zero = CycNum.zero(16)
            self.one = CycNum.one(16)
        else:
            self.zero = 0j
            self.one = 1 + 0j

    def root(self, j: int):
        """omega^j, omega = exp(2*pi*i/4r)."""
        if self.mode == "exact":
            return CycNum.zeta(16, j)
        return cmath.exp(2j * cmath.pi * j / (4 * self.r))

    def from_int(self, n: int):
        if self.mode == "exact":
            return CycNum.from_int(n, 16)
        return complex(n)

    def from_fraction(self, f):
        if self.mode == "exact":
            return CycNum.from_fraction(f, 16)
        f = Fraction(f)
        return complex(f.numerator / f.denominator)

    def is_zero(self, x) -> bool:
        if self.mode == "exact":
            return not x
        return abs(x) < self.tol

    def conj(self, x):
        return x.conj() if self.mode == "exact" else x.conjugate()

    def __repr__(self):
        return f"Scalars(r={self.r}, {self.mode})"


@lru_cache(maxsize=None)
def scalars_for(r: int, mode: str = "exact") -> Scalars:
    return Scalars(r, mode)


@lru_cache(maxsize=None)
def quantum_integer(k: int, r: int, mode: str = "exact"):
    """[k] = (q^k - q^{-k})/(q - q^{-1}) = sin(pi k / r)/sin(pi / r)."""
    if k < 0:
        raise ColorError("quantum integer of a negative number")
    s = scalars_for(r, mode)
    if k == 0:
        return s.zero
    num = s.root(2 * k) - s.root(-2 * k)
    den = s.root(2) - s.root(-2)
    return num / den


@lru_cache(maxsize=None)
def _quantum_factorial(n: int, r: int, mode: str):
    s = scalars_for(r, mode)
    out = s.one
    for m in range(1, n + 1):
        out = out * quantum_integer(m, r, mode)
    return out


class Module:
    """A weight module with explicit action matrices.

    dim-many basis vectors with integer K-weights (K acts by omega^weight);
    x raises along the basis, y lowers.  Powers of x and y up to r-1 are
    precomputed for the braiding sums.
    """

    def __init__(self, color, dual, scalars, weights, x, y):
        self.color = color
        self.dual = dual
        self.scalars = scalars
        self.dim = len(weights)
        self.weights = tuple(weights)
        self.x = tuple(tuple(row) for row in x)
        self.y = tuple(tuple(row) for row in y)
        self.xpow = self._powers(self.x)
        self.ypow = self._powers(self.y)

    def _powers(self, m):
        s = self.scalars
        powers = [tuple(tuple(s.one if i == j else s.zero for j in range(self.dim))
                        for i in range(self.dim))]
        for _ in range(s.r - 1):
            powers.append(tuple(map(tuple, mat_mul(powers[-1], m, s.zero))))
        return powers

    def k_diag(self, power: int = 1):
        """Diagonal of K^power."""
        return tuple(self.scalars.root(power * w) for w in self.weights)

    def act(self, sym: str):
        """Action matrix of a generator: one of X, Y, K, K-."""
        s = self.scalars
        if sym == "X":
            return [list(r) for r in self.x]
        if sym == "Y":
            return [list(r) for r in self.y]
        if sym in ("K", "K-"):
            diag = self.k_diag(1 if sym == "K" else -1)
            return [[diag[i] if i == j else s.zero for j in range(self.dim)]
                    for i in range(self.dim)]
        raise ColorError(f"unknown generator {sym!r}")

    @property
    def signature(self):
        return ((self.color, self.dual),)

    def __repr__(self):
        star = "*" if self.dual else ""
        return f"V^{self.color}{star}(r={self.scalars.r})"


@lru_cache(maxsize=None)
def irrep(k: int, r: int, mode: str = "exact") -> Module:
    """The k-dimensional module V^k, 1 <= k <= r."""
    if not 1 <= k <= r:
        raise ColorError(f"color must lie in 1..{r}, got {k}")
    s = scalars_for(r, mode)
    m = k - 1
    weights = [m - 2 * j for j in range(k)]
    x = [[s.zero] * k for _ in range(k)]
    y = [[s.zero] * k for _ in range(k)]
    for j in range(1, k):
        x[j - 1][j] = quantum_integer(m - j + 1, r, mode)
    for j in range(k - 1):
        y[j + 1][j] = quantum_integer(j + 1, r, mode)
    return Module(k, False, s, weights, x, y)


@lru_cache(maxsize=None)
def dual_module(k: int, r: int, mode: str = "exact") -> Module:
    """V^k* on the dual basis, action through the antipode:
    (u.f)(v) = f(s(u) v), so X acts by -q X^T and Y by -q^{-1} Y^T."""
    base = irrep(k, r, mode)
    s = base.scalars
    q, qi = s.root(2), s.root(-2)
    dim = base.dim
    weights = [-w for w in base.weights]
    x = [[-(q * base.x[j][i]) for j in range(dim)] for i in range(dim)]
    y = [[-(qi * base.y[j][i]) for j in range(dim)] for i in range(dim)]
    return Module(k, True, s, weights, x, y)


def module_for(color: int, dual: bool, r: int, mode: str = "exact") -> Module:
    return dual_module(color, r, mode) if dual else irrep(color, r, mode)


def _braid_coeffs(s: Scalars):
    q, qi = s.root(2), s.root(-2)
    diff = q - qi
    coeffs = []
    power = s.one
    for n in range(s.r):
        coeffs.append(power / _quantum_factorial(n, s.r, s.mode))
        power = power * diff
    return coeffs


def _r_matrix(m1: Module, m2: Module, flip: bool):
    """Action of the universal R element on m1 (x) m2 (Fourier-collapsed
    over the K-power sums), optionally composed with the flip."""
    s = m1.scalars
    d1, d2 = m1.dim, m2.dim
    coeffs = _braid_coeffs(s)
    rows = d1 * d2
    out = [[s.zero] * (d1 * d2) for _ in range(rows)]
    for i1 in range(d1):
        lam = m1.weights[i1]
        for i2 in range(d2):
            mu = m2.weights[i2]
            col = i1 * d2 + i2
            for n in range(s.r):
                phase = coeffs[n] * s.root(lam * mu - n * (lam - mu + n + 1))
                if s.is_zero(phase):
                    continue
                xn, yn = m1.xpow[n], m2.ypow[n]
                for i1p in range(d1):
                    xv = xn[i1p][i1]
                    if not xv:
                        continue
                    for i2p in range(d2):
                        yv = yn[i2p][i2]
                        if not yv:
                            continue
                        row = (i2p * d1 + i1p) if flip else (i1p * d2 + i2p)
                        out[row][col] = out[row][col] + phase * xv * yv
    return out


@lru_cache(maxsize=None)
def _braiding_cached(k1, d1, k2, d2, r, mode, inverse):
    m1 = module_for(k1, d1, r, mode)
    m2 = module_for(k2, d2, r, mode)
    mat = _r_matrix(m1, m2, flip=True)
    if inverse:
        s = m1.scalars
        mat = mat_inverse(mat, s.one, s.zero, s.is_zero)
    return tuple(tuple(row) for row in mat)


def braiding_matrix(k1, d1, k2, d2, r, mode="exact", inverse=False):
    """Flip R-matrix on the (possibly dual) modules, as a dense matrix
    mapping m1 (x) m2 to m2 (x) m1."""
    return _braiding_cached(k1, d1, k2, d2, r, mode, inverse)


def r_action(k1, d1, k2, d2, r, mode="exact"):
    """Universal R action without the flip (for the quasi-triangularity
    identities)."""
    m1 = module_for(k1, d1, r, mode)
    m2 = module_for(k2, d2, r, mode)
    return _r_matrix(m1, m2, flip=False)


def universal_r_literal(k1, d1, k2, d2, r, mode="exact"):
    """The universal R element as the literal normalized double sum over
    K-powers,

        R = (1/4r) sum_{n<r; a,b<4r} ((q-q^{-1})^n/[n]!) t^{ab+(b-a+1)n}
            X^n K^a (x) Y^n K^b,   t = omega^{-1},

    evaluated on m1 (x) m2.  Quadratically slower than the collapsed form;
    kept as an independent construction for cross-checking."""
    m1 = module_for(k1, d1, r, mode)
    m2 = module_for(k2, d2, r, mode)
    s = m1.scalars
    d1m, d2m = m1.dim, m2.dim
    coeffs = _braid_coeffs(s)
    four_r = 4 * r
    inv_4r = s.from_fraction(Fraction(1, four_r))
    out = [[s.zero] * (d1m * d2m) for _ in range(d1m * d2m)]
    for i1 in range(d1m):
        lam = m1.weights[i1]
        for i2 in range(d2m):
            mu = m2.weights[i2]
            col = i1 * d2m + i2
            for n in range(r):
                xn, yn = m1.xpow[n], m2.ypow[n]
                targets = [
                    (i1p, i2p, xn[i1p][i1] * yn[i2p][i2])
                    for i1p in range(d1m) for i2p in range(d2m)
                    if xn[i1p][i1] and yn[i2p][i2]
                ]
                if not targets:
                    continue
                for a in range(four_r):
                    for b in range(four_r):
                        # t = omega^{-1}: t-exponent ab+(b-a+1)n, K-powers add a*lam+b*mu
                        e = a * lam + b * mu - (a * b + (b - a + 1) * n)
                        phase = inv_4r * coeffs[n] * s.root(e)
                        if s.is_zero(phase):
                            continue
                        for i1p, i2p, w in targets:
                            row = i1p * d2m + i2p
                            out[row][col] = out[row][col] + phase * w
    return out


@lru_cache(maxsize=None)
def _cupcap_cached(kind, k, r, mode):
    mod = irrep(k, r, mode)
    s = mod.scalars
    dim = mod.dim
    if kind in ("E", "E_check"):
        mat = [[s.zero] * (dim * dim)]
        for i in range(dim):
            mat[0][i * dim + i] = s.one if kind == "E" else s.root(2 * mod.weights[i])
    elif kind in ("N", "N_check"):
        mat = [[s.zero] for _ in range(dim * dim)]
        for i in range(dim):
            mat[i * dim + i][0] = s.one if kind == "N" else s.root(-2 * mod.weights[i])
    else:
        raise ColorError(f"unknown cup/cap kind {kind!r}")
    return tuple(tuple(row) for row in mat)


def cupcap_matrix(kind: str, k: int, r: int, mode: str = "exact"):
    """The four evaluation/coevaluation operators on color k:

        E:  V* (x) V -> C,  f (x) v -> f(v)
        E_check: V (x) V* -> C,  v (x) f -> f(K^2 v)
        N:  C -> V (x) V*,  1 -> sum e_i (x) e^i
        N_check: C -> V* (x) V,  1 -> sum e^i (x) K^{-2} e_i
    """
    if not 1 <= k <= r:
        raise ColorError(f"color must lie in 1..{r}, got {k}")
    return _cupcap_cached(kind, k, r, mode)


_CUPCAP_SIGS = {
    "E": (((None, True), (None, False)), ()),
    "E_check": (((None, False), (None, True)), ()),
    "N": ((), ((None, False), (None, True))),
    "N_check": ((), ((None, True), (None, False))),
}


@lru_cache(maxsize=None)
def twist_scalar(k: int, r: int, mode: str = "exact"):
    """Scalar by which a positive kink multiplies a color-k strand:
    the partial trace of (1 (x) K^2) R-check over the second factor."""
    mod = irrep(k, r, mode)
    s = mod.scalars
    rh = braiding_matrix(k, False, k, False, r, mode)
    k2 = mod.k_diag(2)
    vals = []
    for i in range(mod.dim):
        acc = s.zero
        for j in range(mod.dim):
            idx = i * mod.dim + j
            acc = acc + k2[j] * rh[idx][idx]
        vals.append(acc)
    for v in vals[1:]:
        if not s.is_zero(v - vals[0]):
            raise ArithmeticError("kink closure is not scalar; conventions broken")
    return vals[0]


class Operator:
    """A matrix with typed boundary signatures.

    dom and cod are tuples of (color, dual) pairs; mat has
    prod(cod dims) rows and prod(dom dims) columns.  Scalars (closed
    diagrams) are 1x1 operators with empty signatures.
    """

    def __init__(self, dom, cod, mat):
        self.dom = tuple((int(c), bool(d)) for c, d in dom)
        self.cod = tuple((int(c), bool(d)) for c, d in cod)
        self.mat = tuple(tuple(row) for row in mat)
        if len(self.mat) != self.dim_cod or any(len(r) != self.dim_dom for r in self.mat):
            raise ColorError(
                f"matrix shape {len(self.mat)}x{len(self.mat[0]) if self.mat else 0} "
                f"does not match signatures {self.cod} <- {self.dom}"
            )

    @property
    def dim_dom(self) -> int:
        out = 1
        for c, _ in self.dom:
            out *= c
        return out

    @property
    def dim_cod(self) -> int:
        out = 1
        for c, _ in self.cod:
            out *= c
        return out

    def compose(self, other: "Operator") -> "Operator":
        if other.cod != self.dom:
            raise ColorError(f"cannot compose: {self.dom} after {other.cod}")
        zero = 0 if not self.mat or not self.mat[0] else self.mat[0][0] * 0
        return Operator(other.dom, self.cod, mat_mul(self.mat, other.mat, zero))

    def tensor(self, other: "Operator") -> "Operator":
        zero = 0 if not self.mat or not self.mat[0] else self.mat[0][0] * 0
        return Operator(self.dom + other.dom, self.cod + other.cod,
                        kron(self.mat, other.mat, zero))

    def scalar(self):
        if self.dom or self.cod:
            raise ColorError("operator is not a closed-diagram scalar")
        return self.mat[0][0]

    def __eq__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return (self.dom, self.cod, self.mat) == (other.dom, other.cod, other.mat)

    def __repr__(self):
        return f"Operator({self.cod} <- {self.dom})"

    def to_json(self) -> dict:
        def entry(v):
            if isinstance(v, CycNum):
                return v.to_json()
            v = complex(v)
            return {"approx": [v.real, v.imag]}
        return {
            "domain": [{"color": c, "dual": d} for c, d in self.dom],
            "codomain": [{"color": c, "dual": d} for c, d in self.cod],
            "matrix": [[entry(v) for v in row] for row in self.mat],
        }


def braiding(k: int, l: int, r: int, mode: str = "exact") -> Operator:
    """The braiding V^k (x) V^l -> V^l (x) V^k as a typed operator."""
    mat = braiding_matrix(k, False, l, False, r, mode)
    return Operator(((k, False), (l, False)), ((l, False), (k, False)), mat)


def braiding_inv(k: int, l: int, r: int, mode: str = "exact") -> Operator:
    mat = braiding_matrix(l, False, k, False, r, mode, inverse=True)
    return Operator(((l, False), (k, False)), ((k, False), (l, False)), mat)


def cupcap(kind: str, k: int, r: int, mode: str = "exact") -> Operator:
    dom_t, cod_t = _CUPCAP_SIGS[kind]
    dom = tuple((k, d) for _, d in dom_t)
    cod = tuple((k, d) for _, d in cod_t)
    return Operator(dom, cod, cupcap_matrix(kind, k, r, mode))


class QuantumAlgebra:
    """Facade bundling the level, scalar backend, Hopf structure data and
    the module builders."""

    #: comultiplication of the generators, as sums of pure tensors
    COPRODUCT = {
        "K": (("K", "K"),),
        "X": (("X", "K"), ("K-", "X")),
        "Y": (("Y", "K"), ("K-", "Y")),
    }
    #: antipode s on generators: (generator, power of omega in the scalar)
    ANTIPODE = {"K": ("K-", 0), "X": ("X", 2), "Y": ("Y", -2)}  # s(X) = -q X etc.
    COUNIT = {"K": 1, "X": 0, "Y": 0}

    def __init__(self, r: int, mode: str = "exact"):
        self.r = r
        self.mode = mode
        self.scalars = scalars_for(r, mode)

    def module(self, k: int) -> Module:
        return irrep(k, self.r, self.mode)

    def dual(self, k: int) -> Module:
        return dual_module(k, self.r, self.mode)

    def quantum_integer(self, k: int):
        return quantum_integer(k, self.r, self.mode)

    def braiding(self, k: int, l: int) -> Operator:
        return braiding(k, l, self.r, self.mode)

    def braiding_inv(self, k: int, l: int) -> Operator:
        return braiding_inv(k, l, self.r, self.mode)

    def cupcap(self, kind: str, k: int) -> Operator:
        return cupcap(kind, k, self.r, self.mode)

    def coproduct_action(self, sym: str, m1: Module, m2: Module, flipped=False):
        """Matrix of Delta(sym) (or of the flipped coproduct) on m1 (x) m2."""
        s = self.scalars
        terms = self.COPRODUCT[sym]
        if flipped:
            terms = tuple((b, a) for a, b in terms)
        total = None
        for a, b in terms:
            part = kron(m1.act(a), m2.act(b), s.zero)
            if total is None:
                total = part
            else:
                total = [[u + v for u, v in zip(r1, r2)] for r1, r2 in zip(total, part)]
        return total

    def relations_hold(self, m: Module) -> bool:
        """Check the defining relations as matrices on a module."""
        s = self.scalars
        q, qi = s.root(2), s.root(-2)
        x, y = m.act("X"), m.act("Y")
        kd = m.k_diag(1)
        kx = [[kd[i] * x[i][j] for j in range(m.dim)] for i in range(m.dim)]
        xk = [[x[i][j] * kd[j] for j in range(m.dim)] for i in range(m.dim)]
        if any(not s.is_zero(kx[i][j] - q * xk[i][j])
               for i in range(m.dim) for j in range(m.dim)):
            return False
        ky = [[kd[i] * y[i][j] for j in range(m.dim)] for i in range(m.dim)]
        yk = [[y[i][j] * kd[j] for j in range(m.dim)] for i in range(m.dim)]
        if any(not s.is_zero(ky[i][j] - qi * yk[i][j])
               for i in range(m.dim) for j in range(m.dim)):
            return False
        comm = [[u - v for u, v in zip(r1, r2)]
                for r1, r2 in zip(mat_mul(x, y, s.zero), mat_mul(y, x, s.zero))]
        k2, k2i = m.k_diag(2), m.k_diag(-2)
        target = [[(k2[i] - k2i[i]) / (q - qi) if i == j else s.zero
                   for j in range(m.dim)] for i in range(m.dim)]
        if any(not s.is_zero(comm[i][j] - target[i][j])
               for i in range(m.dim) for j in range(m.dim)):
            return False
        xr = mat_mul(m.xpow[-1], x, s.zero)
        yr = mat_mul(m.ypow[-1], y, s.zero)
        if any(not s.is_zero(v) for mat in (xr, yr) for row in mat for v in row):
            return False
        # K^{4r} = 1: every weight satisfies omega^(4r w) = 1
        if any(not s.is_zero(s.root(4 * self.r * w) - s.one) for w in m.weights):
            return False
        return True
