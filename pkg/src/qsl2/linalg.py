"""Dense linear algebra over field-like scalars.

Works uniformly for Fraction, CycNum and complex entries: the scalar type
only needs +, -, *, / and truthiness.  For floating scalars pass an
``is_zero`` predicate with a tolerance; the default treats exactly-falsy
values as zero, which is right for exact types.

Matrices are lists (or tuples) of rows; functions never mutate their
arguments and return lists of lists.
"""

from __future__ import annotations

from fractions import Fraction


class SingularMatrixError(ArithmeticError):
    pass


def default_is_zero(x) -> bool:
    return not x


def identity(n, one, zero):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_mul(a, b, zero):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        arow = a[i]
        orow = out[i]
        for t in range(k):
            c = arow[t]
            if not c:
                continue
            brow = b[t]
            for j in range(m):
                if brow[j]:
                    orow[j] = orow[j] + c * brow[j]
    return out


def mat_vec(a, v, zero):
    out = [zero] * len(a)
    for i, row in enumerate(a):
        acc = zero
        for c, x in zip(row, v):
            if c and x:
                acc = acc + c * x
        out[i] = acc
    return out


def mat_pow(a, k, one, zero):
    n = len(a)
    result = identity(n, one, zero)
    base = [list(r) for r in a]
    while k:
        if k & 1:
            result = mat_mul(result, base, zero)
        base = mat_mul(base, base, zero)
        k >>= 1
    return result


def kron(a, b, zero):
    """Kronecker product with the first factor most significant."""
    na, ma = len(a), len(a[0]) if a else 0
    nb, mb = len(b), len(b[0]) if b else 0
    out = [[zero] * (ma * mb) for _ in range(na * nb)]
    for i in range(na):
        for j in range(ma):
            c = a[i][j]
            if not c:
                continue
            for k in range(nb):
                for l in range(mb):
                    if b[k][l]:
                        out[i * nb + k][j * mb + l] = c * b[k][l]
    return out


def transpose(a):
    return [list(col) for col in zip(*a)]


def _pivot_row(col_vals, start, is_zero, approx):
    if not approx:
        for r in range(start, len(col_vals)):
            if not is_zero(col_vals[r]):
                return r
        return None
    best, best_mag = None, 0.0
    for r in range(start, len(col_vals)):
        mag = abs(col_vals[r])
        if mag > best_mag:
            best, best_mag = r, mag
    if best is None or is_zero(col_vals[best]):
        return None
    return best


def mat_inverse(a, one, zero, is_zero=default_is_zero):
    n = len(a)
    approx = isinstance(one, (float, complex))
    work = [list(row) + list(idrow) for row, idrow in zip(a, identity(n, one, zero))]
    for col in range(n):
        piv = _pivot_row([work[r][col] for r in range(n)], col, is_zero, approx)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        inv = one / work[col][col]
        work[col] = [v * inv for v in work[col]]
        for r in range(n):
            if r != col and not is_zero(work[r][col]):
                f = work[r][col]
                work[r] = [v - f * w for v, w in zip(work[r], work[col])]
    return [row[n:] for row in work]


def mat_rank(a, is_zero=default_is_zero) -> int:
    if not a:
        return 0
    work = [list(row) for row in a]
    n, m = len(work), len(work[0])
    approx = isinstance(work[0][0], (float, complex))
    rank = 0
    row = 0
    for col in range(m):
        piv = _pivot_row([work[r][col] for r in range(n)], row, is_zero, approx)
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        pivval = work[row][col]
        for r in range(row + 1, n):
            if not is_zero(work[r][col]):
                f = work[r][col] / pivval
                work[r] = [v - f * w for v, w in zip(work[r], work[row])]
        row += 1
        rank += 1
        if row == n:
            break
    return rank


def mat_det(a, one, zero, is_zero=default_is_zero):
    n = len(a)
    if n == 0:
        return one
    work = [list(row) for row in a]
    approx = isinstance(one, (float, complex))
    det = one
    for col in range(n):
        piv = _pivot_row([work[r][col] for r in range(n)], col, is_zero, approx)
        if piv is None:
            return zero
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            det = -det
        pivval = work[col][col]
        det = det * pivval
        for r in range(col + 1, n):
            if not is_zero(work[r][col]):
                f = work[r][col] / pivval
                work[r] = [v - f * w for v, w in zip(work[r], work[col])]
    return det


def congruence_signature(a) -> int:
    """Signature of a symmetric matrix with Fraction (or int) entries,
    by exact symmetric congruence diagonalization.  No floating point."""
    n = len(a)
    work = [[Fraction(a[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if work[i][j] != work[j][i]:
                raise ValueError("matrix is not symmetric")
    pos = neg = 0
    for i in range(n):
        if work[i][i] == 0:
            swap = next((j for j in range(i + 1, n) if work[j][j] != 0), None)
            if swap is not None:
                for r in range(n):
                    work[r][i], work[r][swap] = work[r][swap], work[r][i]
                work[i], work[swap] = work[swap], work[i]
            else:
                other = next((j for j in range(i + 1, n) if work[i][j] != 0), None)
                if other is None:
                    continue  # zero row/column contributes nothing
                # a_ii = a_jj = 0, a_ij != 0: adding row+col j makes 2*a_ij
                for r in range(n):
                    work[i][r] += work[other][r]
                for r in range(n):
                    work[r][i] += work[r][other]
        pivot = work[i][i]
        if pivot > 0:
            pos += 1
        else:
            neg += 1
        for j in range(i + 1, n):
            if work[j][i] != 0:
                f = work[j][i] / pivot
                for r in range(n):
                    work[j][r] -= f * work[i][r]
                for r in range(n):
                    work[r][j] -= f * work[r][i]
    return pos - neg
