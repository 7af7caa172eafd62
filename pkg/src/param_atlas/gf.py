"""Small finite fields F_{p^k} in a polynomial basis, with exact linear algebra.

Elements are encoded as ints in [0, p^k): the base-p digits of the encoding are
the coefficients of the residue polynomial (little-endian).  Fields up to 2^16
elements are supported; fields of order <= 256 get full multiplication and
inverse tables.  Everything downstream (commutant solving, Jacobian probes,
point counts) works over these encodings, so results are exact by construction.
"""

from __future__ import annotations

from functools import lru_cache

from .root_datum import _is_prime

_TABLE_LIMIT = 256
_ORDER_LIMIT = 1 << 16


def _poly_mul_mod_p(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_rem(a: list[int], mod: list[int], p: int) -> list[int]:
    # mod is monic
    a = a[:]
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(dm):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _monic_polys(p: int, deg: int):
    for enc in range(p ** deg):
        coeffs = []
        e = enc
        for _ in range(deg):
            coeffs.append(e % p)
            e //= p
        yield coeffs + [1]


def _find_irreducible(p: int, k: int) -> list[int]:
    """Smallest monic irreducible of degree k over F_p, by trial division."""
    if k == 1:
        return [0, 1]
    for cand in _monic_polys(p, k):
        ok = True
        for d in range(1, k // 2 + 1):
            for div in _monic_polys(p, d):
                rem = _poly_rem(cand, div, p)
                if len(rem) == 1 and rem[0] == 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return cand
    raise RuntimeError("no irreducible polynomial found")  # pragma: no cover


class FiniteField:
    """F_{p^k} with int-encoded elements; use get_field() for the cached copy."""

    def __init__(self, p: int, k: int = 1):
        if not _is_prime(p):
            raise ValueError(f"field characteristic must be prime, got {p}")
        if k < 1:
            raise ValueError(f"field degree must be >= 1, got {k}")
        order = p ** k
        if order > _ORDER_LIMIT:
            raise ValueError(f"field order {order} exceeds the supported limit {_ORDER_LIMIT}")
        self.p = p
        self.k = k
        self.order = order
        self.modulus = _find_irreducible(p, k)
        self._digits = [self._decode(e) for e in range(order)] if order <= 4096 else None
        self._mul_table = None
        self._inv_table = None
        if order <= _TABLE_LIMIT:
            self._mul_table = [self._mul_raw(a, b) for a in range(order) for b in range(order)]
            self._inv_table = [0] * order
            for a in range(1, order):
                self._inv_table[a] = self._pow_raw(a, order - 2)

    def _decode(self, e: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(e % self.p)
            e //= self.p
        return out

    def _encode(self, digits: list[int]) -> int:
        e = 0
        for d in reversed(digits[: self.k]):
            e = e * self.p + d
        return e

    def digits(self, a: int) -> list[int]:
        if self._digits is not None:
            return self._digits[a][:]
        return self._decode(a)

    def from_int(self, c: int) -> int:
        return c % self.p

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        da, db = self.digits(a), self.digits(b)
        return self._encode([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self._encode([(-x) % self.p for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_raw(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return (a * b) % self.p
        prod = _poly_mul_mod_p(self.digits(a), self.digits(b), self.p)
        rem = _poly_rem(prod, self.modulus, self.p)
        rem += [0] * (self.k - len(rem))
        return self._encode(rem)

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a * self.order + b]
        return self._mul_raw(a, b)

    def _pow_raw(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self._mul_raw(result, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in finite field")
        if self._inv_table is not None:
            return self._inv_table[a]
        return self._pow_raw(a, self.order - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self._mul_table is not None:
            result = 1
            base = a
            while e:
                if e & 1:
                    result = self.mul(result, base)
                base = self.mul(base, base)
                e >>= 1
            return result
        return self._pow_raw(a, e)

    def elements(self) -> range:
        return range(self.order)

    def units(self) -> range:
        return range(1, self.order)

    def __repr__(self) -> str:
        return f"FiniteField({self.p}^{self.k})"


@lru_cache(maxsize=None)
def get_field(p: int, k: int = 1) -> FiniteField:
    return FiniteField(p, k)


# -- dense univariate polynomials over a field (little-endian coeff lists) ----


def poly_trim(coeffs: list[int]) -> list[int]:
    out = coeffs[:]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def poly_derivative(field: FiniteField, coeffs: list[int]) -> list[int]:
    out = [field.mul(field.from_int(i), c) for i, c in enumerate(coeffs)][1:]
    return poly_trim(out or [0])


def poly_divmod(field: FiniteField, a: list[int], b: list[int]):
    a = poly_trim(a)
    b = poly_trim(b)
    if b == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(len(a) - len(b) + 1, 1)
    r = a[:]
    binv = field.inv(b[-1])
    while len(r) >= len(b) and poly_trim(r) != [0]:
        shift = len(r) - len(b)
        c = field.mul(r[-1], binv)
        q[shift] = c
        for i, bc in enumerate(b):
            r[shift + i] = field.sub(r[shift + i], field.mul(c, bc))
        r = r[:-1]
        if not r:
            r = [0]
    return poly_trim(q), poly_trim(r)


def poly_gcd(field: FiniteField, a: list[int], b: list[int]) -> list[int]:
    a, b = poly_trim(a), poly_trim(b)
    while b != [0]:
        _, r = poly_divmod(field, a, b)
        a, b = b, r
    if a != [0]:
        lead = field.inv(a[-1])
        a = [field.mul(c, lead) for c in a]
    return a


def poly_gcd_degree(field: FiniteField, a: list[int], b: list[int]) -> int:
    return len(poly_gcd(field, a, b)) - 1


# -- matrices over a field (lists of lists of encoded ints) ------------------


def mat_identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(field: FiniteField, a, b):
    n, m, r = len(a), len(b[0]), len(b)
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(r):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(m):
                    if bk[j]:
                        oi[j] = field.add(oi[j], field.mul(x, bk[j]))
    return out


def mat_vec(field: FiniteField, a, v):
    return [
        _dot(field, row, v)
        for row in a
    ]


def _dot(field: FiniteField, row, v):
    s = 0
    for x, y in zip(row, v):
        if x and y:
            s = field.add(s, field.mul(x, y))
    return s


def mat_pow(field: FiniteField, a, e: int):
    n = len(a)
    result = mat_identity(n)
    base = [row[:] for row in a]
    while e:
        if e & 1:
            result = mat_mul(field, result, base)
        base = mat_mul(field, base, base)
        e >>= 1
    return result


def rref(field: FiniteField, rows):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    a = [row[:] for row in rows]
    if not a:
        return a, []
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = field.inv(a[r][c])
        a[r] = [field.mul(x, inv) for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [field.sub(a[i][j], field.mul(f, a[r][j])) for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def mat_rank(field: FiniteField, rows) -> int:
    return len(rref(field, rows)[1])


def nullspace(field: FiniteField, rows):
    """Basis of the right kernel of the matrix (list of column vectors)."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(field, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(red[r][fc])
        basis.append(v)
    return basis


def mat_det(field: FiniteField, rows) -> int:
    a = [row[:] for row in rows]
    n = len(a)
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = field.neg(det)
        det = field.mul(det, a[c][c])
        inv = field.inv(a[c][c])
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = field.mul(a[i][c], inv)
                a[i] = [field.sub(a[i][j], field.mul(f, a[c][j])) for j in range(n)]
    return det


def mat_inverse(field: FiniteField, rows):
    n = len(rows)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(rows)]
    red, pivots = rref(field, aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red[:n]]


def charpoly(field: FiniteField, a) -> list[int]:
    """Characteristic polynomial det(xI - A), little-endian coefficients.

    Hessenberg reduction then the standard leading-minor recurrence; works in
    any characteristic (no division by integers).
    """
    n = len(a)
    h = [row[:] for row in a]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if h[i][m - 1] != 0), None)
        if piv is None:
            continue
        if piv != m:
            h[m], h[piv] = h[piv], h[m]
            for row in h:
                row[m], row[piv] = row[piv], row[m]
        inv = field.inv(h[m][m - 1])
        for i in range(m + 1, n):
            if h[i][m - 1] != 0:
                f = field.mul(h[i][m - 1], inv)
                for j in range(n):
                    h[i][j] = field.sub(h[i][j], field.mul(f, h[m][j]))
                for r in range(n):
                    h[r][m] = field.add(h[r][m], field.mul(f, h[r][i]))
    # p_0 = 1; p_m = (x - h[m-1][m-1]) p_{m-1} - sum_i h[i-1][m-1] (prod subdiag) p_{i-1}
    polys = [[1]]
    for m in range(1, n + 1):
        hm = h[m - 1][m - 1]
        prev = polys[m - 1]
        cur = [0] * (m + 1)
        for i, c in enumerate(prev):
            cur[i + 1] = c
            cur[i] = field.sub(cur[i], field.mul(hm, c))
        prod = 1
        for i in range(m - 1, 0, -1):
            prod = field.mul(prod, h[i][i - 1])
            coeff = field.mul(h[i - 1][m - 1], prod)
            if coeff:
                for j, c in enumerate(polys[i - 1]):
                    cur[j] = field.sub(cur[j], field.mul(coeff, c))
        polys.append(cur)
    return poly_trim(polys[n])
