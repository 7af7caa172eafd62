"""Brute-force and pointwise validators over small finite fields.

Everything here is an independent shadow of the symbolic modules: exhaustive
commutation solving, twisted-orbit enumeration, eigenvalue avoidance, and
Jacobian rank probes.  Nothing imports results from the census or the ring
presentations except as the object under test.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Mapping, Optional

from . import gf
from ._linalg import nullspace_fraction, solve_rectangular_fraction
from .budget import check_budget
from .census import ExplicitGroup
from .coverage import StandardLevi
from .gf import FiniteField
from .invariant_rings import (
    adams,
    bg_presentation,
    frobenius_pullback,
    fundamental_invariants,
    rewrite_in_generators,
)
from .root_datum import GroupDatum, build_group

Matrix = tuple[tuple[int, ...], ...]


def int_matrix(field: FiniteField, rows) -> Matrix:
    """Reduce an integer matrix into the field's prime subfield."""
    return tuple(tuple(field.from_int(x) for x in row) for row in rows)


def symplectic_form(field: FiniteField, size: int) -> Matrix:
    """Antidiagonal form: +1 in the top half, -1 in the bottom half."""
    if size % 2:
        raise ValueError("symplectic form needs even size")
    j = [[0] * size for _ in range(size)]
    for i in range(size):
        j[i][size - 1 - i] = field.from_int(1 if i < size // 2 else -1)
    return tuple(tuple(row) for row in j)


def similitude(field: FiniteField, mat: Matrix) -> Optional[int]:
    """nu with mat^T J mat = nu J, or None if mat is not a similitude."""
    n = len(mat)
    j = symplectic_form(field, n)
    mt = tuple(zip(*mat))
    s = gf.mat_mul(field, gf.mat_mul(field, mt, j), mat)
    nu = s[0][n - 1]
    if nu == 0:
        return None
    for a in range(n):
        for b in range(n):
            if s[a][b] != field.mul(nu, j[a][b]):
                return None
    return nu


def is_member(field: FiniteField, kind: str, mat: Matrix) -> bool:
    if kind == "GL" or kind == "U":
        return gf.mat_det(field, mat) != 0
    if kind == "SL":
        return gf.mat_det(field, mat) == 1
    if kind == "GSp":
        return similitude(field, mat) is not None
    raise ValueError(f"unknown matrix group kind {kind!r}")


def is_commutant_solution(field: FiniteField, kind: str, sigma: Matrix, q: int,
                          phi: Matrix) -> bool:
    """Exact check of phi sigma phi^-1 = sigma^q plus group membership."""
    if not is_member(field, kind, phi):
        return False
    lhs = gf.mat_mul(field, phi, sigma)
    rhs = gf.mat_mul(field, gf.mat_pow(field, sigma, q), phi)
    return lhs == rhs


def solve_commutant(field: FiniteField, kind: str, sigma: Matrix, q: int,
                    budget: Optional[int] = None) -> list[Matrix]:
    """All phi in the group with phi sigma phi^-1 = sigma^q, by kernel enumeration.

    The commutation equation is linear in phi; we enumerate the kernel of
    X -> X sigma - sigma^q X and filter by group membership, so the cost is
    |F|^(kernel dim), checked against the budget.
    """
    n = len(sigma)
    if not is_member(field, kind, sigma):
        raise ValueError("sigma is not a member of the group")
    sq = gf.mat_pow(field, sigma, q)
    rows = []
    for i in range(n):
        for jj in range(n):
            row = [0] * (n * n)
            for b in range(n):
                row[i * n + b] = field.add(row[i * n + b], sigma[b][jj])
            for a in range(n):
                row[a * n + jj] = field.sub(row[a * n + jj], sq[i][a])
            rows.append(row)
    kernel = gf.nullspace(field, rows)
    required = field.order ** len(kernel)
    check_budget(required, "commutant kernel enumeration", budget)
    out = []
    for coeffs in product(range(field.order), repeat=len(kernel)):
        flat = [0] * (n * n)
        for c, vec in zip(coeffs, kernel):
            if c:
                for idx, v in enumerate(vec):
                    if v:
                        flat[idx] = field.add(flat[idx], field.mul(c, v))
        mat = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))
        if is_member(field, kind, mat):
            out.append(mat)
    out.sort()
    return out


def centralizer_order(field: FiniteField, kind: str, sigma: Matrix,
                      budget: Optional[int] = None) -> int:
    return len(solve_commutant(field, kind, sigma, 1, budget))


# -- pi_0 detectors -----------------------------------------------------------


@dataclass(frozen=True)
class TwistReport:
    labels: tuple[str, ...]
    assignments: tuple[str, ...]

    def counts(self) -> dict[str, int]:
        return {lab: self.assignments.count(lab) for lab in self.labels}

    def to_dict(self) -> dict:
        return {"labels": list(self.labels), "assignments": list(self.assignments)}


def _sub_identity(field: FiniteField, mat: Matrix) -> Matrix:
    return tuple(
        tuple(field.sub(x, 1 if a == b else 0) for b, x in enumerate(row))
        for a, row in enumerate(mat)
    )


def _is_zero(mat: Matrix) -> bool:
    return all(x == 0 for row in mat for x in row)


def classify_twist(field: FiniteField, kind: str, sigma: Matrix, q: int,
                   solutions: list[Matrix]) -> TwistReport:
    """Assign a component-group label to each solution.

    Detectors exist for the two classes where the presets have nontrivial
    pi_0: the regular unipotent of SL_2 (scalar on ker(sigma - 1)) and the
    rank-2 unipotent of GSp_4 (determinant sign on the quotient by
    ker(sigma - 1), normalized by q/nu).
    """
    n = len(sigma)
    nmat = _sub_identity(field, sigma)
    nsq = gf.mat_mul(field, nmat, nmat)
    assignments = []
    if kind == "SL" and n == 2:
        if _is_zero(nmat) or not _is_zero(nsq):
            raise ValueError("detector needs a regular unipotent sigma")
        v = gf.nullspace(field, [list(r) for r in nmat])[0]
        anchor = next(i for i, x in enumerate(v) if x)
        for phi in solutions:
            if not is_commutant_solution(field, kind, sigma, q, phi):
                raise ValueError("solution list contains a non-solution")
            image = gf.mat_vec(field, phi, v)
            a = field.mul(image[anchor], field.inv(v[anchor]))
            if image != [field.mul(a, x) for x in v]:
                raise ValueError("solution does not preserve ker(sigma - 1)")
            assignments.append(str(a))
    elif kind == "GSp" and n == 4:
        kernel = gf.nullspace(field, [list(r) for r in nmat])
        if len(kernel) != 2 or not _is_zero(nsq):
            raise ValueError("detector needs a unipotent sigma of type (2,2)")
        cols = [list(k) for k in kernel]
        complement = []
        for e in range(4):
            cand = [1 if i == e else 0 for i in range(4)]
            rows = [[c[i] for c in cols + complement + [cand]] for i in range(4)]
            if gf.mat_rank(field, rows) == len(cols + complement) + 1:
                complement.append(cand)
            if len(complement) == 2:
                break
        basis = tuple(zip(*(cols + complement)))  # 4x4, columns k1 k2 e_a e_b
        binv = gf.mat_inverse(field, basis)
        for phi in solutions:
            if not is_commutant_solution(field, kind, sigma, q, phi):
                raise ValueError("solution list contains a non-solution")
            m = gf.mat_mul(field, gf.mat_mul(field, binv, phi), basis)
            if any(m[a][b] != 0 for a in (2, 3) for b in (0, 1)):
                raise ValueError("solution does not preserve ker(sigma - 1)")
            quo_det = field.sub(field.mul(m[2][2], m[3][3]), field.mul(m[2][3], m[3][2]))
            nu = similitude(field, phi)
            val = field.mul(field.mul(quo_det, field.from_int(q)), field.inv(nu))
            if val == field.from_int(1):
                assignments.append("+1")
            elif val == field.from_int(-1):
                assignments.append("-1")
            else:
                raise ValueError("detector sign is not +-1; inconsistent solution")
    else:
        raise ValueError(f"no pi_0 detector for kind {kind!r} at size {n}")
    labels = tuple(sorted(set(assignments)))
    return TwistReport(labels, tuple(assignments))


# -- twisted orbits by raw enumeration ---------------------------------------


def twisted_orbits_bruteforce(group: ExplicitGroup, twist: Optional[Mapping[str, str]] = None,
                              budget: Optional[int] = None) -> int:
    """Number of orbits of a -> g a twist(g)^-1, by direct closure."""
    if twist is None:
        twist = group.identity_twist()
    check_budget(group.order * group.order, "twisted orbit enumeration", budget)
    remaining = set(group.labels)
    count = 0
    while remaining:
        start = next(iter(remaining))
        orbit = {start}
        stack = [start]
        while stack:
            a = stack.pop()
            for g in group.labels:
                b = group.mul(group.mul(g, a), group.inv(twist[g]))
                if b not in orbit:
                    orbit.add(b)
                    stack.append(b)
        remaining -= orbit
        count += 1
    return count


def inner_twist(group: ExplicitGroup, g: str) -> dict[str, str]:
    ginv = group.inv(g)
    return {a: group.mul(group.mul(g, a), ginv) for a in group.labels}


def _generating_set(group: ExplicitGroup) -> list[str]:
    gens: list[str] = []
    closure = {group.identity}
    for a in sorted(group.labels):
        if a in closure:
            continue
        gens.append(a)
        frontier = list(closure)
        closure = set(closure)
        queue = [a]
        while queue:
            x = queue.pop()
            if x in closure:
                continue
            closure.add(x)
            frontier.append(x)
            for y in list(closure):
                for z in (group.mul(x, y), group.mul(y, x)):
                    if z not in closure:
                        queue.append(z)
        if len(closure) == group.order:
            break
    return gens


def all_automorphisms(group: ExplicitGroup) -> list[dict[str, str]]:
    """Every automorphism, by extending order-compatible generator images."""
    gens = _generating_set(group)
    # BFS spanning tree: each element reached as (parent) * gen
    parent: dict[str, tuple[str, int]] = {}
    order_list = [group.identity]
    queue = [group.identity]
    while queue:
        x = queue.pop(0)
        for i, g in enumerate(gens):
            y = group.mul(x, g)
            if y not in parent and y != group.identity:
                parent[y] = (x, i)
                order_list.append(y)
                queue.append(y)
    orders = {a: group.element_order(a) for a in group.labels}
    candidates = [
        [h for h in group.labels if orders[h] == orders[g]]
        for g in gens
    ]
    out = []
    for images in product(*candidates):
        phi = {group.identity: group.identity}
        for y in order_list[1:]:
            x, i = parent[y]
            phi[y] = group.mul(phi[x], images[i])
        ok = True
        for i, g in enumerate(gens):
            for a in group.labels:
                if phi[group.mul(a, g)] != group.mul(phi[a], images[i]):
                    ok = False
                    break
            if not ok:
                break
        if ok and len(set(phi.values())) == group.order:
            out.append(phi)
    return out


# -- concrete Lie algebras and the avoidance predicate ------------------------


def _entry_weight(datum: GroupDatum, a: int) -> tuple[int, ...]:
    """Torus weight of the a-th standard coordinate, in lattice coordinates."""
    r = datum.torus_rank
    if datum.family in ("GL", "U"):
        return tuple(1 if i == a else 0 for i in range(r))
    if datum.family == "SL":
        if a < r:
            return tuple(1 if i == a else 0 for i in range(r))
        return tuple(-1 for _ in range(r))
    m = datum.n // 2
    if a < m:
        return tuple(1 if i == a else 0 for i in range(r))
    mirror = 2 * m - 1 - a
    return tuple((1 if i == m else 0) + (-1 if i == mirror else 0) for i in range(r))


def _vec_sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


@lru_cache(maxsize=None)
def lie_root_matrices(datum: GroupDatum) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Integer root-space matrices, aligned with datum.roots.

    GL/SL/U use gl_n entry matrices.  For GSp the one-dimensional root space
    inside the symplectic Lie algebra is solved from X^T J + J X = 0 on the
    entries sharing the root's torus weight.
    """
    n = datum.n
    out = []
    if datum.family in ("GL", "SL", "U"):
        for alpha in datum.roots:
            spots = [
                (a, b)
                for a in range(n)
                for b in range(n)
                if a != b and _vec_sub(_entry_weight(datum, a), _entry_weight(datum, b)) == alpha
            ]
            if len(spots) != 1:
                raise RuntimeError("root weight is not a single gl entry")  # pragma: no cover
            a, b = spots[0]
            out.append(tuple(tuple(1 if (x, y) == (a, b) else 0 for y in range(n)) for x in range(n)))
        return tuple(out)
    jmat = [[0] * n for _ in range(n)]
    for i in range(n):
        jmat[i][n - 1 - i] = 1 if i < n // 2 else -1
    for alpha in datum.roots:
        spots = [
            (a, b)
            for a in range(n)
            for b in range(n)
            if a != b and _vec_sub(_entry_weight(datum, a), _entry_weight(datum, b)) == alpha
        ]
        # constraint (sum_k c_k E_k)^T J + J (sum_k c_k E_k) = 0, solved exactly
        constraint_cols = []
        for (a, b) in spots:
            flat = []
            for x in range(n):
                for y in range(n):
                    val = 0
                    if x == b:
                        val += jmat[a][y]
                    if y == b:
                        val += jmat[x][a]
                    flat.append(Fraction(val))
            constraint_cols.append(flat)
        rows = [[col[i] for col in constraint_cols] for i in range(n * n)]
        kernel = nullspace_fraction(rows)
        if len(kernel) != 1:
            raise RuntimeError("symplectic root space is not one-dimensional")  # pragma: no cover
        coeffs = kernel[0]
        denom = 1
        for c in coeffs:
            denom = denom * c.denominator // math.gcd(denom, c.denominator)
        ints = [int(c * denom) for c in coeffs]
        mat = [[0] * n for _ in range(n)]
        for c, (a, b) in zip(ints, spots):
            mat[a][b] = c
        out.append(tuple(tuple(row) for row in mat))
    return tuple(out)


@lru_cache(maxsize=None)
def lie_torus_matrices(datum: GroupDatum) -> tuple[tuple[tuple[int, ...], ...], ...]:
    n = datum.n
    if datum.family in ("GL", "SL", "U"):
        # gl_n Cartan; for SL the central directions only add (x - 1) factors
        # to the characteristic polynomials, which the base conditions absorb
        return tuple(
            tuple(tuple(1 if x == y == i else 0 for y in range(n)) for x in range(n))
            for i in range(n)
        )
    m = n // 2
    mats = []
    for i in range(m):
        d = [0] * n
        d[i] = 1
        d[n - 1 - i] = -1
        mats.append(tuple(tuple(d[x] if x == y else 0 for y in range(n)) for x in range(n)))
    mats.append(tuple(tuple(1 if x == y else 0 for y in range(n)) for x in range(n)))
    return tuple(mats)


def _simple_coefficients(datum: GroupDatum, alpha) -> list[Fraction]:
    cols = [[Fraction(x) for x in datum.roots[i]] for i in datum.simple]
    target = [Fraction(x) for x in alpha]
    coeffs = solve_rectangular_fraction(cols, target)
    if coeffs is None:
        raise RuntimeError("root outside the simple-root span")  # pragma: no cover
    return coeffs


def _root_split(datum: GroupDatum, subset: tuple[int, ...]):
    """Indices of roots in the Levi, in U (positive outside), in U^- (negative)."""
    inside, upper, lower = [], [], []
    s = set(subset)
    for idx, alpha in enumerate(datum.roots):
        coeffs = _simple_coefficients(datum, alpha)
        support = {i for i, c in enumerate(coeffs) if c != 0}
        positive = all(c >= 0 for c in coeffs)
        if support <= s:
            inside.append(idx)
        elif positive:
            upper.append(idx)
        else:
            lower.append(idx)
    return inside, upper, lower


def _flat(mat) -> list[int]:
    return [x for row in mat for x in row]


def _expand_in_span(field: FiniteField, columns: list[list[int]], target: list[int]):
    rows = [[col[i] for col in columns] + [target[i]] for i in range(len(target))]
    red, pivots = gf.rref(field, rows)
    k = len(columns)
    if k in pivots:
        return None
    out = [0] * k
    for r, pc in enumerate(pivots):
        out[pc] = red[r][k]
    return out


def _ad_matrix(field: FiniteField, m: Matrix, m_inv: Matrix, basis: list[Matrix]):
    """Matrix of X -> m X m^-1 on the span of basis; None if the span leaks."""
    columns = [_flat(int_matrix(field, b)) for b in basis]
    out_cols = []
    for b in basis:
        y = gf.mat_mul(field, gf.mat_mul(field, m, int_matrix(field, b)), m_inv)
        coeffs = _expand_in_span(field, columns, _flat(y))
        if coeffs is None:
            return None
        out_cols.append(coeffs)
    return [[out_cols[j][i] for j in range(len(basis))] for i in range(len(basis))]


def _horner(field: FiniteField, coeffs: list[int], mat) -> list[list[int]]:
    n = len(mat)
    acc = [[0] * n for _ in range(n)]
    for c in reversed(coeffs):
        acc = gf.mat_mul(field, acc, mat)
        acc = [list(row) for row in acc]
        for i in range(n):
            acc[i][i] = field.add(acc[i][i], c)
    return acc


_EXPONENT_STEPS = (1, 2, 3, 4, 6, 12)


@dataclass(frozen=True)
class AvoidantReport:
    avoidant: bool
    exponent: Optional[int]
    failures: tuple[str, ...]
    window: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "avoidant": self.avoidant,
            "exponent": self.exponent,
            "failures": list(self.failures),
            "window": list(self.window),
        }


def avoidant_check(field: FiniteField, datum: GroupDatum, levi: StandardLevi, m: Matrix,
                   q: int) -> AvoidantReport:
    """Eigenvalue-separation test for a Levi point m.

    Conditions: ad_m - 1 and ad_m - q invertible on Lie(U) and Lie(U^-), and
    for some exponent r in the window, P(ad_{m^r}) invertible on the opposite
    nilradical for P the characteristic polynomial of ad_{m^r} on
    Lie(M) + Lie(U) (and symmetrically).
    """
    if levi.family != datum.family or levi.n != datum.n:
        raise ValueError("Levi does not belong to this group datum")
    if not levi.gamma_stable:
        raise ValueError("avoidance is defined for gamma-stable Levis")
    kind = "GSp" if datum.family == "GSp" else ("SL" if datum.family == "SL" else "GL")
    if not is_member(field, kind, m):
        raise ValueError("m is not a member of the group")
    roots = lie_root_matrices(datum)
    torus = lie_torus_matrices(datum)
    inside, upper, lower = _root_split(datum, levi.subset)
    m_inv = gf.mat_inverse(field, m)
    levi_basis = list(torus) + [roots[i] for i in inside]
    if _ad_matrix(field, m, m_inv, levi_basis) is None:
        raise ValueError("m does not normalize the Levi")
    ad_u = _ad_matrix(field, m, m_inv, [roots[i] for i in upper])
    ad_l = _ad_matrix(field, m, m_inv, [roots[i] for i in lower])
    if ad_u is None or ad_l is None:
        raise ValueError("m does not normalize the Levi decomposition")
    failures = []
    qf = field.from_int(q)
    for name, ad in (("U", ad_u), ("U-", ad_l)):
        for s, sname in ((1, "1"), (qf, "q")):
            shifted = [
                [field.sub(ad[i][j], s if i == j else 0) for j in range(len(ad))]
                for i in range(len(ad))
            ]
            if gf.mat_det(field, shifted) == 0:
                failures.append(f"ad_m - {sname} singular on Lie({name})")
    window = tuple(datum.gamma_order * s for s in _EXPONENT_STEPS)
    if failures:
        return AvoidantReport(False, None, tuple(failures), window)
    for r in window:
        mr = gf.mat_pow(field, m, r)
        mr_inv = gf.mat_inverse(field, mr)
        ok = True
        for up, down in ((upper, lower), (lower, upper)):
            half = _ad_matrix(field, mr, mr_inv, levi_basis + [roots[i] for i in up])
            opp = _ad_matrix(field, mr, mr_inv, [roots[i] for i in down])
            p = gf.charpoly(field, half)
            if gf.mat_det(field, _horner(field, p, opp)) == 0:
                ok = False
                break
        if ok:
            return AvoidantReport(True, r, (), window)
    return AvoidantReport(False, None, ("no admissible exponent in the window",), window)


# -- Jacobian probe for 2x2 presets -------------------------------------------


@dataclass(frozen=True)
class JacobianReport:
    rank: int
    expected_rank: int
    kernel_dim: int
    tangent_dim: int
    image_dim: int
    submersive: bool

    @property
    def ok(self) -> bool:
        return self.submersive and self.rank == self.expected_rank

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "expected_rank": self.expected_rank,
            "kernel_dim": self.kernel_dim,
            "tangent_dim": self.tangent_dim,
            "image_dim": self.image_dim,
            "submersive": self.submersive,
            "ok": self.ok,
        }


def _adjugate2(field: FiniteField, m: Matrix) -> Matrix:
    return (
        (m[1][1], field.neg(m[0][1])),
        (field.neg(m[1][0]), m[0][0]),
    )


def jacobian_probe(field: FiniteField, kind: str, q: int, sigma: Matrix,
                   phi: Matrix) -> JacobianReport:
    """Exact Jacobian of the defining equations at a 2x2 sample (sigma, phi).

    Reports the rank against the smooth-point expectation and whether the
    invariant-coordinate map is submersive onto the tangent space of the fixed
    ring at the image point.  Directional derivatives of sigma^q are computed
    as sums sigma^a H sigma^(q-1-a); no numerics are involved.
    """
    if kind not in ("SL", "GL"):
        raise ValueError("jacobian probe supports SL and GL at size 2")
    if len(sigma) != 2:
        raise ValueError("jacobian probe is 2x2 only")
    if sigma[0][1] == 0 and sigma[1][0] == 0 and sigma[0][0] == sigma[1][1]:
        raise ValueError("sigma must be regular (non-scalar)")
    if not is_member(field, kind, sigma) or not is_commutant_solution(field, kind, sigma, q, phi):
        raise ValueError("sample does not satisfy the defining equations")
    powers = [gf.mat_identity(2)]
    for _ in range(q):
        powers.append(gf.mat_mul(field, powers[-1], sigma))
    sq = powers[q]

    def dpow(h: Matrix) -> Matrix:
        acc = [[0, 0], [0, 0]]
        for a in range(q):
            term = gf.mat_mul(field, gf.mat_mul(field, powers[a], h), powers[q - 1 - a])
            for i in range(2):
                for j in range(2):
                    acc[i][j] = field.add(acc[i][j], term[i][j])
        return tuple(tuple(row) for row in acc)

    directions = []
    for block in range(2):
        for a in range(2):
            for b in range(2):
                h = tuple(tuple(1 if (x, y) == (a, b) else 0 for y in range(2)) for x in range(2))
                directions.append((block, h))
    rows = [[0] * 8 for _ in range(4)]
    for col, (block, h) in enumerate(directions):
        if block == 0:  # sigma direction
            d = gf.mat_mul(field, phi, h)
            dq = gf.mat_mul(field, dpow(h), phi)
            diff = tuple(
                tuple(field.sub(d[i][j], dq[i][j]) for j in range(2)) for i in range(2)
            )
        else:  # phi direction
            d = gf.mat_mul(field, h, sigma)
            dq = gf.mat_mul(field, sq, h)
            diff = tuple(
                tuple(field.sub(d[i][j], dq[i][j]) for j in range(2)) for i in range(2)
            )
        for i in range(2):
            for j in range(2):
                rows[i * 2 + j][col] = diff[i][j]
    adj_sigma = _adjugate2(field, sigma)
    adj_phi = _adjugate2(field, phi)
    if kind == "SL":
        det_sigma_row = [0] * 8
        det_phi_row = [0] * 8
        for col, (block, h) in enumerate(directions):
            a, b = next((x, y) for x in range(2) for y in range(2) if h[x][y])
            if block == 0:
                det_sigma_row[col] = adj_sigma[b][a]
            else:
                det_phi_row[col] = adj_phi[b][a]
        rows.append(det_sigma_row)
        rows.append(det_phi_row)
    rank = gf.mat_rank(field, rows)
    kernel = gf.nullspace(field, rows)

    datum = build_group(kind, 2)
    pres = bg_presentation(datum, q)
    trace = field.add(sigma[0][0], sigma[1][1])
    det = gf.mat_det(field, sigma)
    point = (trace,) if kind == "SL" else (trace, det)
    pres_rows = [
        [rel.derivative(j).evaluate_in_field(field, point) for j in range(len(point))]
        for rel in pres.relations
    ]
    tangent = gf.nullspace(field, pres_rows)

    dch = [[0] * 8 for _ in range(len(point))]
    for col, (block, h) in enumerate(directions):
        if block != 0:
            continue
        a, b = next((x, y) for x in range(2) for y in range(2) if h[x][y])
        dch[0][col] = 1 if a == b else 0
        if kind == "GL":
            dch[1][col] = adj_sigma[b][a]
    images = [gf.mat_vec(field, dch, v) for v in kernel]
    image_rank = gf.mat_rank(field, images) if images else 0
    combined = gf.mat_rank(field, images + tangent) if (images or tangent) else 0
    submersive = combined == image_rank
    rel_dim = 3 if kind == "SL" else 4
    expected = 8 - rel_dim - len(tangent)
    return JacobianReport(rank, expected, len(kernel), len(tangent), image_rank, submersive)


# -- pointwise identity trials ------------------------------------------------


@dataclass(frozen=True)
class IdentityReport:
    passed: bool
    trials: int
    failure: Optional[dict]

    def to_dict(self) -> dict:
        return {"passed": self.passed, "trials": self.trials, "failure": self.failure}


def eval_identity_trials(datum: GroupDatum, q: int, field: FiniteField, trials: int,
                         seed: int = 0) -> IdentityReport:
    """Check rewrite(adams(Fr* g, q)) against direct evaluation at random tori."""
    gens = fundamental_invariants(datum)
    pulled = [adams(frobenius_pullback(datum, g), q) for g in gens.polys]
    rewritten = [rewrite_in_generators(datum, gens, p) for p in pulled]
    rng = random.Random(seed)
    for trial in range(trials):
        t = tuple(rng.randrange(1, field.order) for _ in range(datum.torus_rank))
        gen_values = tuple(g.evaluate_in_field(field, t) for g in gens.polys)
        for name, direct_poly, rew in zip(gens.names, pulled, rewritten):
            direct = direct_poly.evaluate_in_field(field, t)
            via = rew.evaluate_in_field(field, gen_values)
            if direct != via:
                return IdentityReport(
                    False,
                    trial + 1,
                    {"generator": name, "point": list(t), "direct": direct, "rewritten": via},
                )
    return IdentityReport(True, trials, None)


# -- seeded sample constructors ------------------------------------------------


def random_group_element(field: FiniteField, kind: str, rng: random.Random,
                         attempts: int = 500) -> Matrix:
    for _ in range(attempts):
        if kind == "SL":
            a = rng.randrange(field.order)
            b = rng.randrange(field.order)
            c = rng.randrange(field.order)
            if a == 0:
                continue
            d = field.mul(field.add(1, field.mul(b, c)), field.inv(a))
            return ((a, b), (c, d))
        mat = tuple(
            tuple(rng.randrange(field.order) for _ in range(2)) for _ in range(2)
        )
        if is_member(field, kind, mat):
            return mat
    raise RuntimeError("could not sample a group element")  # pragma: no cover


def random_regular_element(field: FiniteField, kind: str, rng: random.Random) -> Matrix:
    while True:
        mat = random_group_element(field, kind, rng)
        if not (mat[0][1] == 0 and mat[1][0] == 0 and mat[0][0] == mat[1][1]):
            return mat


def random_torus_element(field: FiniteField, datum: GroupDatum, rng: random.Random) -> Matrix:
    """Random diagonal group element (nonzero encodings are exactly the units)."""
    n = datum.n
    if datum.family in ("GL", "U"):
        d = [rng.randrange(1, field.order) for _ in range(n)]
    elif datum.family == "SL":
        d = [rng.randrange(1, field.order) for _ in range(n - 1)]
        prod = 1
        for x in d:
            prod = field.mul(prod, x)
        d.append(field.inv(prod))
    else:
        m = n // 2
        t = [rng.randrange(1, field.order) for _ in range(m)]
        nu = rng.randrange(1, field.order)
        d = t + [field.mul(nu, field.inv(x)) for x in reversed(t)]
    return tuple(tuple(d[i] if i == j else 0 for j in range(n)) for i in range(n))
