"""Exact multivariate Laurent polynomials with integer coefficients.

A polynomial is a dict mapping integer exponent tuples to nonzero Python ints,
so coefficients never overflow and equality is exact.  Exponents may be
negative; "invertible" symbols are handled at a higher level by only ever
inverting single-term monomials.
"""

from __future__ import annotations

from ._linalg import Mat, Vec, mat_vec


class LaurentPolynomial:
    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: dict[Vec, int] | None = None):
        self.rank = rank
        self.terms: dict[Vec, int] = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff:
                    self.terms[tuple(exps)] = self.terms.get(tuple(exps), 0) + coeff
            self.terms = {e: c for e, c in self.terms.items() if c}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, rank: int) -> "LaurentPolynomial":
        return cls(rank)

    @classmethod
    def constant(cls, rank: int, value: int) -> "LaurentPolynomial":
        return cls(rank, {tuple([0] * rank): value})

    @classmethod
    def monomial(cls, exps: Vec, coeff: int = 1) -> "LaurentPolynomial":
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, rank: int, index: int) -> "LaurentPolynomial":
        exps = tuple(1 if i == index else 0 for i in range(rank))
        return cls(rank, {exps: 1})

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return LaurentPolynomial(self.rank, out)

    def __radd__(self, other: int) -> "LaurentPolynomial":
        return self + other

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "LaurentPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial(
                self.rank, {e: c * other for e, c in self.terms.items()})
        out: dict[Vec, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return LaurentPolynomial(self.rank, out)

    def __rmul__(self, other: int) -> "LaurentPolynomial":
        return self * other

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if k < 0:
            return self.monomial_inverse() ** (-k)
        result = LaurentPolynomial.constant(self.rank, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monomial_inverse(self) -> "LaurentPolynomial":
        """Inverse of a single-term monomial with unit coefficient."""
        if len(self.terms) != 1:
            raise ValueError("only single-term monomials are invertible")
        (e, c), = self.terms.items()
        if c not in (1, -1):
            raise ValueError("monomial coefficient must be a unit over Z")
        return LaurentPolynomial(self.rank, {tuple(-x for x in e): c})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self == self._coerce(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _coerce(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial.constant(self.rank, other)
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        return other

    # -- structure maps ----------------------------------------------------

    def apply_matrix(self, m: Mat) -> "LaurentPolynomial":
        """Pull back along a lattice map: x^lambda -> x^(m lambda)."""
        out: dict[Vec, int] = {}
        for e, c in self.terms.items():
            fe = mat_vec(m, e)
            out[fe] = out.get(fe, 0) + c
        return LaurentPolynomial(self.rank, out)

    def scale_exponents(self, k: int) -> "LaurentPolynomial":
        return LaurentPolynomial(
            self.rank, {tuple(k * x for x in e): c for e, c in self.terms.items()})

    def derivative(self, index: int) -> "LaurentPolynomial":
        out: dict[Vec, int] = {}
        for e, c in self.terms.items():
            if e[index] == 0:
                continue
            ne = tuple(x - 1 if i == index else x for i, x in enumerate(e))
            out[ne] = out.get(ne, 0) + c * e[index]
        return LaurentPolynomial(self.rank, out)

    # -- evaluation --------------------------------------------------------

    def evaluate(self, values):
        """Evaluate at invertible scalars (Fraction, float, ...)."""
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term = term * v ** k
            total = total + term
        return total

    def evaluate_in_field(self, field, values: tuple[int, ...]) -> int:
        """Evaluate at encoded elements of a FiniteField; values must be units."""
        total = 0
        for e, c in self.terms.items():
            term = field.from_int(c)
            for v, k in zip(values, e):
                if k:
                    term = field.mul(term, field.pow(v, k))
            total = field.add(total, term)
        return total

    def substitute(self, values: list["LaurentPolynomial"]) -> "LaurentPolynomial":
        """Substitute a polynomial for each variable (negative powers need monomials)."""
        rank = values[0].rank
        total = LaurentPolynomial.zero(rank)
        for e, c in self.terms.items():
            term = LaurentPolynomial.constant(rank, c)
            for v, k in zip(values, e):
                if k:
                    term = term * (v ** k)
            total = total + term
        return total

    # -- inspection and printing -------------------------------------------

    def support(self) -> list[Vec]:
        return sorted(self.terms)

    def coefficient(self, exps: Vec) -> int:
        return self.terms.get(tuple(exps), 0)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def _sorted_terms(self) -> list[tuple[Vec, int]]:
        # degree-lex, leading term first
        return sorted(self.terms.items(),
                      key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def canonical_str(self, names: list[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i+1}" for i in range(self.rank)]
        pieces = []
        for e, c in self._sorted_terms():
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k:
                    factors.append(f"{name}^{k}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.canonical_str()})"
