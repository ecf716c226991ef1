"""Exact sparse polynomials with integer coefficients.

A polynomial in ``nvars`` variables t_1, ..., t_nvars is stored as a
mapping from exponent tuples (one natural number per variable) to
nonzero Python ints, so coefficients can never overflow.  Values are
immutable after construction and every operation returns a fresh
polynomial, which makes them safe to share between threads.

Serialized form (terms in lexicographic exponent order, coefficients as
decimal strings):

    {"nvars": 2, "terms": [{"exp": [1, 1], "coef": "2"}]}
"""

from __future__ import annotations

import math
from itertools import product
from typing import Iterable, Iterator, Mapping

from .errors import ValidationError
from .polymatroid import Support

ExponentVector = tuple[int, ...]


class IntPolynomial:
    """Immutable sparse multivariate polynomial over the integers."""

    __slots__ = ("nvars", "_terms")

    def __init__(
        self,
        nvars: int,
        terms: Mapping[Iterable[int], int] | Iterable[tuple[Iterable[int], int]] = (),
    ):
        if nvars < 0:
            raise ValidationError("nvars must be nonnegative")
        self.nvars = nvars
        acc: dict[ExponentVector, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coef in items:
            key = tuple(int(e) for e in exp)
            if len(key) != nvars:
                raise ValidationError(
                    f"exponent vector {key} has length {len(key)}, expected {nvars}"
                )
            if any(e < 0 for e in key):
                raise ValidationError(f"negative exponent in {key}")
            acc[key] = acc.get(key, 0) + int(coef)
        self._terms: dict[ExponentVector, int] = {k: c for k, c in acc.items() if c != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "IntPolynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: int) -> "IntPolynomial":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars: int) -> "IntPolynomial":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, i: int) -> "IntPolynomial":
        """The variable t_i (1-indexed)."""
        if not 1 <= i <= nvars:
            raise ValidationError(f"variable index {i} out of range 1..{nvars}")
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, nvars: int, exp: Iterable[int], coef: int = 1) -> "IntPolynomial":
        return cls(nvars, {tuple(exp): coef})

    # -- basic protocol ----------------------------------------------------

    @property
    def terms(self) -> dict[ExponentVector, int]:
        """Copy of the term mapping (exponent tuple -> nonzero coefficient)."""
        return dict(self._terms)

    def coefficient(self, exp: Iterable[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[ExponentVector, int]]:
        return iter(sorted(self._terms.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"IntPolynomial({self.nvars}, {self.pretty()!r})"

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other: "IntPolynomial") -> None:
        if self.nvars != other.nvars:
            raise ValidationError(
                f"variable-count mismatch: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        self._check_compatible(other)
        acc = dict(self._terms)
        for exp, coef in other._terms.items():
            acc[exp] = acc.get(exp, 0) + coef
        return IntPolynomial(self.nvars, acc)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(
                self.nvars, {e: c * other for e, c in self._terms.items()}
            )
        self._check_compatible(other)
        acc: dict[ExponentVector, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                acc[key] = acc.get(key, 0) + c1 * c2
        return IntPolynomial(self.nvars, acc)

    __rmul__ = __mul__

    # -- variable actions --------------------------------------------------

    def swap_variables(self, i: int, j: int) -> "IntPolynomial":
        """Exchange the variables t_i and t_j (1-indexed)."""
        if not (1 <= i <= self.nvars and 1 <= j <= self.nvars):
            raise ValidationError(f"variable index out of range 1..{self.nvars}")
        a, b = i - 1, j - 1
        acc: dict[ExponentVector, int] = {}
        for exp, coef in self._terms.items():
            e = list(exp)
            e[a], e[b] = e[b], e[a]
            acc[tuple(e)] = coef
        return IntPolynomial(self.nvars, acc)

    def divided_difference(self, i: int) -> "IntPolynomial":
        """Apply the i-th divided difference (f - s_i f) / (t_i - t_{i+1}).

        The numerator is antisymmetric in t_i, t_{i+1}, so the division
        is exact.  It is carried out by synthetic division in t_i with
        t_{i+1} playing the role of the evaluation point; a nonzero
        remainder would mean corrupted arithmetic and aborts hard.
        """
        if not 1 <= i < self.nvars:
            raise ValidationError(
                f"divided difference index {i} out of range 1..{self.nvars - 1}"
            )
        numerator = self - self.swap_variables(i, i + 1)
        vi, vnext = i - 1, i
        # Group the numerator by the exponent of t_i.
        by_degree: dict[int, dict[ExponentVector, int]] = {}
        for exp, coef in numerator._terms.items():
            k = exp[vi]
            stripped = exp[:vi] + (0,) + exp[vi + 1 :]
            by_degree.setdefault(k, {})[stripped] = coef
        if not by_degree:
            return IntPolynomial.zero(self.nvars)
        top = max(by_degree)
        quotient: dict[ExponentVector, int] = {}
        carry: dict[ExponentVector, int] = {}

        def shift_next(terms: dict[ExponentVector, int]) -> dict[ExponentVector, int]:
            # multiply by t_{i+1}
            return {
                e[:vnext] + (e[vnext] + 1,) + e[vnext + 1 :]: c for e, c in terms.items()
            }

        for k in range(top, 0, -1):
            current = dict(carry)
            for e, c in by_degree.get(k, {}).items():
                current[e] = current.get(e, 0) + c
            current = {e: c for e, c in current.items() if c != 0}
            for e, c in current.items():
                key = e[:vi] + (k - 1,) + e[vi + 1 :]
                quotient[key] = quotient.get(key, 0) + c
            carry = shift_next(current)
        remainder = dict(carry)
        for e, c in by_degree.get(0, {}).items():
            remainder[e] = remainder.get(e, 0) + c
        if any(c != 0 for c in remainder.values()):
            raise AssertionError(
                "nonzero remainder in divided difference; internal arithmetic bug"
            )
        return IntPolynomial(self.nvars, quotient)

    def substitute_one_minus(self) -> "IntPolynomial":
        """Replace every variable t_i by (1 - t_i), fully expanded."""
        acc: dict[ExponentVector, int] = {}
        for exp, coef in self._terms.items():
            ranges = [range(e + 1) for e in exp]
            for k in product(*ranges):
                sign = -1 if sum(k) % 2 else 1
                weight = coef * sign
                for e_i, k_i in zip(exp, k):
                    weight *= math.comb(e_i, k_i)
                acc[k] = acc.get(k, 0) + weight
        return IntPolynomial(self.nvars, acc)

    # -- degree filters and support ----------------------------------------

    def total_degree(self) -> int:
        """Largest coordinate sum of an exponent; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def truncate_total_degree(self, d: int) -> "IntPolynomial":
        """Keep exactly the terms whose exponents sum to d."""
        return IntPolynomial(
            self.nvars, {e: c for e, c in self._terms.items() if sum(e) == d}
        )

    def support(self) -> Support:
        """Exponents with strictly positive coefficient.

        Negative-coefficient terms are excluded here; use
        negative_exponents() to inspect them.
        """
        return Support(self.nvars, [e for e, c in self._terms.items() if c > 0])

    def negative_exponents(self) -> list[ExponentVector]:
        return sorted(e for e, c in self._terms.items() if c < 0)

    # -- formatting and serialization ---------------------------------------

    def pretty(self) -> str:
        """Human-readable form like '2*t1^2*t2 - t3 + 1'."""
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for exp, coef in sorted(self._terms.items()):
            factors = [
                f"t{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exp)
                if e > 0
            ]
            mono = "*".join(factors)
            mag = abs(coef)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if coef < 0 else "+"
            pieces.append(f"{sign} {body}")
        text = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def to_json_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {"exp": list(exp), "coef": str(coef)}
                for exp, coef in sorted(self._terms.items())
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "IntPolynomial":
        if not isinstance(data, dict) or "nvars" not in data or "terms" not in data:
            raise ValidationError("polynomial JSON needs 'nvars' and 'terms'")
        try:
            terms = [(tuple(t["exp"]), int(t["coef"])) for t in data["terms"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed polynomial terms: {exc}") from exc
        return cls(int(data["nvars"]), terms)
