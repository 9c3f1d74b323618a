"""Exact multivariate polynomial arithmetic over named letters.

Letters are nonempty identifier strings treated as independent commuting
indeterminates.  A monomial is a sorted tuple of ``(letter, exponent)``
pairs with every exponent positive; the empty tuple is the constant
monomial 1.  A polynomial maps monomials to nonzero arbitrary-precision
integer coefficients, so every value is canonical by construction: no
zero coefficients, no zero exponents, no floating point anywhere.

Printed terms follow one deterministic order: sort letters by name, read
each monomial as an exponent vector over those letters, and list terms in
ascending lexicographic order of that vector.  ``str(p)`` writes explicit
``*`` between factors and round-trips through the rule DSL, while
``p.compact()`` juxtaposes letters (``3xy^2``) for display.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

Monomial = tuple[tuple[str, int], ...]

CONST_MONO: Monomial = ()


def mono_from_exps(exps: Mapping[str, int]) -> Monomial:
    """Build a canonical monomial from a letter-to-exponent mapping.

    Zero exponents are dropped; negative exponents and non-identifier
    letter names are rejected.
    """
    items = []
    for letter, exp in exps.items():
        if not isinstance(letter, str) or not letter.isidentifier():
            raise ValueError(f"letter must be an identifier string, got {letter!r}")
        if exp < 0:
            raise ValueError(f"exponent of {letter!r} must be nonnegative, got {exp}")
        if exp:
            items.append((letter, exp))
    items.sort()
    return tuple(items)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    """Product of two canonical monomials (merge sorted pair lists)."""
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        la, ea = a[i]
        lb, eb = b[j]
        if la == lb:
            out.append((la, ea + eb))
            i += 1
            j += 1
        elif la < lb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_text(m: Monomial, explicit_mul: bool = False) -> str:
    """Render a monomial without its coefficient; the constant is '1'."""
    if not m:
        return "1"
    sep = "*" if explicit_mul else ""
    return sep.join(l if e == 1 else f"{l}^{e}" for l, e in m)


def _term_text(coeff: int, m: Monomial, explicit_mul: bool) -> str:
    if not m:
        return str(coeff)
    body = mono_text(m, explicit_mul)
    if coeff == 1:
        return body
    if explicit_mul:
        return f"{coeff}*{body}"
    return f"{coeff}{body}"


class Polynomial:
    """Immutable sparse polynomial with exact integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                key = mono_from_exps(dict(mono))
                c = clean.get(key, 0) + int(coeff)
                if c:
                    clean[key] = c
                elif key in clean:
                    del clean[key]
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict[Monomial, int]) -> "Polynomial":
        # Trusted fast path: terms must already be canonical and zero-free.
        p = cls.__new__(cls)
        p._terms = terms
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls.constant(1)

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        c = int(c)
        return cls._raw({CONST_MONO: c} if c else {})

    @classmethod
    def letter(cls, name: str) -> "Polynomial":
        return cls._raw({mono_from_exps({name: 1}): 1})

    @classmethod
    def term(cls, coeff: int, **exps: int) -> "Polynomial":
        """Single-term polynomial, e.g. ``Polynomial.term(3, x=1, y=2)``."""
        coeff = int(coeff)
        if not coeff:
            return cls.zero()
        return cls._raw({mono_from_exps(exps): coeff})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Mapping[str, int], int]]) -> "Polynomial":
        acc: dict[Monomial, int] = {}
        for exps, coeff in terms:
            key = mono_from_exps(exps)
            c = acc.get(key, 0) + int(coeff)
            if c:
                acc[key] = c
            elif key in acc:
                del acc[key]
        return cls._raw(acc)

    def terms(self) -> dict[Monomial, int]:
        """Copy of the underlying monomial-to-coefficient map."""
        return dict(self._terms)

    def letters(self) -> tuple[str, ...]:
        """All letters occurring in the polynomial, sorted by name."""
        seen: set[str] = set()
        for mono in self._terms:
            for letter, _ in mono:
                seen.add(letter)
        return tuple(sorted(seen))

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in the canonical print order (ascending exponent-vector lex)."""
        axes = self.letters()
        def key(item: tuple[Monomial, int]):
            exps = dict(item[0])
            return tuple(exps.get(a, 0) for a in axes)
        return sorted(self._terms.items(), key=key)

    def coefficient(self, exps: Mapping[str, int] | Monomial) -> int:
        """Coefficient of the given monomial, 0 when absent."""
        if isinstance(exps, tuple):
            key = mono_from_exps(dict(exps))
        else:
            key = mono_from_exps(exps)
        return self._terms.get(key, 0)

    def coeff_sum(self) -> int:
        """Sum of all coefficients (the value at every letter set to 1)."""
        return sum(self._terms.values())

    def degree(self) -> int:
        """Largest total degree of a term; the zero polynomial has degree 0."""
        return max((mono_degree(m) for m in self._terms), default=0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == Polynomial.constant(other)._terms
        return NotImplemented

    __hash__ = None

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            c = out.get(mono, 0) + coeff
            if c:
                out[mono] = c
            elif mono in out:
                del out[mono]
        return Polynomial._raw(out)

    __radd__ = __add__

    def __sub__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "Polynomial | int") -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            if not other:
                return Polynomial.zero()
            return Polynomial._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[Monomial, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                key = mono_mul(ma, mb)
                c = out.get(key, 0) + ca * cb
                if c:
                    out[key] = c
                elif key in out:
                    del out[key]
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"polynomial exponent must be a nonnegative int, got {exponent!r}")
        result = Polynomial.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def _format(self, explicit_mul: bool) -> str:
        parts: list[str] = []
        for idx, (mono, coeff) in enumerate(self.sorted_terms()):
            body = _term_text(abs(coeff), mono, explicit_mul)
            if idx == 0:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append((" + " if coeff > 0 else " - ") + body)
        return "".join(parts) or "0"

    def __str__(self) -> str:
        return self._format(explicit_mul=True)

    def compact(self) -> str:
        """Display form with juxtaposed letters, e.g. ``x + 3xy + xy^2``."""
        return self._format(explicit_mul=False)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def to_json_obj(self) -> list[dict]:
        """JSON-ready list of terms; coefficients as decimal strings."""
        out = []
        for mono, coeff in self.sorted_terms():
            out.append({"exponents": {l: e for l, e in mono}, "coeff": str(coeff)})
        return out

    @classmethod
    def from_json_obj(cls, obj: Iterable[Mapping]) -> "Polynomial":
        return cls.from_terms(
            (entry["exponents"], int(entry["coeff"])) for entry in obj
        )
