"""Grammar-driven formal derivatives of exact polynomials.

A grammar assigns to each ruled letter a substitution polynomial.  The
induced derivative operator D is linear over the integers, satisfies the
Leibniz rule on products, and sends each ruled letter to its substitution
polynomial.  Letters without a rule must be declared constant explicitly
and derive to zero; any other unruled letter is an error, never silently
a constant.

This module also provides affine index maps for reading a two-parameter
coefficient array out of an expansion whose monomials follow a fixed
exponent pattern, such as ``x^(2i+1) y^(2j)``.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import DuplicateRule, PatternViolation, UnknownLetter
from .poly import Monomial, Polynomial, mono_mul, mono_text


class Grammar:
    """A finite set of substitution rules plus declared constant letters."""

    __slots__ = ("_rules", "_constants")

    def __init__(
        self,
        rules: Mapping[str, Polynomial | int],
        constants: Iterable[str] = (),
    ):
        normalized: dict[str, Polynomial] = {}
        for letter, rhs in rules.items():
            if not isinstance(letter, str) or not letter.isidentifier():
                raise ValueError(f"ruled letter must be an identifier, got {letter!r}")
            normalized[letter] = (
                rhs if isinstance(rhs, Polynomial) else Polynomial.constant(rhs)
            )
        consts = set()
        for letter in constants:
            if not isinstance(letter, str) or not letter.isidentifier():
                raise ValueError(f"constant letter must be an identifier, got {letter!r}")
            if letter in normalized:
                raise DuplicateRule(letter, "declared constant but also ruled")
            consts.add(letter)
        known = set(normalized) | consts
        for letter, rhs in normalized.items():
            for used in rhs.letters():
                if used not in known:
                    raise UnknownLetter(
                        used,
                        f"in the rule for {letter!r}; rule it or declare it constant",
                    )
        self._rules = normalized
        self._constants = frozenset(consts)

    @property
    def rules(self) -> dict[str, Polynomial]:
        return dict(self._rules)

    @property
    def constants(self) -> frozenset[str]:
        return self._constants

    @property
    def letters(self) -> tuple[str, ...]:
        return tuple(sorted(set(self._rules) | self._constants))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Grammar):
            return NotImplemented
        return self._rules == other._rules and self._constants == other._constants

    __hash__ = None

    def to_dsl(self) -> str:
        """Render the grammar as rule DSL text that parses back equal."""
        parts = []
        if self._constants:
            parts.append("const " + ", ".join(sorted(self._constants)))
        for letter in sorted(self._rules):
            parts.append(f"{letter} -> {self._rules[letter]}")
        return "; ".join(parts)

    def __repr__(self) -> str:
        return f"Grammar({self.to_dsl()!r})"

    def derive(self, p: Polynomial) -> Polynomial:
        """One application of the formal derivative."""
        out: dict[Monomial, int] = {}
        for mono, coeff in p.terms().items():
            for idx, (letter, exp) in enumerate(mono):
                rule = self._rules.get(letter)
                if rule is None:
                    if letter in self._constants:
                        continue
                    raise UnknownLetter(letter, "cannot derive")
                if exp == 1:
                    reduced = mono[:idx] + mono[idx + 1 :]
                else:
                    reduced = mono[:idx] + ((letter, exp - 1),) + mono[idx + 1 :]
                factor = coeff * exp
                for rmono, rcoeff in rule.terms().items():
                    key = mono_mul(reduced, rmono)
                    c = out.get(key, 0) + factor * rcoeff
                    if c:
                        out[key] = c
                    elif key in out:
                        del out[key]
        return Polynomial._raw(out)

    def derive_n(self, p: Polynomial, n: int) -> Polynomial:
        """n-fold derivative, keeping only the final level."""
        if n < 0:
            raise ValueError(f"derivative depth must be nonnegative, got {n}")
        cur = p
        for _ in range(n):
            cur = self.derive(cur)
        return cur

    def derive_levels(self, p: Polynomial, nmax: int) -> list[Polynomial]:
        """All levels 0..nmax of the iterated derivative, in order."""
        if nmax < 0:
            raise ValueError(f"derivative depth must be nonnegative, got {nmax}")
        levels = [p]
        for _ in range(nmax):
            levels.append(self.derive(levels[-1]))
        return levels


def _affine_text(base: int, ci: int, cj: int) -> str:
    out = ""
    for coef, sym in ((ci, "i"), (cj, "j")):
        if coef == 0:
            continue
        mag = sym if abs(coef) == 1 else f"{abs(coef)}{sym}"
        if not out:
            out = mag if coef > 0 else "-" + mag
        else:
            out += ("+" if coef > 0 else "-") + mag
    if not out:
        return str(base)
    if base:
        out += ("+" if base > 0 else "-") + str(abs(base))
    return out


class IndexMap:
    """Affine correspondence between monomial exponents and (i, j) indices.

    Each mapped letter's exponent must equal ``base + ci*i + cj*j`` for
    nonnegative integers i and j, and no other letter may occur.  Some
    pair of letters must have linearly independent (ci, cj) rows so the
    indices are pinned uniquely; otherwise construction fails.
    """

    __slots__ = ("_spec", "_solver")

    def __init__(self, spec: Mapping[str, tuple[int, int, int]]):
        self._spec = {letter: tuple(map(int, row)) for letter, row in sorted(spec.items())}
        letters = list(self._spec)
        solver = None
        for a in range(len(letters)):
            for b in range(a + 1, len(letters)):
                _, ia, ja = self._spec[letters[a]]
                _, ib, jb = self._spec[letters[b]]
                if ia * jb - ja * ib != 0:
                    solver = (letters[a], letters[b])
                    break
            if solver:
                break
        if solver is None:
            raise ValueError("index map does not determine (i, j) uniquely")
        self._solver = solver

    @classmethod
    def identity(
        cls,
        i_letter: str = "x",
        j_letter: str = "y",
        fixed: Mapping[str, int] | None = None,
    ) -> "IndexMap":
        """Map reading i and j straight off two letters' exponents.

        ``fixed`` adds letters whose exponent must equal a constant, such
        as a prefactor letter required at exponent 1.
        """
        spec: dict[str, tuple[int, int, int]] = {
            i_letter: (0, 1, 0),
            j_letter: (0, 0, 1),
        }
        for letter, exp in (fixed or {}).items():
            spec[letter] = (exp, 0, 0)
        return cls(spec)

    def describe(self) -> str:
        return ", ".join(
            f"{letter}={_affine_text(*row)}" for letter, row in self._spec.items()
        )

    def __repr__(self) -> str:
        return f"IndexMap({self.describe()})"

    def indices(self, mono: Monomial) -> tuple[int, int]:
        """Array indices (i, j) of a monomial, or PatternViolation."""
        exps = dict(mono)
        for letter in exps:
            if letter not in self._spec:
                self._fail(mono, f"unexpected letter {letter!r}")
        la, lb = self._solver
        ba, ia, ja = self._spec[la]
        bb, ib, jb = self._spec[lb]
        ra = exps.get(la, 0) - ba
        rb = exps.get(lb, 0) - bb
        det = ia * jb - ja * ib
        inum = ra * jb - rb * ja
        jnum = ia * rb - ib * ra
        if inum % det or jnum % det:
            self._fail(mono, "exponents do not land on integer indices")
        i, j = inum // det, jnum // det
        if i < 0 or j < 0:
            self._fail(mono, f"indices ({i}, {j}) are out of range")
        for letter, (base, ci, cj) in self._spec.items():
            if exps.get(letter, 0) != base + ci * i + cj * j:
                self._fail(mono, f"exponent of {letter!r} breaks the pattern")
        return i, j

    def _fail(self, mono: Monomial, reason: str):
        raise PatternViolation(mono_text(mono), self.describe(), reason)


def extract_coeffs(p: Polynomial, index_map: IndexMap) -> dict[tuple[int, int], int]:
    """Read a sparse (i, j) coefficient array out of an expansion.

    Every monomial of p must fit the index map's exponent pattern;
    violations raise instead of being dropped.  No zero entries are
    stored.
    """
    out: dict[tuple[int, int], int] = {}
    for mono, coeff in p.terms().items():
        out[index_map.indices(mono)] = coeff
    return out
