"""Group presentations with an integral height map, a root-of-unity
character, peripheral data, and Fox calculus.

The presentation file grammar (UTF-8, line oriented)::

    # comment
    gens a b
    rel abAB...
    peri word
    eps 1 1
    rho n=5: 1 2
    vol 2.03       (optional)

Words are letter strings, uppercase meaning inverse.  Parsing then
serializing then parsing is the identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import words as W
from .cyclotomic import CyclotomicNumber
from .errors import MissingPeripheralData, PresentationSyntaxError, ValidationError
from .laurent import LaurentPoly
from .words import GroupWord


@dataclass(frozen=True)
class Epsilon:
    """Surjection to the integers, given by its values on generators."""

    values: tuple[int, ...]

    def of(self, word: GroupWord) -> int:
        return sum(self.values[g] * e for g, e in word)


@dataclass(frozen=True)
class UnitCharacter:
    """Character into the n-th roots of unity; generator i maps to
    zeta_n ** exponents[i]."""

    modulus: int
    exponents: tuple[int, ...]

    def exponent_of(self, word: GroupWord) -> int:
        return sum(self.exponents[g] * e for g, e in word) % self.modulus

    def value(self, word: GroupWord) -> CyclotomicNumber:
        return CyclotomicNumber.zeta_power(self.modulus, self.exponent_of(word))

    def complex_value(self, word: GroupWord) -> complex:
        import cmath
        return cmath.exp(2j * math.pi * self.exponent_of(word) / self.modulus)

    def is_trivial_on(self, word: GroupWord) -> bool:
        return self.exponent_of(word) == 0

    @property
    def is_trivial(self) -> bool:
        return all(e % self.modulus == 0 for e in self.exponents)


@dataclass(frozen=True)
class GroupPresentation:
    generator_names: tuple[str, ...]
    relators: tuple[GroupWord, ...]
    peripheral_words: tuple[GroupWord, ...] = ()
    volume: float | None = None

    @property
    def arity(self) -> int:
        return len(self.generator_names)


class GroupRingElement:
    """Finite integer combination of group words; the carrier of Fox
    derivatives.  Zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[GroupWord, int] = {}
        if terms:
            for w, c in dict(terms).items():
                if c:
                    self.terms[tuple(w)] = c

    @classmethod
    def of_word(cls, word: GroupWord, coeff: int = 1):
        return cls({tuple(word): coeff})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement(out)

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def left_mul(self, word: GroupWord):
        """Multiply every term on the left by the given word."""
        out: dict[GroupWord, int] = {}
        for w, c in self.terms.items():
            key = W.concat(word, w)
            out[key] = out.get(key, 0) + c
        return GroupRingElement(out)

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items()):
            parts.append(f"{c}*[{W.format_letters(w)}]")
        return " + ".join(parts)


def fox_derivative(w: GroupWord, i: int) -> GroupRingElement:
    """Free-group Fox derivative with respect to generator i.

    Satisfies d(uv) = du + u dv, d(x) = 1 and d(x^-1) = -x^-1.
    """
    out = GroupRingElement()
    prefix: GroupWord = ()
    for g, e in w:
        if g == i:
            if e == 1:
                out = out + GroupRingElement.of_word(prefix)
            else:
                out = out - GroupRingElement.of_word(W.concat(prefix, ((g, -1),)))
        prefix = W.concat(prefix, ((g, e),))
    return out


def evaluate_twisted(e: GroupRingElement, rho: UnitCharacter, eps: Epsilon) -> LaurentPoly:
    """Ring homomorphism sending word w to rho(w) * t^eps(w), extended
    linearly over the integers."""
    n = rho.modulus
    out = LaurentPoly.zero(n)
    for w, c in e.terms.items():
        coeff = rho.value(w) * c
        out = out + LaurentPoly(n, eps.of(w), [coeff])
    return out


def peripheral_trivial(p: GroupPresentation, rho: UnitCharacter) -> bool:
    """The delta indicator: does rho restrict trivially to the cusp
    subgroup generated by the peripheral words?"""
    if not p.peripheral_words:
        raise MissingPeripheralData("presentation carries no peripheral words")
    return all(rho.is_trivial_on(w) for w in p.peripheral_words)


# ---------------------------------------------------------------------------
# file format


def parse_presentation(text: str):
    """Parse a presentation file into (GroupPresentation, Epsilon,
    UnitCharacter), validating every invariant.  Validation failures are
    aggregated into a single ValidationError."""
    names: list[str] | None = None
    relators: list[GroupWord] = []
    peripheral: list[GroupWord] = []
    eps_values: list[int] | None = None
    rho_mod: int | None = None
    rho_exps: list[int] | None = None
    volume: float | None = None

    def need_gens(lineno):
        if names is None:
            raise PresentationSyntaxError("word line before 'gens'", line=lineno)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kw = parts[0]
        if kw == "gens":
            if len(parts) < 2:
                raise PresentationSyntaxError("'gens' needs at least one name", line=lineno)
            names = parts[1:]
            for nm in names:
                if len(nm) != 1 or not nm.isalpha() or not nm.islower():
                    raise PresentationSyntaxError(
                        f"generator name {nm!r} must be a single lowercase letter", line=lineno)
        elif kw in ("rel", "peri"):
            need_gens(lineno)
            if len(parts) != 2:
                raise PresentationSyntaxError(f"'{kw}' needs exactly one word", line=lineno)
            col = raw.index(parts[1])
            word = W.parse_letters(parts[1], len(names), names, line=lineno, col_offset=col)
            word = W.free_reduce(word)
            (relators if kw == "rel" else peripheral).append(word)
        elif kw == "eps":
            need_gens(lineno)
            try:
                eps_values = [int(x) for x in parts[1:]]
            except ValueError as exc:
                raise PresentationSyntaxError(f"bad integer in 'eps': {exc}", line=lineno)
        elif kw == "rho":
            need_gens(lineno)
            rest = line[len("rho"):].strip()
            if not rest.startswith("n="):
                raise PresentationSyntaxError("'rho' line must read 'rho n=<int>: <int>+'",
                                              line=lineno)
            head, sep, tail = rest.partition(":")
            if not sep:
                raise PresentationSyntaxError("missing ':' in 'rho' line", line=lineno)
            try:
                rho_mod = int(head[2:].strip())
                rho_exps = [int(x) for x in tail.split()]
            except ValueError as exc:
                raise PresentationSyntaxError(f"bad integer in 'rho': {exc}", line=lineno)
            if rho_mod < 1:
                raise PresentationSyntaxError("rho modulus must be positive", line=lineno)
        elif kw == "vol":
            if len(parts) != 2:
                raise PresentationSyntaxError("'vol' needs one float", line=lineno)
            try:
                volume = float(parts[1])
            except ValueError as exc:
                raise PresentationSyntaxError(f"bad float in 'vol': {exc}", line=lineno)
            if not volume > 0:
                raise PresentationSyntaxError("volume must be positive", line=lineno)
        else:
            raise PresentationSyntaxError(f"unknown keyword {kw!r}", line=lineno)

    if names is None:
        raise PresentationSyntaxError("missing 'gens' line")
    if eps_values is None:
        raise PresentationSyntaxError("missing 'eps' line")
    if rho_mod is None:
        raise PresentationSyntaxError("missing 'rho' line")

    problems: list[str] = []
    if len(set(names)) != len(names):
        problems.append("generator names are not unique")
    if len(eps_values) != len(names):
        problems.append(f"eps has {len(eps_values)} values for {len(names)} generators")
    if rho_exps is None or len(rho_exps) != len(names):
        problems.append(f"rho has {0 if rho_exps is None else len(rho_exps)} exponents "
                        f"for {len(names)} generators")
    if problems:
        raise ValidationError("; ".join(problems))

    eps = Epsilon(tuple(eps_values))
    rho = UnitCharacter(rho_mod, tuple(e % rho_mod for e in rho_exps))
    pres = GroupPresentation(tuple(names), tuple(relators), tuple(peripheral), volume)

    if not eps.values or math.gcd(*(abs(v) for v in eps.values)) != 1:
        problems.append("eps is not surjective (gcd of values is not 1)")
    for idx, r in enumerate(relators):
        if eps.of(r) != 0:
            problems.append(f"eps does not kill relator {idx + 1} "
                            f"({W.format_letters(r, names)}): eps={eps.of(r)}")
        if rho.exponent_of(r) != 0:
            problems.append(f"rho is nontrivial on relator {idx + 1} "
                            f"({W.format_letters(r, names)}): exponent "
                            f"{rho.exponent_of(r)} mod {rho.modulus}")
    if problems:
        raise ValidationError("; ".join(problems))
    return pres, eps, rho


def serialize_presentation(p: GroupPresentation, eps: Epsilon, rho: UnitCharacter) -> str:
    lines = ["gens " + " ".join(p.generator_names)]
    for r in p.relators:
        lines.append("rel " + W.format_letters(r, p.generator_names))
    for w in p.peripheral_words:
        lines.append("peri " + W.format_letters(w, p.generator_names))
    lines.append("eps " + " ".join(str(v) for v in eps.values))
    lines.append(f"rho n={rho.modulus}: " + " ".join(str(e) for e in rho.exponents))
    if p.volume is not None:
        lines.append(f"vol {p.volume!r}")
    return "\n".join(lines) + "\n"
