"""Words in two generators, rewriting systems, and normal ordering.

Words are strings over the alphabet {x, y}.  Three rewriting systems act
on them, each replacing a descent yx according to its defining relation:

    Homogeneous   yx = w(1,1) xy
    RookWeyl      yx = w(1,1) xy + 1
    File          yx = w(1,1) xy + y

All three share the scalar commutation rules

    x w(s, t) = w(s+1, t) x,        y w(s, t) = w(s, t+1) y,

so a weight symbol created in the middle of a word picks up index shifts
as it moves to the front.  Repeated rewriting terminates in a normal
form: a sum of monomials x^i y^j with exact WeightPolynomial
coefficients.  For the homogeneous system the normal form is
independent of which descent is rewritten first.  For RookWeyl and File
it is not: the lower-order terms produced by the inhomogeneous part can
carry differently indexed symbols depending on the order (yxyx is the
smallest example), although all orders agree once the weights are
evaluated at a constant family.  Rewriting the rightmost descent first
is therefore the canonical strategy, and it is the one the placement
theorems describe.

Weight families from ``special_fn`` are substituted only after
rewriting, keeping the combinatorial layer exact.
"""

from __future__ import annotations

import enum

from .special_fn import DomainError
from .weightpoly import WeightPolynomial

__all__ = [
    "Word", "WordParseError", "RelationSystem", "NormalForm",
    "parse_word", "dual_word", "normal_order", "multiply",
    "expand_power_sum", "evaluate", "WeightPolynomial",
]

Word = str


class WordParseError(ValueError):
    """Word text contained a character outside {x, y}.

    ``position`` is the index of the first offending character.
    """

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


def parse_word(text: str) -> Word:
    """Parse word text over {x, y}, case-insensitively, into canonical
    lowercase form.  Any other character is an error with its position."""
    out = []
    for index, ch in enumerate(text):
        low = ch.lower()
        if low not in ("x", "y"):
            raise WordParseError(
                f"invalid character {ch!r} at index {index}; expected x or y", index)
        out.append(low)
    return "".join(out)


def dual_word(word: Word) -> Word:
    """Reverse the word and exchange x with y.

    Together with swapping the parameters a and b at evaluation time this
    realizes the symmetry that maps each identity to its mirror.
    """
    swap = {"x": "y", "y": "x"}
    return "".join(swap[ch] for ch in reversed(parse_word(word)))


class RelationSystem(enum.Enum):
    """The three rewriting systems, tagged by their CLI names."""

    HOMOGENEOUS = "comm"
    ROOK_WEYL = "weyl"
    FILE = "file"

    @classmethod
    def from_tag(cls, tag: str) -> "RelationSystem":
        for member in cls:
            if member.value == tag.lower():
                return member
        raise DomainError(
            f"unknown relation system {tag!r}; expected one of "
            f"{[m.value for m in cls]}")


def _poly_const(poly: WeightPolynomial):
    """The integer value of a constant polynomial, else None."""
    if not poly.terms:
        return 0
    if len(poly.terms) == 1:
        ((monomial, c),) = poly.terms.items()
        if monomial == ():
            return c
    return None


class NormalForm:
    """A finite sum  sum_{i,j} c_{i,j} x^i y^j  with WeightPolynomial
    coefficients.  Immutable by convention; zero coefficients are never
    stored."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict):
        cleaned = {}
        for (i, j), c in coeffs.items():
            if isinstance(c, int):
                c = WeightPolynomial.from_int(c)
            if not c.is_zero():
                cleaned[(int(i), int(j))] = c
        self.coeffs = cleaned

    @classmethod
    def unit(cls) -> "NormalForm":
        return cls({(0, 0): WeightPolynomial.one()})

    @classmethod
    def zero(cls) -> "NormalForm":
        return cls({})

    @classmethod
    def monomial(cls, i: int, j: int, coeff=1) -> "NormalForm":
        return cls({(i, j): coeff})

    def __eq__(self, other) -> bool:
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "NormalForm") -> "NormalForm":
        total = dict(self.coeffs)
        for key, c in other.coeffs.items():
            prior = total.get(key)
            total[key] = c if prior is None else prior + c
        return NormalForm(total)

    def scaled(self, factor) -> "NormalForm":
        """Multiply every coefficient by an integer or WeightPolynomial."""
        return NormalForm({key: c * factor for key, c in self.coeffs.items()})

    def scaled_symbol(self, s: int, t: int) -> "NormalForm":
        """Multiply every coefficient by the single symbol w(s, t)."""
        return NormalForm(
            {key: c.times_symbol(s, t) for key, c in self.coeffs.items()})

    def evaluate(self, family, cache: dict | None = None) -> dict:
        """Substitute family weights for the symbols in every coefficient."""
        if cache is None:
            cache = {}
        return {key: c.evaluate(family, cache) for key, c in self.coeffs.items()}

    def sorted_terms(self):
        """Terms ordered by descending total degree, then x-degree."""
        return sorted(self.coeffs.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        rendered = []
        for (i, j), c in self.sorted_terms():
            parts = []
            const = _poly_const(c)
            if const is None:
                parts.append(f"({c})")
            elif const != 1 or (i == 0 and j == 0):
                parts.append(str(const))
            if i == 1:
                parts.append("x")
            elif i > 1:
                parts.append(f"x^{i}")
            if j == 1:
                parts.append("y")
            elif j > 1:
                parts.append(f"y^{j}")
            rendered.append(" ".join(parts))
        return " + ".join(rendered)

    def __repr__(self) -> str:
        return f"NormalForm({self})"

    def to_json(self) -> dict:
        terms = []
        for (i, j), c in sorted(self.coeffs.items()):
            terms.append({"i": i, "j": j, "coeff": c.to_json()})
        return {"terms": terms}

    @classmethod
    def from_json(cls, data) -> "NormalForm":
        coeffs = {}
        for term in data["terms"]:
            coeffs[(int(term["i"]), int(term["j"]))] = \
                WeightPolynomial.from_json(term["coeff"])
        return cls(coeffs)


_NO_CACHE: dict = {}


def _find_descent(word: str, strategy: str) -> int:
    if strategy == "rightmost":
        for i in range(len(word) - 2, -1, -1):
            if word[i] == "y" and word[i + 1] == "x":
                return i
        return -1
    if strategy == "leftmost":
        for i in range(len(word) - 1):
            if word[i] == "y" and word[i + 1] == "x":
                return i
        return -1
    raise DomainError(f"unknown strategy {strategy!r}; expected rightmost or leftmost")


def normal_order(word: Word, rs: RelationSystem,
                 strategy: str = "rightmost") -> NormalForm:
    """Normal order a word under the given rewriting system.

    Each step replaces one descent yx and moves the created weight symbol
    to the front, shifting its indices past the prefix; the recursion is
    memoized globally on (word, system, strategy).
    """
    word = parse_word(word)
    key = (word, rs, strategy)
    hit = _NO_CACHE.get(key)
    if hit is not None:
        return hit
    pos = _find_descent(word, strategy)
    if pos < 0:
        m = word.count("x")
        result = NormalForm.monomial(m, len(word) - m)
    else:
        prefix = word[:pos]
        suffix = word[pos + 2:]
        s = 1 + prefix.count("x")
        t = 1 + prefix.count("y")
        swapped = normal_order(prefix + "xy" + suffix, rs, strategy)
        result = swapped.scaled_symbol(s, t)
        if rs is RelationSystem.ROOK_WEYL:
            result = result + normal_order(prefix + suffix, rs, strategy)
        elif rs is RelationSystem.FILE:
            result = result + normal_order(prefix + "y" + suffix, rs, strategy)
    _NO_CACHE[key] = result
    return result


def multiply(a: NormalForm, b: NormalForm, rs: RelationSystem) -> NormalForm:
    """Product of two normal forms, re-normally-ordered.

    Coefficients of the right factor travel left past the left factor's
    monomial, picking up the index shift (i, j) for x^i y^j crossed.
    """
    total: dict = {}
    for (i1, j1), c1 in a.coeffs.items():
        for (i2, j2), c2 in b.coeffs.items():
            scalar = c1 * c2.shift(i1, j1)
            cross = normal_order("x" * i1 + "y" * j1 + "x" * i2 + "y" * j2, rs)
            for key, c in cross.coeffs.items():
                piece = c * scalar
                prior = total.get(key)
                total[key] = piece if prior is None else prior + piece
    return NormalForm(total)


_POWER_SUM_CACHE: dict = {}


def expand_power_sum(n: int, rs: RelationSystem = RelationSystem.HOMOGENEOUS) -> NormalForm:
    """Normal form of (x + y)^n, built by incremental multiplication."""
    if n < 0:
        raise DomainError("expand_power_sum needs n >= 0")
    key = (n, rs)
    hit = _POWER_SUM_CACHE.get(key)
    if hit is not None:
        return hit
    if n == 0:
        result = NormalForm.unit()
    else:
        x_plus_y = NormalForm({(1, 0): 1, (0, 1): 1})
        result = multiply(expand_power_sum(n - 1, rs), x_plus_y, rs)
    _POWER_SUM_CACHE[key] = result
    return result


def evaluate(nf: NormalForm, family) -> dict:
    """Evaluate a normal form under a weight family: map (i, j) -> complex."""
    return nf.evaluate(family)
