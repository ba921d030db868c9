"""
Laurent polynomials over the weight lattice Gamma = Z^r and weight functions.

Gamma is realised as Z^r with the lexicographic order. Exponents are stored
doubled, so q^(1/2) has exponent (1,) and q has exponent (2,) when r = 1;
all arithmetic stays in the integers.
"""
import re
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import InvalidWeights, PhiUndefined

Exponent = Tuple[int, ...]  # doubled vector, compared lexicographically

_MAX_DIVISION_STEPS = 10000


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def _sub_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def _neg_exp(a: Exponent) -> Exponent:
    return tuple(-x for x in a)


class Scalar:
    """
    Element of Z[Gamma]: a finite map from doubled exponents to nonzero integers.

    Instances are immutable and hashable. Plain ints coerce to constants, so
    `q - 1` works when `q` is a Scalar.
    """

    __slots__ = ("rank", "_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Exponent, int]] = None, rank: int = 1):
        clean: Dict[Exponent, int] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(x) for x in exp)
            if len(exp) != rank:
                raise ValueError(f"Exponent {exp} does not have rank {rank}")
            coeff = int(coeff)
            if coeff:
                clean[exp] = clean.get(exp, 0) + coeff
        self._terms = {e: c for e, c in clean.items() if c}
        self.rank = rank
        self._hash: Optional[int] = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, rank: int = 1) -> "Scalar":
        return cls({}, rank)

    @classmethod
    def constant(cls, value: int, rank: int = 1) -> "Scalar":
        return cls({(0,) * rank: value}, rank)

    @classmethod
    def one(cls, rank: int = 1) -> "Scalar":
        return cls.constant(1, rank)

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1) -> "Scalar":
        """Monomial with the given doubled exponent."""
        exp = tuple(exp)
        return cls({exp: coeff}, len(exp))

    @classmethod
    def q(cls, units: Union[int, Sequence[int]] = 1, coeff: int = 1) -> "Scalar":
        """Monomial q^gamma with gamma given in whole units (not doubled)."""
        if isinstance(units, int):
            units = (units,)
        return cls.monomial(tuple(2 * u for u in units), coeff)

    @classmethod
    def from_json(cls, data: Sequence[Sequence], rank: Optional[int] = None) -> "Scalar":
        """Inverse of to_json: a list of [doubled-exponent-vector, coefficient] pairs."""
        terms: Dict[Exponent, int] = {}
        for pair in data:
            exp, coeff = pair
            exp = tuple(exp) if isinstance(exp, (list, tuple)) else (int(exp),)
            terms[exp] = terms.get(exp, 0) + int(coeff)
            if rank is None:
                rank = len(exp)
        return cls(terms, rank or 1)

    # -- inspection ---------------------------------------------------

    def items(self) -> List[Tuple[Exponent, int]]:
        """Terms sorted by exponent (lexicographic, ascending)."""
        return sorted(self._terms.items())

    def exponents(self) -> List[Exponent]:
        return sorted(self._terms)

    def coefficient(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def leading(self) -> Tuple[Exponent, int]:
        exp = max(self._terms)
        return exp, self._terms[exp]

    def trailing(self) -> Tuple[Exponent, int]:
        exp = min(self._terms)
        return exp, self._terms[exp]

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, int]]:
        return iter(self.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other) -> Optional["Scalar"]:
        if isinstance(other, Scalar):
            if other.rank != self.rank and other and self:
                raise ValueError(f"Rank mismatch: {self.rank} vs {other.rank}")
            return other
        if isinstance(other, int):
            return Scalar.constant(other, self.rank)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for exp, coeff in o._terms.items():
            terms[exp] = terms.get(exp, 0) + coeff
        return Scalar(terms, self.rank if self else o.rank)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar({e: -c for e, c in self._terms.items()}, self.rank)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms: Dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                key = _add_exp(e1, e2)
                terms[key] = terms.get(key, 0) + c1 * c2
        rank = self.rank if self else o.rank
        return Scalar(terms, rank)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        result = Scalar.one(self.rank)
        for _ in range(n):
            result = result * self
        return result

    def inverse(self) -> "Scalar":
        """Inverse of a unit monomial (+-q^gamma)."""
        if not self.is_monomial():
            raise ZeroDivisionError(f"{self} is not a unit of Z[Gamma]")
        exp, coeff = self.leading()
        if coeff not in (1, -1):
            raise ZeroDivisionError(f"{self} is not a unit of Z[Gamma]")
        return Scalar({_neg_exp(exp): coeff}, self.rank)

    def exact_div(self, other) -> "Scalar":
        """
        Exact quotient self / other in Z[Gamma].

        Raises:
            ZeroDivisionError: if other is zero
            ValueError: if other does not divide self
        """
        o = self._coerce(other)
        if o is None or not o:
            raise ZeroDivisionError("division by zero scalar")
        if not self:
            return Scalar.zero(self.rank)
        lead_exp, lead_coeff = o.leading()
        floor = _sub_exp(self.trailing()[0], o.trailing()[0])
        remainder = dict(self._terms)
        quotient: Dict[Exponent, int] = {}
        for _ in range(_MAX_DIVISION_STEPS):
            if not remainder:
                return Scalar(quotient, self.rank)
            exp = max(remainder)
            coeff = remainder[exp]
            if coeff % lead_coeff:
                raise ValueError(f"{o} does not divide {self}")
            q_exp = _sub_exp(exp, lead_exp)
            if q_exp < floor:
                raise ValueError(f"{o} does not divide {self}")
            q_coeff = coeff // lead_coeff
            quotient[q_exp] = quotient.get(q_exp, 0) + q_coeff
            for oe, oc in o._terms.items():
                key = _add_exp(q_exp, oe)
                value = remainder.get(key, 0) - q_coeff * oc
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)
        raise ValueError(f"division of {self} by {o} did not terminate")

    # -- involutions --------------------------------------------------

    def bar(self) -> "Scalar":
        """q^gamma -> q^-gamma termwise."""
        return Scalar({_neg_exp(e): c for e, c in self._terms.items()}, self.rank)

    def phi(self) -> "Scalar":
        """Sign twist: a monomial with doubled exponent d picks up (-1)^(sum d)."""
        return Scalar({e: (-c if sum(e) % 2 else c) for e, c in self._terms.items()}, self.rank)

    def min_exponent_at_least(self, bound: Exponent) -> bool:
        """True when every exponent is >= bound (zero passes trivially)."""
        return all(e >= tuple(bound) for e in self._terms)

    # -- comparison / hashing -----------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == Scalar.constant(other, self.rank)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- serialization ------------------------------------------------

    def to_json(self) -> List[list]:
        return [[list(e), c] for e, c in self.items()]

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r})"


def _format_monomial(exp: Exponent) -> str:
    parts = []
    for i, d in enumerate(exp):
        if d == 0:
            continue
        var = "q" if len(exp) == 1 else f"q{i + 1}"
        if d == 2:
            parts.append(var)
        elif d % 2 == 0:
            parts.append(f"{var}^{d // 2}")
        else:
            parts.append(f"{var}^({d}/2)")
    return "*".join(parts)


def format_scalar(a: Scalar) -> str:
    """Human-readable form, highest exponent first: q^2-2*q+1, q^(1/2), 0."""
    if not a:
        return "0"
    out = []
    for exp, coeff in sorted(a.items(), reverse=True):
        mono = _format_monomial(exp)
        size = abs(coeff)
        if not mono:
            body = str(size)
        elif size == 1:
            body = mono
        else:
            body = f"{size}*{mono}"
        if not out:
            out.append(("-" if coeff < 0 else "") + body)
        else:
            out.append(("-" if coeff < 0 else "+") + body)
    return "".join(out)


_FACTOR_RE = re.compile(r"^q(\d*)(?:\^(?:(-?\d+)|\((-?\d+)/2\)))?$")


def parse_scalar(text: str, rank: int = 1) -> Scalar:
    """
    Inverse of format_scalar: "q^2-2*q+1", "q^(1/2)", "q1*q2^-1", "0".

    Raises:
        ValueError: on a malformed term
    """
    body = str(text).replace(" ", "")
    if body in ("", "0"):
        return Scalar.zero(rank)
    # signs inside exponents are not term separators
    body = body.replace("^-", "^~").replace("(-", "(~")
    terms: Dict[Exponent, int] = {}
    for sign, chunk in re.findall(r"([+-]?)([^+-]+)", body):
        coeff = -1 if sign == "-" else 1
        exp = [0] * rank
        for factor in chunk.replace("~", "-").split("*"):
            if factor.isdigit():
                coeff *= int(factor)
                continue
            match = _FACTOR_RE.match(factor)
            if not match:
                raise ValueError(f"Cannot read term '{chunk}' in '{text}'")
            index = int(match.group(1)) - 1 if match.group(1) else 0
            if not 0 <= index < rank:
                raise ValueError(f"'{factor}' names parameter {index + 1} but the rank is {rank}")
            if match.group(2) is not None:
                exp[index] += 2 * int(match.group(2))
            elif match.group(3) is not None:
                exp[index] += int(match.group(3))
            else:
                exp[index] += 2
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + coeff
    return Scalar(terms, rank)


def bar_scalar(a: Scalar) -> Scalar:
    return a.bar()


@dataclass(frozen=True)
class WeightFunction:
    """
    Weight function L: S -> Gamma, stored as doubled exponent vectors.

    q_s = q^{L(s)}; L extends additively along reduced words.
    """

    doubled: Tuple[Exponent, ...]

    @property
    def rank(self) -> int:
        return len(self.doubled[0]) if self.doubled else 1

    @property
    def size(self) -> int:
        return len(self.doubled)

    @classmethod
    def equal(cls, n_generators: int) -> "WeightFunction":
        """Equal parameters: Gamma = Z and L(s) = 1 for all s."""
        return cls(tuple((2,) for _ in range(n_generators)))

    @classmethod
    def from_units(cls, units: Sequence[Union[int, Sequence[int]]]) -> "WeightFunction":
        """Build from per-generator vectors given in whole Gamma units."""
        rows = []
        for u in units:
            vec = (u,) if isinstance(u, int) else tuple(u)
            rows.append(tuple(2 * int(x) for x in vec))
        if len({len(r) for r in rows}) > 1:
            raise InvalidWeights("All weights must have the same rank")
        return cls(tuple(rows))

    @classmethod
    def generic(cls, matrix: Sequence[Sequence[int]]) -> "WeightFunction":
        """
        One independent parameter per class of generators joined by odd m[s][t].

        The rank r is the number of such classes; L(s) is the unit vector of its class.
        """
        classes = odd_classes(matrix)
        rank = max(classes) + 1 if classes else 1
        rows = []
        for cls_index in classes:
            vec = [0] * rank
            vec[cls_index] = 2
            rows.append(tuple(vec))
        return cls(tuple(rows))

    def units(self, s: int) -> Tuple[int, ...]:
        return tuple(x // 2 for x in self.doubled[s])

    def q(self, s: int) -> Scalar:
        return Scalar.monomial(self.doubled[s])

    def q_half(self, s: int) -> Scalar:
        """q_s^(1/2)"""
        return Scalar.monomial(tuple(x // 2 for x in self.doubled[s]))

    def exponent_of_word(self, word: Sequence[int]) -> Exponent:
        total = (0,) * self.rank
        for s in word:
            total = _add_exp(total, self.doubled[s])
        return total

    def q_word(self, word: Sequence[int]) -> Scalar:
        return Scalar.monomial(self.exponent_of_word(word))

    def zero(self) -> Scalar:
        return Scalar.zero(self.rank)

    def one(self) -> Scalar:
        return Scalar.one(self.rank)

    def constant(self, value: int) -> Scalar:
        return Scalar.constant(value, self.rank)

    def is_zero_weight(self, s: int) -> bool:
        return not any(self.doubled[s])

    def validate(self, matrix: Sequence[Sequence[int]]) -> None:
        """
        Check L(s) >= 0, integrality, and L(s) = L(t) whenever m[s][t] is odd.

        Raises:
            InvalidWeights: on the first violation found
        """
        n = len(matrix)
        if len(self.doubled) != n:
            raise InvalidWeights(f"Expected {n} weights, got {len(self.doubled)}")
        zero = (0,) * self.rank
        for s, vec in enumerate(self.doubled):
            if len(vec) != self.rank:
                raise InvalidWeights(f"Weight of generator {s} has rank {len(vec)}, expected {self.rank}")
            if any(x % 2 for x in vec):
                raise InvalidWeights(f"Weight of generator {s} is not integral")
            if vec < zero:
                raise InvalidWeights(f"Weight of generator {s} is negative: {self.units(s)}")
        for s in range(n):
            for t in range(s + 1, n):
                m = matrix[s][t]
                if m > 0 and m % 2 == 1 and self.doubled[s] != self.doubled[t]:
                    raise InvalidWeights(
                        f"m[{s}][{t}] = {m} is odd but L differs: {self.units(s)} vs {self.units(t)}"
                    )

    def phi_compatible(self) -> bool:
        """Every L(s) nonzero with odd coordinate sum in whole units."""
        return all(any(vec) and sum(x // 2 for x in vec) % 2 == 1 for vec in self.doubled)

    def require_phi(self) -> None:
        if not self.phi_compatible():
            raise PhiUndefined(
                "Sign map needs every L(s) nonzero with odd unit coordinate sum; "
                f"got {[self.units(s) for s in range(self.size)]}"
            )

    def to_json(self) -> Dict[str, object]:
        return {
            "units": [list(self.units(s)) for s in range(self.size)],
            "rank": self.rank,
            "gamma": f"Z^{self.rank} lexicographic",
            "exponent_encoding": "doubled",
        }


def odd_classes(matrix: Sequence[Sequence[int]]) -> List[int]:
    """Class index per generator for the relation 'm[s][t] odd'; classes numbered by first member."""
    n = len(matrix)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in range(n):
        for t in range(s + 1, n):
            m = matrix[s][t]
            if m > 0 and m % 2 == 1:
                parent[find(t)] = find(s)
    labels: Dict[int, int] = {}
    out = []
    for s in range(n):
        root = find(s)
        if root not in labels:
            labels[root] = len(labels)
        out.append(labels[root])
    return out


def phi_scalar(a: Scalar, weights: WeightFunction) -> Scalar:
    """
    Sign twist on scalars.

    Raises:
        PhiUndefined: if the weights do not support it
    """
    weights.require_phi()
    return a.phi()


def q_of(w, weights: WeightFunction) -> Scalar:
    """q_w = q^{L(w)} computed along the canonical reduced word of w."""
    return weights.q_word(w.word)


def eps(w) -> int:
    """(-1)^length"""
    return -1 if len(w.word) % 2 else 1


def in_qs_ideal(r: Scalar, s: int, weights: WeightFunction) -> bool:
    """r lies in q_s Z[Gamma_{>=0}]: every exponent is at least L(s)."""
    return r.min_exponent_at_least(weights.doubled[s])


def in_nonnegative(r: Scalar) -> bool:
    """r lies in Z[Gamma_{>=0}]."""
    return r.min_exponent_at_least((0,) * r.rank)
