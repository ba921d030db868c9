"""
Finite Coxeter systems realised by their action on the positive roots.

Every group element carries the permutation it induces on the root set
(positive roots are indices 0..N-1, their negatives N..2N-1) together with
its ShortLex-minimal reduced word. Simple roots are indices 0..n-1.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import ConfigError, InfiniteOrTooLarge, InvalidMatrix, NotACosetRep

LOG = logging.getLogger("heckeideal.coxeter")

INFINITY = 0  # matrix entry encoding m[s][t] = infinity
DEFAULT_ROOT_CAP = 10000
_KEY_DECIMALS = 6

_INFINITY_TOKENS = {"inf", "infinity", "∞", "oo"}


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


class ParabolicCase(str, Enum):
    """Position of s relative to sigma in D_J"""
    MINUS = "minus"  # s sigma < sigma
    PLUS = "plus"    # s sigma > sigma and s sigma in D_J
    ZERO = "zero"    # s sigma > sigma and s sigma not in D_J


def parse_order(value: Any) -> int:
    """Read one Coxeter matrix entry; infinity becomes INFINITY (0)."""
    if value is None:
        return INFINITY
    if isinstance(value, str):
        token = value.strip().lower()
        if token in _INFINITY_TOKENS:
            return INFINITY
        try:
            value = int(token)
        except ValueError:
            raise InvalidMatrix(f"Cannot read matrix entry '{value}'. Use an integer or 'inf'")
    if isinstance(value, float):
        if value == float("inf"):
            return INFINITY
        value = int(value)
    if value <= 0:
        return INFINITY
    return int(value)


@dataclass(frozen=True)
class CoxeterMatrix:
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if n == 0:
            raise InvalidMatrix("Coxeter matrix must have rank >= 1")
        for s, row in enumerate(self.entries):
            if len(row) != n:
                raise InvalidMatrix(f"Row {s} has {len(row)} entries, expected {n}")
            if row[s] != 1:
                raise InvalidMatrix(f"Diagonal entry m[{s}][{s}] = {row[s]}, expected 1")
            for t in range(n):
                if self.entries[t][s] != row[t]:
                    raise InvalidMatrix(f"Matrix not symmetric at ({s}, {t})")
                if t != s and row[t] != INFINITY and row[t] < 2:
                    raise InvalidMatrix(f"Off-diagonal entry m[{s}][{t}] = {row[t]} must be >= 2 or inf")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> "CoxeterMatrix":
        return cls(tuple(tuple(parse_order(v) for v in row) for row in rows))

    @property
    def rank(self) -> int:
        return len(self.entries)

    def order(self, s: int, t: int) -> int:
        return self.entries[s][t]

    def to_json(self) -> List[List[Union[int, str]]]:
        return [["inf" if v == INFINITY else v for v in row] for row in self.entries]


@dataclass(frozen=True, order=True)
class Element:
    """
    Group element in canonical form.

    Ordering is (length, ShortLex word); the root permutation is carried along
    but takes no part in equality or hashing.
    """
    length: int
    word: Tuple[int, ...]
    perm: Tuple[int, ...] = field(compare=False, repr=False)

    @property
    def is_identity(self) -> bool:
        return self.length == 0


def _root_key(v: np.ndarray) -> Tuple[float, ...]:
    return tuple(float(x) for x in np.round(v, _KEY_DECIMALS) + 0.0)


def _root_closure(matrix: CoxeterMatrix, cap: int) -> Tuple[List[np.ndarray], List[Tuple[int, ...]]]:
    """Positive roots in the Tits representation plus each generator's root permutation."""
    n = matrix.rank
    orders = np.array(matrix.entries, dtype=float)
    orders[orders <= 0] = 0.5  # -cos(2 pi) = -1 for infinite order
    form = -1 * np.cos(np.pi / orders)
    basis = np.eye(n)

    def reflect(s: int, v: np.ndarray) -> np.ndarray:
        return v - 2.0 * float(form[s] @ v) * basis[s]

    roots: List[np.ndarray] = [basis[i] for i in range(n)]
    index = {_root_key(r): i for i, r in enumerate(roots)}
    queue = deque(range(n))
    while queue:
        i = queue.popleft()
        for s in range(n):
            if i == s:
                continue
            v = reflect(s, roots[i])
            key = _root_key(v)
            if key in index:
                continue
            roots.append(v)
            index[key] = len(roots) - 1
            queue.append(len(roots) - 1)
            if len(roots) > cap:
                raise InfiniteOrTooLarge(
                    f"Positive-root closure exceeded cap {cap}; group is infinite or too large"
                )

    total = len(roots)
    gen_perm = []
    for s in range(n):
        perm = [0] * (2 * total)
        for i, root in enumerate(roots):
            if i == s:
                perm[i] = total + s
                perm[total + s] = s
                continue
            j = index[_root_key(reflect(s, root))]
            perm[i] = j
            perm[total + i] = total + j
        gen_perm.append(tuple(perm))
    return roots, gen_perm


class CoxeterSystem:
    """
    Finite Coxeter system with a canonical-form element engine.

    Immutable after construction apart from memo tables, so it can be shared.
    """

    def __init__(
        self,
        matrix: CoxeterMatrix,
        names: Optional[Sequence[str]] = None,
        cap: int = DEFAULT_ROOT_CAP,
        name: Optional[str] = None,
    ):
        if cap < matrix.rank:
            raise ConfigError(f"Root cap {cap} is smaller than the rank {matrix.rank}")
        self.matrix = matrix
        self.rank = matrix.rank
        self.names: Tuple[str, ...] = tuple(names) if names else tuple(f"s{i + 1}" for i in range(self.rank))
        if len(self.names) != self.rank:
            raise InvalidMatrix(f"{len(self.names)} generator names for rank {self.rank}")
        if len(set(self.names)) != self.rank:
            raise InvalidMatrix(f"Generator names must be distinct: {self.names}")
        self.name = name or "W"
        self.cap = cap
        self.roots, self._gen_perm = _root_closure(matrix, cap)
        self.n_pos = len(self.roots)
        self._by_perm: Dict[Tuple[int, ...], Element] = {}
        self._elements: Optional[List[Element]] = None
        self._bruhat: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], bool] = {}
        self.identity = self._from_perm(tuple(range(2 * self.n_pos)))
        LOG.debug("Built %s: rank %d, %d positive roots", self.name, self.rank, self.n_pos)

    @property
    def generators(self) -> range:
        return range(self.rank)

    # -- element engine -----------------------------------------------

    def _inverse_perm(self, perm: Tuple[int, ...]) -> Tuple[int, ...]:
        inv = [0] * len(perm)
        for i, v in enumerate(perm):
            inv[v] = i
        return tuple(inv)

    def _from_perm(self, perm: Tuple[int, ...]) -> Element:
        cached = self._by_perm.get(perm)
        if cached is not None:
            return cached
        word: List[int] = []
        cur = perm
        while True:
            inv = self._inverse_perm(cur)
            step = next((s for s in self.generators if inv[s] >= self.n_pos), None)
            if step is None:
                break
            word.append(step)
            g = self._gen_perm[step]
            cur = tuple(g[x] for x in cur)
        element = Element(len(word), tuple(word), perm)
        self._by_perm[perm] = element
        return element

    def _check_generator(self, s: int) -> None:
        if not 0 <= s < self.rank:
            raise IndexError(f"Generator index {s} out of range 0..{self.rank - 1}")

    def gen(self, s: int) -> Element:
        self._check_generator(s)
        return self._from_perm(self._gen_perm[s])

    def canonical(self, word: Iterable[int]) -> Element:
        """ShortLex-minimal reduced form of the product of the given generators."""
        perm = tuple(range(2 * self.n_pos))
        for s in word:
            self._check_generator(s)
            g = self._gen_perm[s]
            perm = tuple(perm[g[i]] for i in range(len(perm)))
        return self._from_perm(perm)

    def multiply(self, a: Element, b: Element) -> Element:
        return self._from_perm(tuple(a.perm[x] for x in b.perm))

    def inverse(self, a: Element) -> Element:
        return self._from_perm(self._inverse_perm(a.perm))

    def length(self, a: Element) -> int:
        return a.length

    def left_mul(self, s: int, w: Element) -> Element:
        g = self._gen_perm[s]
        return self._from_perm(tuple(g[x] for x in w.perm))

    def right_mul(self, w: Element, s: int) -> Element:
        g = self._gen_perm[s]
        return self._from_perm(tuple(w.perm[x] for x in g))

    def inversion_count(self, w: Element) -> int:
        """Number of positive roots sent negative by w."""
        return sum(1 for i in range(self.n_pos) if w.perm[i] >= self.n_pos)

    # -- descents -----------------------------------------------------

    def is_left_descent(self, s: int, w: Element) -> bool:
        return w.perm.index(s) >= self.n_pos

    def is_right_descent(self, s: int, w: Element) -> bool:
        return w.perm[s] >= self.n_pos

    def descents(self, w: Element, side: Side = Side.LEFT) -> FrozenSet[int]:
        if side == Side.LEFT:
            inv = self._inverse_perm(w.perm)
            return frozenset(s for s in self.generators if inv[s] >= self.n_pos)
        return frozenset(s for s in self.generators if w.perm[s] >= self.n_pos)

    # -- enumeration --------------------------------------------------

    def elements(self) -> List[Element]:
        """All elements in (length, ShortLex) order."""
        if self._elements is None:
            out = [self.identity]
            level = [self.identity]
            while level:
                nxt = set()
                for w in level:
                    for s in self.generators:
                        if not self.is_left_descent(s, w):
                            nxt.add(self.left_mul(s, w))
                level = sorted(nxt)
                out.extend(level)
            self._elements = out
            LOG.info("Enumerated %s: |W| = %d", self.name, len(out))
        return list(self._elements)

    def order(self) -> int:
        return len(self.elements())

    def longest_element(self) -> Element:
        return self.elements()[-1]

    # -- parabolic data -----------------------------------------------

    def min_coset_reps(self, J: Iterable[int]) -> List[Element]:
        """D_J: elements with no right descent in J, sorted."""
        J = frozenset(J)
        return [w for w in self.elements() if not (self.descents(w, Side.RIGHT) & J)]

    def in_coset_reps(self, w: Element, J: Iterable[int]) -> bool:
        return not any(self.is_right_descent(s, w) for s in J)

    def in_parabolic(self, w: Element, J: Iterable[int]) -> bool:
        J = frozenset(J)
        return all(s in J for s in w.word)

    def parabolic_subgroup(self, J: Iterable[int]) -> List[Element]:
        J = frozenset(J)
        return [w for w in self.elements() if self.in_parabolic(w, J)]

    def coset_factorize(self, w: Element, J: Iterable[int]) -> Tuple[Element, Element]:
        """w = sigma * w_J with sigma in D_J, w_J in W_J and additive lengths."""
        J = frozenset(J)
        sigma = w
        while True:
            tail = sorted(s for s in J if self.is_right_descent(s, sigma))
            if not tail:
                break
            sigma = self.right_mul(sigma, tail[0])
        w_J = self.multiply(self.inverse(sigma), w)
        return sigma, w_J

    def classify_parabolic(self, s: int, sigma: Element, J: Iterable[int]) -> ParabolicCase:
        """
        Case of T_s acting on m_sigma.

        Raises:
            NotACosetRep: if sigma is not in D_J
        """
        J = frozenset(J)
        if not self.in_coset_reps(sigma, J):
            raise NotACosetRep(f"{self.format(sigma)} is not a minimal coset representative for {self.format_set(J)}")
        if self.is_left_descent(s, sigma):
            return ParabolicCase.MINUS
        if self.in_coset_reps(self.left_mul(s, sigma), J):
            return ParabolicCase.PLUS
        return ParabolicCase.ZERO

    # -- orders -------------------------------------------------------

    def is_suffix(self, u: Element, w: Element) -> bool:
        """w = x*u with l(w) = l(x) + l(u); this is u <=_L w in the left weak order."""
        if u.length > w.length:
            return False
        x = self.multiply(w, self.inverse(u))
        return x.length + u.length == w.length

    left_weak_leq = is_suffix

    def bruhat_leq(self, u: Element, w: Element) -> bool:
        if u.length > w.length:
            return False
        if u.length == w.length:
            return u == w
        if u.length == 0:
            return True
        key = (u.word, w.word)
        cached = self._bruhat.get(key)
        if cached is not None:
            return cached
        s = w.word[0]  # smallest left descent of w
        sw = self.left_mul(s, w)
        if self.is_left_descent(s, u):
            result = self.bruhat_leq(self.left_mul(s, u), sw)
        else:
            result = self.bruhat_leq(u, sw)
        self._bruhat[key] = result
        return result

    # -- names --------------------------------------------------------

    def format(self, w: Element) -> str:
        if w.length == 0:
            return "e"
        return "".join(self.names[s] for s in w.word)

    def format_set(self, J: Iterable[int]) -> str:
        return "{" + ",".join(self.names[s] for s in sorted(J)) + "}"

    def generator_index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"Unknown generator '{name}'. Valid options: {', '.join(self.names)}")

    def subset(self, names: Iterable[Union[str, int]]) -> FrozenSet[int]:
        """Generator names (or indices) to a frozenset of indices."""
        out = set()
        for item in names:
            if isinstance(item, int):
                self._check_generator(item)
                out.add(item)
            else:
                out.add(self.generator_index(item))
        return frozenset(out)

    def parse(self, word: Union[str, Sequence[str]]) -> Element:
        """
        Element from a list of generator names or a concatenated name string.

        "e" and "" denote the identity; concatenations are split greedily by
        the longest matching generator name.
        """
        if isinstance(word, str):
            text = word.strip()
            if text in ("", "e"):
                return self.identity
            tokens = []
            pos = 0
            by_length = sorted(self.names, key=len, reverse=True)
            while pos < len(text):
                match = next((n for n in by_length if text.startswith(n, pos)), None)
                if match is None:
                    raise ValueError(f"Cannot parse '{word}' at position {pos}. Generators: {', '.join(self.names)}")
                tokens.append(match)
                pos += len(match)
            return self.canonical(self.generator_index(t) for t in tokens)
        return self.canonical(self.generator_index(t) for t in word)

    def describe(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "rank": self.rank,
            "generators": list(self.names),
            "matrix": self.matrix.to_json(),
            "positive_roots": self.n_pos,
            "order": self.order(),
        }


def build_system(
    matrix: Union[CoxeterMatrix, Sequence[Sequence[Any]]],
    cap: int = DEFAULT_ROOT_CAP,
    names: Optional[Sequence[str]] = None,
    name: Optional[str] = None,
) -> CoxeterSystem:
    """
    Build a finite Coxeter system.

    Args:
        matrix: CoxeterMatrix or nested rows (entries int, "inf" or None)
        cap: maximum number of positive roots before giving up
        names: generator names, default s1..sn
        name: label used in reports

    Raises:
        InvalidMatrix: on asymmetry or a bad entry
        InfiniteOrTooLarge: if the root closure exceeds cap
    """
    if not isinstance(matrix, CoxeterMatrix):
        matrix = CoxeterMatrix.from_rows(matrix)
    return CoxeterSystem(matrix, names=names, cap=cap, name=name)
