"""
Formal linear combinations and the generic left-module machinery.

A HeckeModule only has to say how T_s acts on a basis vector; products,
the action of arbitrary Hecke elements, the bar involution and the
relation checks are derived here.
"""
from abc import ABC, abstractmethod
from typing import Any, Callable, Dict, Hashable, Iterable, List, Optional, Tuple

from .coxeter import INFINITY
from .laurent import eps, q_of
from .report import CheckReport


class LinearCombination:
    """Finite sum of basis keys with ring coefficients; zero terms are dropped."""

    __slots__ = ("parent", "_terms")

    def __init__(self, parent: "HeckeModule", terms: Optional[Dict[Hashable, Any]] = None):
        self.parent = parent
        self._terms = {k: v for k, v in (terms or {}).items() if v}

    def _new(self, terms: Dict[Hashable, Any]) -> "LinearCombination":
        return type(self)(self.parent, terms)

    def items(self) -> List[Tuple[Hashable, Any]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    def support(self) -> List[Hashable]:
        return sorted(self._terms)

    def coefficient(self, key: Hashable):
        return self._terms.get(key, self.parent.weights.zero())

    def __contains__(self, key: Hashable) -> bool:
        return key in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            terms[key] = terms[key] + coeff if key in terms else coeff
        return self._new(terms)

    def __neg__(self):
        return self._new({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "LinearCombination":
        return self._new({k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def map_coefficients(self, fn: Callable[[Any], Any]) -> "LinearCombination":
        return self._new({k: fn(v) for k, v in self._terms.items()})

    def to_json(self) -> List[list]:
        fmt = self.parent.format_key
        return [[fmt(k), v.to_json()] for k, v in self.items()]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        fmt = self.parent.format_key
        parts = []
        for key, coeff in self.items():
            parts.append(f"({coeff})*{self.parent.symbol}_{fmt(key)}")
        return " + ".join(parts)

    __repr__ = __str__


class HeckeModule(ABC):
    """
    Left module over a Hecke algebra given by the action of each T_s on a basis.

    Subclasses implement basis() and act_gen_basis(s, key).
    """

    element_class = LinearCombination
    symbol = "v"

    def __init__(self, algebra):
        self.algebra = algebra
        self.system = algebra.system
        self.weights = algebra.weights
        self._gen_cache: Dict[Tuple[int, Hashable], LinearCombination] = {}
        self._bar_cache: Dict[Hashable, LinearCombination] = {}

    @abstractmethod
    def basis(self) -> List[Hashable]:
        ...

    @abstractmethod
    def act_gen_basis(self, s: int, key: Hashable) -> LinearCombination:
        ...

    def base_key(self) -> Hashable:
        """Basis vector that generates the module and is fixed by bar."""
        return self.system.identity

    def format_key(self, key: Hashable) -> str:
        return self.system.format(key)

    # -- construction --------------------------------------------------

    def element(self, terms: Optional[Dict[Hashable, Any]] = None) -> LinearCombination:
        return self.element_class(self, terms)

    def basis_element(self, key: Hashable) -> LinearCombination:
        return self.element({key: self.weights.one()})

    def zero(self) -> LinearCombination:
        return self.element({})

    # -- action --------------------------------------------------------

    def _gen_on_basis(self, s: int, key: Hashable) -> LinearCombination:
        cached = self._gen_cache.get((s, key))
        if cached is None:
            cached = self.act_gen_basis(s, key)
            self._gen_cache[(s, key)] = cached
        return cached

    def act_gen(self, s: int, m: LinearCombination) -> LinearCombination:
        """T_s . m"""
        terms: Dict[Hashable, Any] = {}
        for key, coeff in m.items():
            for k2, c2 in self._gen_on_basis(s, key).items():
                value = coeff * c2
                terms[k2] = terms[k2] + value if k2 in terms else value
        return self.element(terms)

    def act_word(self, word: Iterable[int], m: LinearCombination) -> LinearCombination:
        """T_{s1} ... T_{sk} . m for the word (s1, ..., sk)."""
        for s in reversed(tuple(word)):
            m = self.act_gen(s, m)
        return m

    def act(self, h: LinearCombination, m: LinearCombination) -> LinearCombination:
        """h . m for a Hecke algebra element h."""
        total = self.zero()
        for w, coeff in h.items():
            total = total + self.act_word(w.word, m).scale(coeff)
        return total

    # -- bar involution ------------------------------------------------

    def bar_basis(self, key: Hashable) -> LinearCombination:
        """bar(v_key) = bar(T_key) . v_e"""
        cached = self._bar_cache.get(key)
        if cached is None:
            cached = self.act(self.algebra.bar_basis(key), self.basis_element(self.base_key()))
            self._bar_cache[key] = cached
        return cached

    def bar(self, m: LinearCombination) -> LinearCombination:
        total = self.zero()
        for key, coeff in m.items():
            total = total + self.bar_basis(key).scale(coeff.bar())
        return total

    # -- relation checks -----------------------------------------------

    def check_relations(self, report: CheckReport) -> CheckReport:
        """Quadratic relation for every s and braid relations for every pair, on every basis vector."""
        names = self.system.names
        for key in self.basis():
            v = self.basis_element(key)
            for s in self.system.generators:
                q = self.weights.q(s)
                tv = self.act_gen(s, v)
                lhs = self.act_gen(s, tv)
                rhs = v.scale(q) + tv.scale(q - 1)
                report.expect(lhs == rhs, f"quadratic {names[s]} on {self.symbol}_{self.format_key(key)}")
        for key in self.basis():
            v = self.basis_element(key)
            for s in self.system.generators:
                for t in range(s + 1, self.system.rank):
                    m = self.system.matrix.order(s, t)
                    if m == INFINITY:
                        continue
                    left = tuple(s if i % 2 == 0 else t for i in range(m))
                    right = tuple(t if i % 2 == 0 else s for i in range(m))
                    report.expect(
                        self.act_word(left, v) == self.act_word(right, v),
                        f"braid {names[s]},{names[t]} on {self.symbol}_{self.format_key(key)}",
                    )
        return report

    def check_bar(self, report: CheckReport) -> CheckReport:
        """bar is an involution and bar(T_s m) = bar(T_s) bar(m) on every basis vector."""
        names = self.system.names
        base = self.base_key()
        report.expect(self.bar_basis(base) == self.basis_element(base),
                      f"bar does not fix {self.symbol}_{self.format_key(base)}")
        for key in self.basis():
            v = self.basis_element(key)
            bv = self.bar(v)
            report.expect(self.bar(bv) == v, f"bar twice on {self.symbol}_{self.format_key(key)}")
            for s in self.system.generators:
                lhs = self.bar(self.act_gen(s, v))
                rhs = self.act(self.algebra.bar_basis(self.system.gen(s)), bv)
                report.expect(lhs == rhs, f"bar(T_{names[s]} {self.symbol}_{self.format_key(key)}) compatibility")
        return report


def dualize(m: LinearCombination, target: HeckeModule) -> LinearCombination:
    """
    Sign-twisted duality into target: sum c_w v_w  ->  sum phi(c_w) eps_w q_w bar(v'_w).

    This is the common shape of theta_J, eta_J, delta and rho.

    Raises:
        PhiUndefined: if the weights do not support the sign twist
    """
    weights = target.weights
    weights.require_phi()
    total = target.zero()
    for key, coeff in m.items():
        factor = coeff.phi() * eps(key) * q_of(key, weights)
        total = total + target.bar(target.basis_element(key)).scale(factor)
    return total
