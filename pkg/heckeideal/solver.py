"""
Search for r-tables that make the ideal-module action a representation.

One unknown is introduced per admissible (s, y, z). The quadratic and braid
relations on every Gamma_y give polynomial equations in the unknowns with
Z[Gamma] coefficients, generated in increasing length of y. They are solved
by linear elimination where a unit coefficient allows it, by branching on
the roots of univariate equations and on the factors of single-term
equations, and the surviving assignments are filtered by the membership
condition and by the full module validation (which includes the bar
involution).
"""
import logging
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from .coxeter import INFINITY
from .errors import BadReference, Inconsistent, SolverIncomplete
from .hecke import HeckeAlgebra
from .ideals import IdealE, pos
from .ideal_module import (
    IdealModule,
    WGraphIdealDatum,
    admissible_unknowns,
    build_datum,
    validate_ideal_module,
)
from .laurent import Scalar, in_nonnegative, in_qs_ideal
from .parabolic import Variant, parse_variant

LOG = logging.getLogger("heckeideal.solver")

Monomial = Tuple[Tuple[int, int], ...]  # sorted (variable, power) pairs


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    powers = dict(a)
    for v, p in b:
        powers[v] = powers.get(v, 0) + p
    return tuple(sorted(powers.items()))


class Poly:
    """Polynomial in unknowns x0, x1, ... with Z[Gamma] coefficients."""

    __slots__ = ("rank", "_terms")

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None, rank: int = 1):
        self.rank = rank
        self._terms: Dict[Monomial, Scalar] = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, index: int, rank: int = 1) -> "Poly":
        return cls({((index, 1),): Scalar.one(rank)}, rank)

    @classmethod
    def const(cls, value: Scalar) -> "Poly":
        return cls({(): value}, value.rank)

    def _coerce(self, other) -> Optional["Poly"]:
        if isinstance(other, Poly):
            return other
        if isinstance(other, Scalar):
            return Poly({(): other}, self.rank)
        if isinstance(other, int):
            return Poly({(): Scalar.constant(other, self.rank)}, self.rank)
        return None

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in o._terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return Poly(terms, self.rank)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self._terms.items()}, self.rank)

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
        terms: Dict[Monomial, Scalar] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in o._terms.items():
                key = _mono_mul(m1, m2)
                value = c1 * c2
                terms[key] = terms[key] + value if key in terms else value
        return Poly(terms, self.rank)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        result = Poly.const(Scalar.one(self.rank))
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    __hash__ = None

    def variables(self) -> List[int]:
        return sorted({v for m in self._terms for v, _ in m})

    def degree_in(self, v: int) -> int:
        return max((p for m in self._terms for var, p in m if var == v), default=0)

    def is_constant(self) -> bool:
        return all(m == () for m in self._terms)

    def constant(self) -> Scalar:
        return self._terms.get((), Scalar.zero(self.rank))

    def coefficients_in(self, v: int) -> Dict[int, "Poly"]:
        """power of v -> coefficient polynomial in the other unknowns"""
        out: Dict[int, Dict[Monomial, Scalar]] = {}
        for m, c in self._terms.items():
            power = dict(m).get(v, 0)
            rest = tuple((var, p) for var, p in m if var != v)
            bucket = out.setdefault(power, {})
            bucket[rest] = bucket[rest] + c if rest in bucket else c
        return {p: Poly(t, self.rank) for p, t in out.items()}

    def substitute(self, v: int, value: Union["Poly", Scalar]) -> "Poly":
        value = self._coerce(value)
        total = Poly({}, self.rank)
        powers: Dict[int, Poly] = {}
        for p, coeff in self.coefficients_in(v).items():
            if p not in powers:
                powers[p] = value ** p
            total = total + coeff * powers[p]
        return total

    def evaluate(self, assignment: Mapping[int, Scalar]) -> Scalar:
        """Substitute every unknown; those missing from the assignment become 0."""
        result = self
        for v in self.variables():
            result = result.substitute(v, assignment.get(v, Scalar.zero(self.rank)))
        return result.constant()

    def term_count(self) -> int:
        return len(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in sorted(self._terms.items()):
            mono = "*".join(f"x{v}" if p == 1 else f"x{v}^{p}" for v, p in m)
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)

    __repr__ = __str__


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, residue: List[Poly]) -> None:
        self.used += 1
        if self.used > self.limit:
            raise SolverIncomplete(
                f"Branch budget of {self.limit} exhausted",
                residue=[str(e) for e in residue[:10]],
            )


def _divide(poly: Poly, divisor: Scalar) -> Optional[Poly]:
    terms = {}
    for m, c in poly._terms.items():
        try:
            terms[m] = c.exact_div(divisor)
        except (ValueError, ZeroDivisionError):
            return None
    return Poly(terms, poly.rank)


def _linear_pick(equations: List[Poly]) -> Optional[Tuple[int, Poly]]:
    """First unknown occurring linearly with a constant coefficient that divides the rest."""
    for eq in equations:
        for v in eq.variables():
            if eq.degree_in(v) != 1:
                continue
            coeffs = eq.coefficients_in(v)
            lead = coeffs[1]
            if not lead.is_constant():
                continue
            rest = coeffs.get(0, Poly({}, eq.rank))
            value = _divide(-rest, lead.constant())
            if value is None:
                continue
            return v, value
    return None


def _univariate_roots(eq: Poly) -> Optional[List[Scalar]]:
    """Candidate roots of a one-unknown equation: 0 and the root of a linear cofactor."""
    (v,) = eq.variables()
    coeffs = {p: c.constant() for p, c in eq.coefficients_in(v).items()}
    zero = Scalar.zero(eq.rank)
    low = min(coeffs)
    shifted = {p - low: c for p, c in coeffs.items()}
    top = max(shifted)
    roots = [zero] if low > 0 else []
    if top == 0:
        return roots
    if top == 1:
        try:
            root = (-shifted.get(0, zero)).exact_div(shifted[1])
        except ValueError:
            return roots
        if root not in roots:
            roots.append(root)
        return roots
    if low > 0:
        return roots
    return None


def _pick_branch(equations: List[Poly]) -> Optional[Tuple[int, List[Scalar]]]:
    best = None
    for eq in equations:
        if len(eq.variables()) != 1:
            continue
        roots = _univariate_roots(eq)
        if roots is None:
            continue
        if best is None or len(roots) < len(best[1]):
            best = (eq.variables()[0], roots)
    return best


def _solutions(
    equations: List[Poly],
    admissible,
    budget: _Budget,
) -> Iterator[Dict[int, Scalar]]:
    equations = [e for e in equations if e]
    budget.spend(equations)
    if any(e.is_constant() for e in equations):
        return
    if not equations:
        yield {}
        return

    picked = _linear_pick(equations)
    if picked is not None:
        v, value = picked
        LOG.debug("eliminate x%d = %s", v, value)
        rest = [e.substitute(v, value) for e in equations]
        for sol in _solutions(rest, admissible, budget):
            resolved = value.evaluate(sol)
            if admissible(v, resolved):
                yield {**sol, v: resolved}
        return

    branch = _pick_branch(equations)
    if branch is not None:
        v, roots = branch
        for root in roots:
            if not admissible(v, root):
                continue
            LOG.debug("branch x%d = %s", v, root)
            rest = [e.substitute(v, root) for e in equations]
            for sol in _solutions(rest, admissible, budget):
                yield {**sol, v: root}
        return

    single = next((e for e in equations if e.term_count() == 1), None)
    if single is not None:
        for v in single.variables():
            zero = Scalar.zero(single.rank)
            LOG.debug("branch x%d = 0 (single-term equation)", v)
            rest = [e.substitute(v, zero) for e in equations]
            for sol in _solutions(rest, admissible, budget):
                yield {**sol, v: zero}
        return

    raise SolverIncomplete(
        "No linear, univariate or single-term equation left to use",
        residue=[str(e) for e in equations[:10]],
    )


def _relation_equations(module: IdealModule) -> List[Poly]:
    system = module.system
    out: List[Poly] = []

    def collect(diff) -> None:
        for _, value in diff.items():
            poly = value if isinstance(value, Poly) else Poly.const(value)
            if poly and not any(poly == e for e in out):
                out.append(poly)

    for y in module.basis():
        v = module.basis_element(y)
        for s in system.generators:
            q = module.weights.q(s)
            tv = module.act_gen(s, v)
            collect(module.act_gen(s, tv) - v.scale(q) - tv.scale(q - 1))
        for s in system.generators:
            for t in range(s + 1, system.rank):
                m = system.matrix.order(s, t)
                if m == INFINITY:
                    continue
                left = tuple(s if i % 2 == 0 else t for i in range(m))
                right = tuple(t if i % 2 == 0 else s for i in range(m))
                collect(module.act_word(left, v) - module.act_word(right, v))
    return out


def solve_r_table(
    algebra: HeckeAlgebra,
    E: IdealE,
    J: Iterable[int],
    variant=Variant.MINUS_ONE,
    max_unknowns: int = 60,
    max_branches: int = 256,
) -> WGraphIdealDatum:
    """
    Find an r-table for (E, J) that passes validate_ideal_module.

    Unknowns not constrained by any equation are set to 0.

    Raises:
        BadReference: if J is not contained in Pos(E)
        SolverIncomplete: if the search stalls or exceeds its budget
        Inconsistent: if no admissible assignment exists
    """
    system = algebra.system
    weights = algebra.weights
    J = frozenset(J)
    variant = parse_variant(variant)
    K = pos(system, E)
    if not J <= K:
        raise BadReference(f"J = {system.format_set(J)} is not contained in Pos(E) = {system.format_set(K)}")

    unknowns = admissible_unknowns(system, E, J)
    LOG.info("Solving r-table: |E| = %d, %d unknowns, variant %s", len(E), len(unknowns), variant.value)
    if len(unknowns) > max_unknowns:
        raise SolverIncomplete(f"{len(unknowns)} unknowns exceed the limit of {max_unknowns}", residue=[])

    rank = weights.rank
    symbolic = build_datum(
        system, E, J,
        [(s, y, z, Poly.var(i, rank)) for i, (s, y, z) in enumerate(unknowns)],
        variant=variant,
    )
    module = IdealModule(algebra, symbolic)
    equations = _relation_equations(module)
    LOG.debug("%d relation equations", len(equations))

    def admissible(index: int, value: Scalar) -> bool:
        s = unknowns[index][0]
        if variant == Variant.MINUS_ONE:
            return in_qs_ideal(value, s, weights)
        return in_nonnegative(value)

    budget = _Budget(max_branches)
    last_failure: List[str] = []
    for solution in _solutions(equations, admissible, budget):
        rows = []
        for i, (s, y, z) in enumerate(unknowns):
            value = solution.get(i, weights.zero())
            rows.append((s, y, z, value))
        datum = build_datum(system, E, J, rows, variant=variant)
        report = validate_ideal_module(algebra, datum)
        if report.passed:
            LOG.info("r-table solved with %d nonzero entries", sum(1 for r in rows if r[3]))
            return datum
        last_failure = report.witnesses
        LOG.debug("candidate rejected: %s", report.witnesses[:1])
    raise Inconsistent(
        "No admissible r-table satisfies the module relations and the bar involution",
        residue=last_failure or [str(e) for e in equations[:10]],
    )
