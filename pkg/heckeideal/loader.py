"""
Reading systems, ideals, r-tables and W-graphs from YAML/JSON files.

Every file problem surfaces as ConfigError so the CLI can exit with code 2.
"""
import logging
from pathlib import Path
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple, Type, TypeVar, Union

import yaml
from pydantic import BaseModel, ValidationError

from .coxeter import DEFAULT_ROOT_CAP, CoxeterSystem, Element, build_system
from .errors import ConfigError
from .ideal_module import WGraphIdealDatum, build_datum
from .ideals import IdealE, ideal_closure
from .laurent import Scalar, WeightFunction, parse_scalar
from .schemas.config_files import IdealFile, RTableFile, SystemFile, WGraphFile
from .systems import is_named_type, named_matrix
from .wgraph import WGraphDatum

LOG = logging.getLogger("heckeideal.loader")

M = TypeVar("M", bound=BaseModel)


def load_document(path: Union[str, Path]) -> Any:
    """YAML or JSON file contents (JSON is read as YAML)."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"File not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            return yaml.safe_load(f)
    except yaml.YAMLError as exc:
        raise ConfigError(f"Cannot parse {path}: {exc}")


def _validate(model: Type[M], data: Any, source: str) -> M:
    if not isinstance(data, dict):
        raise ConfigError(f"{source}: expected a mapping at the top level")
    try:
        return model(**data)
    except ValidationError as exc:
        raise ConfigError(f"{source}: {exc}")


def parse_poly(value: Any, rank: int) -> Scalar:
    try:
        if isinstance(value, bool):
            raise ValueError(f"not a polynomial: {value}")
        if isinstance(value, int):
            return Scalar.constant(value, rank)
        if isinstance(value, list):
            return Scalar.from_json(value, rank)
        return parse_scalar(value, rank)
    except ValueError as exc:
        raise ConfigError(f"Bad polynomial {value!r}: {exc}")


# -- systems ----------------------------------------------------------


def system_from_spec(spec: SystemFile, root_cap: int = DEFAULT_ROOT_CAP, label: str = "W") -> Tuple[CoxeterSystem, WeightFunction]:
    if spec.type:
        matrix: List[List[Any]] = named_matrix(spec.type)
    elif spec.matrix:
        matrix = spec.matrix
    else:
        raise ConfigError("A system needs either 'type' or 'matrix'")
    system = build_system(matrix, cap=spec.cap or root_cap, names=spec.generators, name=spec.name or spec.type or label)
    orders = [[system.matrix.order(s, t) for t in system.generators] for s in system.generators]
    if spec.weights:
        missing = [n for n in system.names if n not in spec.weights]
        if missing:
            raise ConfigError(f"No weight for {', '.join(missing)}. Generators: {', '.join(system.names)}")
        weights = WeightFunction.from_units([spec.weights[n] for n in system.names])
    elif spec.generic_weights:
        weights = WeightFunction.generic(orders)
    else:
        weights = WeightFunction.equal(system.rank)
    weights.validate(orders)
    LOG.info("Built %s: rank %d, %d positive roots, weights %s",
             system.name, system.rank, system.n_pos, [list(weights.units(s)) for s in system.generators])
    return system, weights


def load_system(ref: str, root_cap: int = DEFAULT_ROOT_CAP) -> Tuple[CoxeterSystem, WeightFunction]:
    """A named type (A3, B3, I2(5), A1xA1) or a system file."""
    path = Path(ref)
    if not path.exists() and is_named_type(ref):
        return system_from_spec(SystemFile(type=ref, name=ref), root_cap)
    spec = _validate(SystemFile, load_document(path), str(path))
    return system_from_spec(spec, root_cap, label=path.stem)


# -- words, subsets and ideals ----------------------------------------


def parse_words(system: CoxeterSystem, words: Union[str, Iterable[Union[str, List[str]]]]) -> List[Element]:
    """Comma-separated words ("s1s2,s2") or a list of words."""
    if isinstance(words, str):
        words = [w for w in words.split(",") if w.strip()] or ["e"]
    try:
        return [system.parse(w) for w in words]
    except ValueError as exc:
        raise ConfigError(str(exc))


def parse_subset(system: CoxeterSystem, names: Union[None, str, Iterable[str]]) -> FrozenSet[int]:
    """Generator names; None, "" and "{}" give the empty set."""
    if names is None:
        return frozenset()
    if isinstance(names, str):
        names = [n.strip() for n in names.strip("{} ").split(",") if n.strip()]
    try:
        return system.subset(names)
    except ValueError as exc:
        raise ConfigError(str(exc))


def load_ideal(ref: str, system: CoxeterSystem) -> Tuple[IdealE, Optional[FrozenSet[int]]]:
    """
    An ideal from a file or from comma-separated words.

    Returns the ideal and the J named in the file, if any.
    """
    path = Path(ref)
    if path.is_file():
        spec = _validate(IdealFile, load_document(path), str(path))
        E = ideal_closure(system, parse_words(system, spec.generators))
        J = parse_subset(system, spec.J) if spec.J is not None else None
    else:
        E = ideal_closure(system, parse_words(system, ref))
        J = None
    LOG.debug("Ideal with %d elements from %s", len(E), ref)
    return E, J


# -- r-tables ---------------------------------------------------------


def load_rtable(
    path: Union[str, Path],
    system: CoxeterSystem,
    weights: WeightFunction,
    E: Optional[IdealE] = None,
    J: Optional[Iterable[int]] = None,
    variant: Optional[str] = None,
) -> WGraphIdealDatum:
    """
    Raises:
        ConfigError: on a malformed file or an entry outside E
    """
    data = load_document(path)
    if isinstance(data, list):
        data = {"entries": data}
    spec = _validate(RTableFile, data, str(path))
    if E is None:
        if not spec.E:
            raise ConfigError(f"{path}: no ideal given in the file or on the command line")
        E = ideal_closure(system, parse_words(system, spec.E))
    if J is None:
        J = parse_subset(system, spec.J)
    rows = []
    for entry in spec.entries:
        try:
            s = system.generator_index(entry.s)
        except ValueError as exc:
            raise ConfigError(str(exc))
        y, z = parse_words(system, [entry.y, entry.z])
        if y not in E or z not in E:
            raise ConfigError(f"{path}: entry ({entry.s}, {entry.y}, {entry.z}) lies outside E")
        rows.append((s, y, z, parse_poly(entry.poly, weights.rank)))
    try:
        return build_datum(system, E, J, rows, variant=variant or spec.variant)
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}")


def rtable_to_document(datum: WGraphIdealDatum, system: CoxeterSystem) -> Dict[str, Any]:
    """File form of a datum, readable by load_rtable."""
    gens = datum.E.generators or (datum.E.maximal(),)
    return {
        "variant": datum.variant.value,
        "E": [system.format(g) for g in gens],
        "J": [system.names[s] for s in sorted(datum.J)],
        "entries": [
            {"s": system.names[s], "y": system.format(y), "z": system.format(z), "poly": str(value)}
            for s, y, z, value in datum.entries()
        ],
    }


# -- W-graphs ---------------------------------------------------------


def load_wgraph(path: Union[str, Path], system: CoxeterSystem, weights: WeightFunction) -> WGraphDatum:
    spec = _validate(WGraphFile, load_document(path), str(path))
    vertices = set(spec.vertices)
    try:
        I = {v: parse_subset(system, spec.I.get(v, [])) for v in spec.vertices}
        mu = {
            (e.x, e.y, system.generator_index(e.s)): parse_poly(e.value, weights.rank)
            for e in spec.mu
        }
        zero_edges = {system.generator_index(s): dict(edges) for s, edges in spec.zero_edges.items()}
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}")
    unknown = sorted({v for (a, b, _) in mu for v in (a, b)} - vertices)
    if unknown:
        raise ConfigError(f"{path}: mu names unknown vertices {', '.join(unknown)}")
    return WGraphDatum(vertices=list(spec.vertices), I=I, mu=mu, zero_edges=zero_edges)
