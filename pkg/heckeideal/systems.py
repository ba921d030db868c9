"""
Named finite Coxeter types usable without a config file.

Accepted names: A<n>, B<n>, D<n>, F4, H3, H4, I2(<m>), and products joined by
'x' such as A1xA1 or A1xA1xA1.
"""
import re
from typing import List

from .errors import ConfigError

_TYPE_RE = re.compile(r"^(A|B|C|D|F|H)(\d+)$|^I2\((\d+)\)$")


def _empty(n: int) -> List[List[int]]:
    return [[1 if i == j else 2 for j in range(n)] for i in range(n)]


def _chain(n: int, last: int = 3) -> List[List[int]]:
    m = _empty(n)
    for i in range(n - 1):
        order = last if i == n - 2 else 3
        m[i][i + 1] = m[i + 1][i] = order
    return m


def _irreducible(token: str) -> List[List[int]]:
    match = _TYPE_RE.match(token)
    if not match:
        raise ConfigError(
            f"Unknown Coxeter type '{token}'. "
            "Valid options: A<n>, B<n>, D<n>, F4, H3, H4, I2(<m>) and products like A1xA1"
        )
    family, rank, dihedral = match.group(1), match.group(2), match.group(3)
    if dihedral is not None:
        m = int(dihedral)
        if m < 2:
            raise ConfigError(f"I2(m) needs m >= 2, got {m}")
        return [[1, m], [m, 1]]
    n = int(rank)
    if n < 1:
        raise ConfigError(f"Rank must be positive in '{token}'")
    if family == "A":
        return _chain(n)
    if family in ("B", "C"):
        if n < 2:
            raise ConfigError(f"{family}{n} needs rank >= 2")
        return _chain(n, last=4)
    if family == "D":
        if n < 4:
            raise ConfigError(f"D{n} needs rank >= 4")
        m = _chain(n - 1)
        for row in m:
            row.append(2)
        m.append([2] * (n - 1) + [1])
        m[n - 3][n - 1] = m[n - 1][n - 3] = 3
        return m
    if family == "F":
        if n != 4:
            raise ConfigError("Only F4 exists in family F")
        m = _chain(4)
        m[1][2] = m[2][1] = 4
        return m
    if family == "H":
        if n not in (3, 4):
            raise ConfigError(f"H{n} is not a finite type; use H3 or H4")
        m = _chain(n)
        m[0][1] = m[1][0] = 5
        return m
    raise ConfigError(f"Unknown Coxeter type '{token}'")


def named_matrix(name: str) -> List[List[int]]:
    """Coxeter matrix for a named type; products are block-diagonal."""
    blocks = [_irreducible(tok.strip()) for tok in name.split("x") if tok.strip()]
    if not blocks:
        raise ConfigError(f"Empty Coxeter type name '{name}'")
    n = sum(len(b) for b in blocks)
    out = _empty(n)
    offset = 0
    for block in blocks:
        size = len(block)
        for i in range(size):
            for j in range(size):
                out[offset + i][offset + j] = block[i][j]
        offset += size
    return out


def is_named_type(name: str) -> bool:
    try:
        named_matrix(name)
    except ConfigError:
        return False
    return True
