"""Boolean-lattice operators built from zeons (commuting square-zero generators).

Basis elements e_I are indexed by subsets of {1, ..., n}, encoded as
bitmasks: bit i-1 set means i is in I. The basis is ordered by bitmask
value. Operators act on column vectors, so composition A @ B applies B
first.
"""
from __future__ import annotations

import json

ANNIHILATED = None  # result of a zeon product with a repeated generator


def layer(mask: int) -> int:
    """Cardinality of the subset encoded by the bitmask."""
    return bin(mask).count("1")


def zeon_mul(I: int, J: int) -> int | None:
    """Product e_I e_J: the union when disjoint, ANNIHILATED otherwise."""
    if I & J:
        return ANNIHILATED
    return I | J


class ZeonMatrix:
    """Sparse exact-integer matrix of size 2^n x 2^n over the subset basis.

    Entries are stored as rows[i][j]; zero entries are never stored.
    Instances are treated as immutable after construction.
    """

    def __init__(self, n: int, entries: dict[tuple[int, int], int] | None = None):
        if n < 0:
            raise ValueError(f"n must be nonnegative, got {n}")
        self.n = n
        self.size = 1 << n
        self.rows: dict[int, dict[int, int]] = {}
        if entries:
            for (i, j), v in entries.items():
                self._set(i, j, v)

    def _set(self, i: int, j: int, v: int) -> None:
        if not (0 <= i < self.size and 0 <= j < self.size):
            raise IndexError(f"index ({i}, {j}) outside {self.size}x{self.size}")
        if v == 0:
            return
        self.rows.setdefault(i, {})[j] = v

    def get(self, i: int, j: int) -> int:
        return self.rows.get(i, {}).get(j, 0)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def items(self):
        for i in sorted(self.rows):
            row = self.rows[i]
            for j in sorted(row):
                yield i, j, row[j]

    @classmethod
    def identity(cls, n: int) -> "ZeonMatrix":
        M = cls(n)
        for i in range(1 << n):
            M._set(i, i, 1)
        return M

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZeonMatrix):
            return NotImplemented
        return self.n == other.n and self._clean() == other._clean()

    def _clean(self) -> dict[int, dict[int, int]]:
        return {i: r for i, r in self.rows.items() if r}

    def __hash__(self):
        return hash((self.n, tuple(self.items())))

    def __add__(self, other: "ZeonMatrix") -> "ZeonMatrix":
        self._check_compat(other)
        out = ZeonMatrix(self.n)
        for i, j, v in self.items():
            out._set(i, j, v)
        for i, j, v in other.items():
            w = out.get(i, j) + v
            row = out.rows.setdefault(i, {})
            if w == 0:
                row.pop(j, None)
            else:
                row[j] = w
        return out

    def __sub__(self, other: "ZeonMatrix") -> "ZeonMatrix":
        return self + (-other)

    def __neg__(self) -> "ZeonMatrix":
        out = ZeonMatrix(self.n)
        for i, j, v in self.items():
            out._set(i, j, -v)
        return out

    def __matmul__(self, other: "ZeonMatrix") -> "ZeonMatrix":
        self._check_compat(other)
        out = ZeonMatrix(self.n)
        for i, arow in self.rows.items():
            acc: dict[int, int] = {}
            for k, av in arow.items():
                brow = other.rows.get(k)
                if not brow:
                    continue
                for j, bv in brow.items():
                    acc[j] = acc.get(j, 0) + av * bv
            cleaned = {j: v for j, v in acc.items() if v != 0}
            if cleaned:
                out.rows[i] = cleaned
        return out

    def transpose(self) -> "ZeonMatrix":
        out = ZeonMatrix(self.n)
        for i, j, v in self.items():
            out._set(j, i, v)
        return out

    def is_zero(self) -> bool:
        return all(not r for r in self.rows.values())

    def is_diagonal(self) -> bool:
        return all(i == j for i, j, _ in self.items())

    def diagonal(self) -> list[int]:
        return [self.get(i, i) for i in range(self.size)]

    def _check_compat(self, other: "ZeonMatrix") -> None:
        if self.n != other.n:
            raise ValueError(f"size mismatch: n={self.n} vs n={other.n}")

    def to_coordinate_text(self, name: str = "") -> str:
        """Coordinate form: header with n, then 'row col value' per nonzero."""
        header = f"# zeon n={self.n}" + (f" op={name}" if name else "")
        lines = [header]
        lines.extend(f"{i} {j} {v}" for i, j, v in self.items())
        return "\n".join(lines) + "\n"

    def to_json_dict(self, name: str = "") -> dict:
        d = {
            "schema": 1,
            "n": self.n,
            "size": self.size,
            "entries": [[i, j, v] for i, j, v in self.items()],
        }
        if name:
            d["op"] = name
        if self.is_diagonal():
            d["diagonal"] = self.diagonal()
        return d

    def to_json(self, name: str = "") -> str:
        return json.dumps(self.to_json_dict(name), sort_keys=True)


def raise_op(n: int, i: int) -> ZeonMatrix:
    """Multiplication by e_i: e_I -> e_({i} u I) when i is not in I, else 0."""
    if not 1 <= i <= n:
        raise ValueError(f"generator index i={i} outside [1, {n}]")
    bit = 1 << (i - 1)
    M = ZeonMatrix(n)
    for I in range(1 << n):
        if not I & bit:
            M._set(I | bit, I, 1)
    return M


def lower_op(n: int, i: int) -> ZeonMatrix:
    """The adjoint of raise_op: e_I -> e_(I \\ {i}) when i is in I, else 0."""
    if not 1 <= i <= n:
        raise ValueError(f"generator index i={i} outside [1, {n}]")
    bit = 1 << (i - 1)
    M = ZeonMatrix(n)
    for I in range(1 << n):
        if I & bit:
            M._set(I & ~bit, I, 1)
    return M


def op_T(n: int) -> ZeonMatrix:
    """T = sum of the raising operators over i = 1..n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out = ZeonMatrix(n)
    for i in range(1, n + 1):
        out = out + raise_op(n, i)
    return out


def op_Tstar(n: int) -> ZeonMatrix:
    """T* = sum of the lowering operators; equals the transpose of T."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out = ZeonMatrix(n)
    for i in range(1, n + 1):
        out = out + lower_op(n, i)
    return out


def op_U(n: int) -> ZeonMatrix:
    """The commutator U = T* T - T T*; diagonal with entries n - 2*layer(I)."""
    T = op_T(n)
    Tstar = op_Tstar(n)
    return Tstar @ T - T @ Tstar
