"""Explicit vertex-set constructions on [m]^k.

Two recursive families are built bottom-up from their k=1 seeds by tiling
the m rank blocks of [m]^k (indexed by the last coordinate) with the k-1
dimensional set and its complement in alternating order:

* the alternating-parity family: a maximum independent set of size
  ceil(m^k / 2), seeded by the odd coordinates of the path;
* the low-degree witness family (odd m only): a set one larger than the
  independence number whose induced maximum degree stays at its k=1 value,
  2 when m = 3 and 1 when m >= 5.
"""

from __future__ import annotations

from .errors import SizeCapError
from .grid import DEFAULT_SIZE_CAP, PathPower, VertexSet, induced_max_degree

CONSTRUCTION_KINDS = ("vk", "vkc", "xk", "xkc")


def append_coordinate(s: VertexSet, a: int) -> VertexSet:
    """Embed s into [m]^(k+1) by appending coordinate a to every member.

    Under the last-coordinate-major rank order this is a plain offset: every
    member rank gains (a - 1) * m^k, i.e. the whole bitset shifts left.
    """
    if not 1 <= a <= s.m:
        raise ValueError(f"appended coordinate {a} outside 1..{s.m}")
    shift = (a - 1) * s.n_vertices
    return VertexSet(s.m, s.k + 1, bits=s.bits << shift)


def _check_cap(m: int, k: int, size_cap: int) -> None:
    if m**k > size_cap:
        raise SizeCapError(f"m^k = {m**k} exceeds the size cap {size_cap}")


def _alternating_extension(base: VertexSet) -> VertexSet:
    # Blocks over the new last coordinate a = 1..m: base for odd a,
    # complement for even a.  Works for either parity of m.
    m = base.m
    out_bits = 0
    comp_bits = base.complement().bits
    width = base.n_vertices
    for a in range(1, m + 1):
        block = base.bits if a % 2 == 1 else comp_bits
        out_bits |= block << ((a - 1) * width)
    return VertexSet(m, base.k + 1, bits=out_bits)


def alternating_independent_set(m: int, k: int, size_cap: int = DEFAULT_SIZE_CAP) -> VertexSet:
    """Maximum independent set of [m]^k of size ceil(m^k / 2).

    Seed: odd coordinates of the path.  Each extension places the previous
    set in odd last-coordinate blocks and its complement in even ones.
    """
    if m < 2 or k < 1:
        raise ValueError(f"need m >= 2 and k >= 1, got m={m}, k={k}")
    _check_cap(m, k, size_cap)
    s = VertexSet(m, 1, ranks=[c - 1 for c in range(1, m + 1) if c % 2 == 1])
    for _ in range(k - 1):
        s = _alternating_extension(s)
    return s


def low_degree_witness_set(m: int, k: int, size_cap: int = DEFAULT_SIZE_CAP) -> VertexSet:
    """Witness set of size alpha + 1 with minimal induced degree; odd m only.

    Seed over the path: the even coordinates plus both endpoints.  The same
    alternating block extension preserves the induced maximum degree.
    """
    if m < 3 or m % 2 == 0:
        raise ValueError(f"witness sets are defined for odd m >= 3, got m = {m}")
    if k < 1:
        raise ValueError(f"need k >= 1, got k={k}")
    _check_cap(m, k, size_cap)
    seed = {c for c in range(2, m, 2)} | {1, m}
    s = VertexSet(m, 1, ranks=[c - 1 for c in seed])
    for _ in range(k - 1):
        s = _alternating_extension(s)
    return s


def alpha_formula(m: int, k: int) -> int:
    """Independence number of [m]^k: ceil(m^k / 2), exact integers."""
    if m < 2 or k < 1:
        raise ValueError(f"need m >= 2 and k >= 1, got m={m}, k={k}")
    return (m**k + 1) // 2


def is_independent(s: VertexSet, g: PathPower | None = None) -> bool:
    """True iff no two members are adjacent.  Empty sets are independent."""
    if len(s) == 0:
        return True
    return induced_max_degree(s, g) == 0


def build_construction(kind: str, m: int, k: int, size_cap: int = DEFAULT_SIZE_CAP) -> VertexSet:
    """Build one of the named set families.

    kind: "vk" alternating independent set, "vkc" its complement,
    "xk" low-degree witness set (odd m), "xkc" its complement.
    """
    if kind not in CONSTRUCTION_KINDS:
        raise ValueError(f"unknown construction kind {kind!r}")
    if kind.startswith("v"):
        s = alternating_independent_set(m, k, size_cap)
    else:
        s = low_degree_witness_set(m, k, size_cap)
    return s.complement() if kind.endswith("c") else s
