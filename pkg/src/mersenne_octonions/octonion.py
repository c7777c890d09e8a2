"""The eight-dimensional octonion algebra over an exact scalar ring.

The basis product e_i * e_j is stored as data (a sign array and an
index array) rather than as 64 hand-written branches.  A Cayley-Dickson
doubling of the quaternions serves as an independent multiplication
oracle whose only purpose is to catch transcription errors in that
data; the doubling convention is

    (p1, q1)(p2, q2) = (p1 p2 - conj(q2) q1,  q2 p1 + q1 conj(p2))

over the basis split {e0..e3 | e4..e7}, which reproduces the stored
table on all 64 basis pairs.

Scalars may be int, Fraction, or QuadElem; any ring with exact +, -, *
works, since octonion multiplication is the bilinear extension of the
basis table.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass

# Basis products e_i * e_j as (sign, index) meaning sign * e_index.
_TABLE = (
    ((+1, 0), (+1, 1), (+1, 2), (+1, 3), (+1, 4), (+1, 5), (+1, 6), (+1, 7)),
    ((+1, 1), (-1, 0), (+1, 3), (-1, 2), (+1, 5), (-1, 4), (-1, 7), (+1, 6)),
    ((+1, 2), (-1, 3), (-1, 0), (+1, 1), (+1, 6), (+1, 7), (-1, 4), (-1, 5)),
    ((+1, 3), (+1, 2), (-1, 1), (-1, 0), (+1, 7), (-1, 6), (+1, 5), (-1, 4)),
    ((+1, 4), (-1, 5), (-1, 6), (-1, 7), (-1, 0), (+1, 1), (+1, 2), (+1, 3)),
    ((+1, 5), (+1, 4), (-1, 7), (+1, 6), (-1, 1), (-1, 0), (-1, 3), (+1, 2)),
    ((+1, 6), (+1, 7), (+1, 4), (-1, 5), (-1, 2), (+1, 3), (-1, 0), (-1, 1)),
    ((+1, 7), (-1, 6), (+1, 5), (+1, 4), (-1, 3), (-1, 2), (+1, 1), (-1, 0)),
)

SIGN = tuple(tuple(s for s, _ in row) for row in _TABLE)
INDEX = tuple(tuple(t for _, t in row) for row in _TABLE)

# Active table indirection exists solely for the mutation test hook.
_active_table = [(SIGN, INDEX)]

# Caches whose contents depend on the active table register a clearer here
# so the mutation hook can invalidate them when the table is swapped.
_table_cache_clearers: list = []


def register_table_cache(clear) -> None:
    """Register a zero-argument cache invalidator tied to the basis table."""
    _table_cache_clearers.append(clear)


def _clear_table_caches() -> None:
    for clear in _table_cache_clearers:
        clear()


@contextmanager
def corrupted_basis_table(i: int = 1, j: int = 2):
    """Test hook: temporarily flip the sign of one basis product.

    Used to demonstrate that the verifier actually detects a wrong
    multiplication table.  Never nest with concurrent verification.
    """
    sign = [list(row) for row in SIGN]
    sign[i][j] = -sign[i][j]
    _active_table.append((tuple(tuple(r) for r in sign), INDEX))
    _clear_table_caches()
    try:
        yield
    finally:
        _active_table.pop()
        _clear_table_caches()


@dataclass(frozen=True)
class Octonion:
    """Immutable octonion with 8 exact scalar coordinates e0..e7."""

    coords: tuple

    def __post_init__(self):
        if len(self.coords) != 8:
            raise ValueError("an octonion has exactly 8 coordinates")
        object.__setattr__(self, "coords", tuple(self.coords))

    @classmethod
    def basis(cls, r: int, scale=1) -> "Octonion":
        c = [0] * 8
        c[r] = scale
        return cls(tuple(c))

    @classmethod
    def zero(cls) -> "Octonion":
        return cls((0,) * 8)

    def __add__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return Octonion(tuple(-x for x in self.coords))

    def __mul__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        sign, index = _active_table[-1]
        a, b = self.coords, other.coords
        acc = [None] * 8
        for i in range(8):
            ai = a[i]
            si, ti = sign[i], index[i]
            for j in range(8):
                p = ai * b[j]
                if si[j] < 0:
                    p = -p
                t = ti[j]
                acc[t] = p if acc[t] is None else acc[t] + p
        return Octonion(tuple(acc))

    def scale(self, s) -> "Octonion":
        """Multiply every coordinate by the scalar s."""
        return Octonion(tuple(x * s for x in self.coords))

    def conj(self) -> "Octonion":
        """Negate the seven imaginary coordinates."""
        c = self.coords
        return Octonion((c[0],) + tuple(-x for x in c[1:]))

    def norm_sq(self):
        """Squared norm: the sum of squared coordinates.

        The square root is never taken, since it leaves the scalar
        ring; all norm statements are checked at this level.
        """
        return sum(x * x for x in self.coords)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    def map_coords(self, f) -> "Octonion":
        return Octonion(tuple(f(x) for x in self.coords))

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self.coords) + ")"


def associator(a: Octonion, b: Octonion, c: Octonion) -> Octonion:
    """(ab)c - a(bc); nonzero in general, zero when two arguments
    coincide (alternativity)."""
    return (a * b) * c - a * (b * c)


def _qmul(p, q):
    # Hamilton quaternion product on 4-tuples (1, i, j, k).
    p0, p1, p2, p3 = p
    q0, q1, q2, q3 = q
    return (
        p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3,
        p0 * q1 + p1 * q0 + p2 * q3 - p3 * q2,
        p0 * q2 - p1 * q3 + p2 * q0 + p3 * q1,
        p0 * q3 + p1 * q2 - p2 * q1 + p3 * q0,
    )


def _qconj(p):
    return (p[0], -p[1], -p[2], -p[3])


def _qsub(p, q):
    return tuple(x - y for x, y in zip(p, q))


def _qadd(p, q):
    return tuple(x + y for x, y in zip(p, q))


def cd_mul(a: Octonion, b: Octonion) -> Octonion:
    """Independent multiplication oracle via Cayley-Dickson doubling.

    Shares no data with the stored basis table; see the module
    docstring for the doubling convention.
    """
    p1, q1 = a.coords[:4], a.coords[4:]
    p2, q2 = b.coords[:4], b.coords[4:]
    lo = _qsub(_qmul(p1, p2), _qmul(_qconj(q2), q1))
    hi = _qadd(_qmul(q2, p1), _qmul(q1, _qconj(p2)))
    return Octonion(lo + hi)
