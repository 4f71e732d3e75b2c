"""Bit-packed GF(2) quadratic and alternating bilinear form algebra.

Vectors are coordinate rows over GF(2) stored as machine integers, one bit
per coordinate.  A :class:`QuadraticSpace` carries the Gram matrix of an
alternating bilinear form ``f`` (symmetric with zero diagonal) together with
the values of a quadratic form ``Q`` on the basis vectors; ``Q`` extends to
the whole space through the polarization identity

    Q(u + w) = Q(u) + Q(w) + f(u, w).

Everything here is immutable and pure; values can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_DIM = 64
ENUM_DIM_LIMIT = 24


class DimensionError(ValueError):
    """A vector or matrix does not match the dimension it is used with."""


class SpaceTypeError(ValueError):
    """The space has no plus/minus type (odd rank after removing the
    isotropic radical, i.e. the form is defective)."""


class RadicalError(ValueError):
    """A claimed radical subspace is not inside the isotropic radical."""


def parity(x: int) -> int:
    return x.bit_count() & 1


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class F2Vector:
    """A GF(2) coordinate vector of length ``n``, packed into ``bits``."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if not 0 < self.n <= MAX_DIM:
            raise DimensionError(f"dimension {self.n} outside 1..{MAX_DIM}")
        if not 0 <= self.bits < (1 << self.n):
            raise DimensionError(f"bits 0x{self.bits:x} do not fit in {self.n} coordinates")

    @classmethod
    def zero(cls, n: int) -> "F2Vector":
        return cls(0, n)

    @classmethod
    def basis(cls, i: int, n: int) -> "F2Vector":
        if not 0 <= i < n:
            raise DimensionError(f"basis index {i} outside 0..{n - 1}")
        return cls(1 << i, n)

    @classmethod
    def from_coords(cls, coords: Iterable[int]) -> "F2Vector":
        bits = 0
        n = 0
        for c in coords:
            if c & 1:
                bits |= 1 << n
            n += 1
        return cls(bits, n)

    def coords(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.n))

    def support(self) -> tuple[int, ...]:
        return tuple(bits_of(self.bits))

    def __xor__(self, other: "F2Vector") -> "F2Vector":
        if self.n != other.n:
            raise DimensionError(f"cannot add vectors of length {self.n} and {other.n}")
        return F2Vector(self.bits ^ other.bits, self.n)

    __add__ = __xor__

    def __bool__(self) -> bool:
        return self.bits != 0


@dataclass(frozen=True)
class QuadraticSpace:
    """An ambient GF(2) space carrying an alternating form and a quadratic form.

    ``gram`` holds the Gram matrix of ``f`` as row bitmasks; ``qdiag`` is the
    bitmask of ``Q`` on the basis vectors.
    """

    dim: int
    gram: tuple[int, ...]
    qdiag: int

    def __post_init__(self) -> None:
        if not 0 < self.dim <= MAX_DIM:
            raise DimensionError(f"dimension {self.dim} outside 1..{MAX_DIM}")
        if len(self.gram) != self.dim:
            raise DimensionError("gram row count differs from dim")
        full = (1 << self.dim) - 1
        if not 0 <= self.qdiag <= full:
            raise DimensionError("qdiag does not fit the dimension")
        for i, row in enumerate(self.gram):
            if not 0 <= row <= full:
                raise DimensionError(f"gram row {i} does not fit the dimension")
            if (row >> i) & 1:
                raise DimensionError(f"gram diagonal entry {i} is nonzero (f must be alternating)")
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if ((self.gram[i] >> j) & 1) != ((self.gram[j] >> i) & 1):
                    raise DimensionError(f"gram is not symmetric at ({i}, {j})")

    def check_vector(self, v: F2Vector) -> None:
        if v.n != self.dim:
            raise DimensionError(f"vector length {v.n} differs from space dimension {self.dim}")

    def f_masks(self, a: int, b: int) -> int:
        """f on two packed vectors."""
        acc = 0
        m = a
        while m:
            low = m & -m
            acc ^= self.gram[low.bit_length() - 1] & b
            m ^= low
        return parity(acc)

    def q_mask(self, a: int) -> int:
        """Q on a packed vector."""
        acc = parity(self.qdiag & a)
        m = a
        while m:
            low = m & -m
            i = low.bit_length() - 1
            acc ^= parity(self.gram[i] & a & (low - 1))
            m ^= low
        return acc

    def gram_combine(self, a: int) -> int:
        """The row mask representing f(a, .) as a linear functional."""
        acc = 0
        m = a
        while m:
            low = m & -m
            acc ^= self.gram[low.bit_length() - 1]
            m ^= low
        return acc


@dataclass(frozen=True)
class Subspace:
    """A subspace given by a reduced (RREF) basis of packed row vectors."""

    basis: tuple[int, ...]
    ambient: QuadraticSpace

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_vectors(self) -> tuple[F2Vector, ...]:
        return tuple(F2Vector(b, self.ambient.dim) for b in self.basis)

    def reduce(self, mask: int) -> int:
        """Reduce a packed vector modulo the subspace (eliminate pivot bits)."""
        for row in self.basis:
            piv = row & -row
            if mask & piv:
                mask ^= row
        return mask

    def contains(self, v: F2Vector) -> bool:
        self.ambient.check_vector(v)
        return self.reduce(v.bits) == 0

    def vectors(self) -> Iterator[F2Vector]:
        """All 2^dim member vectors (small subspaces only)."""
        n = self.ambient.dim
        for combo in range(1 << len(self.basis)):
            acc = 0
            for i in bits_of(combo):
                acc ^= self.basis[i]
            yield F2Vector(acc, n)


def rref(rows: Sequence[int]) -> tuple[int, ...]:
    """Reduced row echelon form of packed GF(2) rows (zero rows dropped).

    Rows come out sorted by pivot position and each pivot bit occurs in its
    own row only, so the result is a canonical basis of the row span.
    """
    work: list[int] = []
    for row in rows:
        for basis_row in work:
            piv = basis_row & -basis_row
            if row & piv:
                row ^= basis_row
        if row:
            piv = row & -row
            for k, basis_row in enumerate(work):
                if basis_row & piv:
                    work[k] ^= row
            work.append(row)
    work.sort(key=lambda r: r & -r)
    return tuple(work)


def kernel_basis(equations: Sequence[int], n: int) -> tuple[int, ...]:
    """Basis (RREF) of {x : parity(eq & x) = 0 for all eq}."""
    reduced = rref(equations)
    pivots = [(row & -row).bit_length() - 1 for row in reduced]
    pivot_set = set(pivots)
    free_cols = [c for c in range(n) if c not in pivot_set]
    basis = []
    for free in free_cols:
        vec = 1 << free
        for row, piv in zip(reduced, pivots):
            if (row >> free) & 1:
                vec |= 1 << piv
        basis.append(vec)
    return rref(basis)


def eval_f(space: QuadraticSpace, u: F2Vector, w: F2Vector) -> int:
    """The alternating form f(u, w)."""
    space.check_vector(u)
    space.check_vector(w)
    return space.f_masks(u.bits, w.bits)


def eval_q(space: QuadraticSpace, u: F2Vector) -> int:
    """The quadratic form Q(u)."""
    space.check_vector(u)
    return space.q_mask(u.bits)


def radical_of_f(space: QuadraticSpace) -> Subspace:
    """The radical of f: all x with f(x, e_i) = 0 for every basis vector."""
    return Subspace(kernel_basis(space.gram, space.dim), space)


def isotropic_radical(space: QuadraticSpace) -> Subspace:
    """Vectors orthogonal to everything under f and with Q = 0.

    Q restricted to the f-radical is linear, so this is the kernel of a
    linear functional there: codimension 0 or 1 inside the f-radical.
    """
    rad = radical_of_f(space)
    values = [(b, space.q_mask(b)) for b in rad.basis]
    pivot = next((b for b, q in values if q), None)
    if pivot is None:
        return rad
    basis = [b ^ pivot if q else b for b, q in values if b != pivot]
    return Subspace(rref(basis), space)


def quotient(
    space: QuadraticSpace, rad: Subspace, vectors: Sequence[F2Vector]
) -> tuple[QuadraticSpace, list[F2Vector]]:
    """Quotient the space by a subspace of its isotropic radical.

    Returns the quotient space (on the coordinates complementary to the
    radical's pivots) and the images of the given vectors under the
    corresponding linear section.  Vectors differing by a radical element
    get the same image.
    """
    if rad.ambient is not space and rad.ambient != space:
        raise RadicalError("radical subspace belongs to a different space")
    for b in rad.basis:
        if space.q_mask(b) or space.gram_combine(b):
            raise RadicalError("subspace is not contained in the isotropic radical")
    if not rad.basis:
        return space, list(vectors)
    pivots = [(row & -row).bit_length() - 1 for row in rad.basis]
    pivot_set = set(pivots)
    keep = [j for j in range(space.dim) if j not in pivot_set]
    if not keep:
        raise RadicalError("quotient would be zero-dimensional")
    m = len(keep)
    pos = {j: a for a, j in enumerate(keep)}

    def compress(mask: int) -> int:
        out = 0
        for j in bits_of(mask):
            out |= 1 << pos[j]
        return out

    gram_rows = tuple(compress(space.gram[j]) for j in keep)
    qdiag = 0
    for a, j in enumerate(keep):
        if (space.qdiag >> j) & 1:
            qdiag |= 1 << a
    qspace = QuadraticSpace(m, gram_rows, qdiag)
    images = []
    for v in vectors:
        space.check_vector(v)
        images.append(F2Vector(compress(rad.reduce(v.bits)), m))
    return qspace, images


def symplectic_basis(space: QuadraticSpace) -> list[tuple[int, int]]:
    """Greedy symplectic pairing (a_1, b_1), ..., (a_m, b_m) for a space with
    trivial f-radical.  Deterministic given the basis order."""
    remaining = list(rref([1 << i for i in range(space.dim)]))
    pairs: list[tuple[int, int]] = []
    while remaining:
        a = remaining[0]
        b = next((x for x in remaining[1:] if space.f_masks(a, x)), None)
        if b is None:
            raise SpaceTypeError("form is degenerate: no symplectic partner found")
        pairs.append((a, b))
        projected = []
        for x in remaining:
            if x in (a, b):
                continue
            y = x
            if space.f_masks(x, b):
                y ^= a
            if space.f_masks(x, a):
                y ^= b
            projected.append(y)
        remaining = list(rref(projected))
    return pairs


def arf_invariant(space: QuadraticSpace) -> int:
    """Arf invariant of a space with trivial f-radical: sum of Q(a_i)Q(b_i)
    over a symplectic basis."""
    acc = 0
    for a, b in symplectic_basis(space):
        acc ^= space.q_mask(a) & space.q_mask(b)
    return acc


@dataclass(frozen=True)
class SpaceType:
    """Plus/minus classification, together with the isotropic-radical
    dimension for degenerate spaces (0 when nondegenerate)."""

    sign: str
    radical_dim: int = 0

    def __post_init__(self) -> None:
        if self.sign not in ("plus", "minus"):
            raise ValueError(f"unknown sign {self.sign!r}")

    @property
    def is_degenerate(self) -> bool:
        return self.radical_dim > 0


PLUS = SpaceType("plus")
MINUS = SpaceType("minus")


def classify_type(space: QuadraticSpace) -> SpaceType:
    """Classify the space as plus or minus type (minus iff Arf = 1).

    A space with nontrivial isotropic radical gets the type of its quotient
    and the radical dimension.  If the f-radical exceeds the isotropic
    radical the quotient form is defective (odd rank) and has no type:
    :class:`SpaceTypeError` is raised.
    """
    rad_f = radical_of_f(space)
    iso = isotropic_radical(space)
    if iso.dim < rad_f.dim:
        raise SpaceTypeError(
            "no plus/minus type: the f-radical carries an anisotropic vector "
            f"(f-radical dim {rad_f.dim}, isotropic radical dim {iso.dim})"
        )
    if iso.dim == 0:
        return SpaceType("minus" if arf_invariant(space) else "plus")
    qspace, _ = quotient(space, iso, [])
    return SpaceType("minus" if arf_invariant(qspace) else "plus", radical_dim=iso.dim)


def anisotropic_count(space: QuadraticSpace) -> int:
    """Number of nonzero vectors with Q = 1, by full Gray-code enumeration."""
    if space.dim > ENUM_DIM_LIMIT:
        raise DimensionError(
            f"dimension {space.dim} exceeds the enumeration bound {ENUM_DIM_LIMIT}"
        )
    count = 0
    q = 0
    fvals = 0  # bit i holds f(current, e_i)
    gram = space.gram
    qdiag = space.qdiag
    for k in range(1, 1 << space.dim):
        j = (k & -k).bit_length() - 1
        q ^= ((qdiag >> j) & 1) ^ ((fvals >> j) & 1)
        fvals ^= gram[j]
        count += q
    return count
