"""Closed-form invariant maps for nilpotent orbits.

Per-family case rules for the covering-fiber group Z(J), the orbit
partition P(J), type-A orbit dimensions, orbit fundamental groups
pi1(O) and A(O) from the partition shape, and the kernel-order
consistency report |Z(J)| * |A(O)| = |pi1(O)|.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    CLASSICAL_FAMILIES,
    InputError,
    LieType,
    Partition,
    SubsetJ,
    UnsupportedFamilyError,
    check_subset_range,
    conjugate_heights,
    gcd_of_set,
)


@dataclass(frozen=True)
class FiniteGroupDescriptor:
    """Order plus a structure tag for the small groups that occur.

    Kinds: trivial, cyclic (with its order), elementary_abelian_2 (with
    the exponent k, order 2^k), central_extension_2 (a central extension
    by Z/2 of (Z/2)^k, order 2^(k+1); the extension class is not pinned
    down), klein_four (Z/2 x Z/2), symmetric_2 (the component group
    labelled S_2, order 2).
    """

    kind: str
    parameter: int | None = None

    _ORDERS = {
        "trivial": lambda p: 1,
        "cyclic": lambda p: p,
        "elementary_abelian_2": lambda p: 2**p,
        "central_extension_2": lambda p: 2 ** (p + 1),
        "klein_four": lambda p: 4,
        "symmetric_2": lambda p: 2,
    }

    def __post_init__(self) -> None:
        if self.kind not in self._ORDERS:
            raise InputError("unknown group kind %r" % (self.kind,))
        if self.kind in ("cyclic", "elementary_abelian_2", "central_extension_2"):
            if self.parameter is None:
                raise InputError("kind %s needs a parameter" % self.kind)
            if self.kind == "cyclic" and self.parameter < 2:
                raise InputError("cyclic parameter must be >= 2; use trivial() for order 1")
            if self.kind != "cyclic" and self.parameter < 0:
                raise InputError("exponent must be >= 0")
            if self.kind == "elementary_abelian_2" and self.parameter == 0:
                raise InputError("elementary_abelian_2(0) is trivial; use trivial()")
        elif self.parameter is not None:
            raise InputError("kind %s takes no parameter" % self.kind)

    @property
    def order(self) -> int:
        return self._ORDERS[self.kind](self.parameter)

    @property
    def label(self) -> str:
        if self.parameter is None:
            return self.kind
        return "%s(%d)" % (self.kind, self.parameter)

    @property
    def math_name(self) -> str:
        if self.kind == "trivial":
            return "1"
        if self.kind == "cyclic":
            return "Z/%dZ" % self.parameter
        if self.kind == "elementary_abelian_2":
            return "Z/2Z" if self.parameter == 1 else "(Z/2Z)^%d" % self.parameter
        if self.kind == "central_extension_2":
            if self.parameter == 0:
                return "Z/2Z (central extension type)"
            return "central extension of (Z/2Z)^%d by Z/2Z" % self.parameter
        if self.kind == "klein_four":
            return "Z/2Z x Z/2Z"
        return "S_2"

    @classmethod
    def trivial(cls) -> "FiniteGroupDescriptor":
        return cls("trivial")

    @classmethod
    def cyclic(cls, c: int) -> "FiniteGroupDescriptor":
        if c < 1:
            raise InputError("cyclic order must be >= 1, got %d" % c)
        if c == 1:
            return cls("trivial")
        return cls("cyclic", c)

    @classmethod
    def elementary_abelian_2(cls, k: int) -> "FiniteGroupDescriptor":
        if k < 0:
            raise InputError("exponent must be >= 0, got %d" % k)
        if k == 0:
            return cls("trivial")
        return cls("elementary_abelian_2", k)

    @classmethod
    def central_extension_2(cls, k: int) -> "FiniteGroupDescriptor":
        return cls("central_extension_2", k)

    @classmethod
    def klein_four(cls) -> "FiniteGroupDescriptor":
        return cls("klein_four")

    @classmethod
    def symmetric_2(cls) -> "FiniteGroupDescriptor":
        return cls("symmetric_2")

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class OrbitPartitionResult:
    """Orbit partition plus the type-D ambiguity flags.

    A very even partition in family D labels two distinct orbits; this
    result never picks one, it only flags the ambiguity.
    """

    partition: Partition
    very_even: bool
    orbit_label_ambiguous: bool


@dataclass(frozen=True)
class KernelReport:
    zj_order: int
    pi1_order: int
    a_order: int
    holds: bool


def center_fiber(t: LieType, j: SubsetJ) -> FiniteGroupDescriptor:
    """Covering-fiber group over the torus orbit indexed by J.

    Empty J is admitted in every family and evaluates each case rule
    vacuously (so e.g. "all j even" holds and type A reduces to
    gcd({n+1}) = n+1).  E8, F4 and G2 have trivial center, hence a
    trivial fiber for every J.
    """
    check_subset_range(t, j)
    fam, n = t.family, t.rank
    elems = j.elements
    if fam == "A":
        return FiniteGroupDescriptor.cyclic(gcd_of_set(elems, n + 1))
    if fam == "B":
        if all(v % 2 == 0 for v in elems):
            return FiniteGroupDescriptor.cyclic(2)
        return FiniteGroupDescriptor.trivial()
    if fam == "C":
        if n not in j:
            return FiniteGroupDescriptor.cyclic(2)
        return FiniteGroupDescriptor.trivial()
    if fam == "D":
        top = n in j
        second = (n - 1) in j
        if not top and not second:
            if all(v % 2 == 0 for v in elems):
                # full center of the spin group: Z/2 x Z/2 for n even, Z/4 for n odd
                if n % 2 == 0:
                    return FiniteGroupDescriptor.klein_four()
                return FiniteGroupDescriptor.cyclic(4)
            return FiniteGroupDescriptor.cyclic(2)
        if (
            top != second
            and all(v % 2 == 0 for v in elems if v < n - 1)
            and n % 2 == 0
            and n >= 4
        ):
            return FiniteGroupDescriptor.cyclic(2)
        return FiniteGroupDescriptor.trivial()
    if fam == "E6":
        if not set(elems) & {1, 3, 5, 6}:
            return FiniteGroupDescriptor.cyclic(3)
        return FiniteGroupDescriptor.trivial()
    if fam == "E7":
        if not set(elems) & {2, 5, 7}:
            return FiniteGroupDescriptor.cyclic(2)
        return FiniteGroupDescriptor.trivial()
    # E8, F4, G2: the simply connected group is already adjoint
    return FiniteGroupDescriptor.trivial()


def _gaps(elements: tuple[int, ...]) -> list[int]:
    """Successive differences d_i - d_{i-1} with d_0 = 0, largest gap first."""
    out = []
    prev = 0
    for v in elements:
        out.append(v - prev)
        prev = v
    out.reverse()
    return out


def _doubled(values: list[int]) -> list[int]:
    out = []
    for v in values:
        out.extend((v, v))
    return out


def orbit_partition(t: LieType, j: SubsetJ) -> OrbitPartitionResult:
    """Partition of the adjoint orbit containing the torus orbit of J.

    Type A lays the gaps between consecutive elements of J (and the ends
    0 and n+1) out as parts.  Types B, C and D double each gap and add a
    family-specific closing part; D splits into three cases according to
    how J meets {n-1, n}.  Parts are normalized on construction; a zero
    leading part (type C with n in J) is dropped.
    """
    if not t.is_classical:
        raise UnsupportedFamilyError(
            "no partition classification for family %s; use the orbit tables" % t.family
        )
    check_subset_range(t, j)
    fam, n = t.family, t.rank
    elems = j.elements
    last = elems[-1] if elems else 0
    if fam == "A":
        raw = [n + 1 - last] + _gaps(elems)
    elif fam == "B":
        raw = [2 * (n - last) + 1] + _doubled(_gaps(elems))
    elif fam == "C":
        raw = [2 * (n - last)] + _doubled(_gaps(elems))
    else:
        top = n in j
        second = (n - 1) in j
        if not top and not second:
            raw = [2 * (n - last) - 1] + _doubled(_gaps(elems)) + [1]
        elif top and second:
            raw = _doubled(_gaps(elems))
        else:
            # exactly one of n-1, n present: it is the largest element and
            # gets replaced by n itself in the gap sequence
            raw = _doubled(_gaps(elems[:-1] + (n,)))
    partition = Partition(tuple(v for v in raw if v != 0))
    very_even = partition.very_even
    return OrbitPartitionResult(
        partition=partition,
        very_even=very_even,
        orbit_label_ambiguous=(fam == "D" and very_even),
    )


def orbit_dimension_type_a(n: int, p: Partition) -> int:
    """dim O for a partition of n+1 in type A: (n+1)^2 minus the height squares."""
    if p.total != n + 1:
        raise InputError(
            "partition %s sums to %d, expected n+1 = %d" % (p, p.total, n + 1)
        )
    return (n + 1) ** 2 - sum(h * h for h in conjugate_heights(p))


def _check_orbit_partition(t: LieType, p: Partition) -> None:
    fam, n = t.family, t.rank
    expected_total = t.matrix_dimension
    if p.total != expected_total:
        raise InputError(
            "partition %s sums to %d, expected %d for %s" % (p, p.total, expected_total, t)
        )
    if fam == "B" or fam == "D":
        algebra = "so_%d" % expected_total
        for v in set(p.parts):
            if v % 2 == 0 and p.parts.count(v) % 2:
                raise InputError(
                    "even part %d has odd multiplicity %d; %s orbit partitions need "
                    "even parts with even multiplicity" % (v, p.parts.count(v), algebra)
                )
    elif fam == "C":
        for v in set(p.parts):
            if v % 2 and p.parts.count(v) % 2:
                raise InputError(
                    "odd part %d has odd multiplicity %d; sp_%d orbit partitions need "
                    "odd parts with even multiplicity" % (v, p.parts.count(v), expected_total)
                )


def fundamental_groups(
    t: LieType, p: Partition
) -> tuple[FiniteGroupDescriptor, FiniteGroupDescriptor]:
    """(pi1(O), A(O)) for the orbit labelled by ``p`` in a classical type.

    Writing a for the number of distinct odd parts, b for the number of
    distinct even parts and c for the gcd of the parts:

      sl:        pi1 = Z/c,                         A = 1
      so odd:    pi1 = 2.(Z/2)^(a-1) if rather odd
                 else (Z/2)^(a-1),                  A = (Z/2)^(a-1)
      sp:        pi1 = (Z/2)^b,                     A = (Z/2)^b if every even
                                                    part has even multiplicity,
                                                    else (Z/2)^(b-1)
      so even:   as so odd with exponent max(0, a-1); A drops to
                 max(0, a-2) unless every odd part has even multiplicity
    """
    if not t.is_classical:
        raise UnsupportedFamilyError(
            "fundamental groups by partition exist only for classical families, not %s"
            % t.family
        )
    _check_orbit_partition(t, p)
    fam = t.family
    odd_values = {v for v in p.parts if v % 2}
    even_values = {v for v in p.parts if v % 2 == 0}
    a = len(odd_values)
    b = len(even_values)
    if fam == "A":
        return (
            FiniteGroupDescriptor.cyclic(p.gcd()),
            FiniteGroupDescriptor.trivial(),
        )
    if fam == "B":
        if p.rather_odd:
            pi1 = FiniteGroupDescriptor.central_extension_2(a - 1)
        else:
            pi1 = FiniteGroupDescriptor.elementary_abelian_2(a - 1)
        return pi1, FiniteGroupDescriptor.elementary_abelian_2(a - 1)
    if fam == "C":
        even_ok = all(p.parts.count(v) % 2 == 0 for v in even_values)
        return (
            FiniteGroupDescriptor.elementary_abelian_2(b),
            FiniteGroupDescriptor.elementary_abelian_2(b if even_ok else b - 1),
        )
    k = max(0, a - 1)
    if p.rather_odd:
        pi1 = FiniteGroupDescriptor.central_extension_2(k)
    else:
        pi1 = FiniteGroupDescriptor.elementary_abelian_2(k)
    odd_ok = all(p.parts.count(v) % 2 == 0 for v in odd_values)
    a_group = FiniteGroupDescriptor.elementary_abelian_2(k if odd_ok else max(0, a - 2))
    return pi1, a_group


def kernel_check(t: LieType, j: SubsetJ) -> KernelReport:
    """Check |Z(J)| * |A(O)| = |pi1(O)| on the orbit attached to J.

    Orders only: the structure of a nonabelian pi1 candidate is not pinned
    down, so the comparison never inspects kinds.
    """
    if not t.is_classical:
        raise UnsupportedFamilyError(
            "kernel check by subset exists only for classical families; "
            "the orbit tables carry the analogous check for %s" % t.family
        )
    zj = center_fiber(t, j).order
    p = orbit_partition(t, j).partition
    pi1, a_group = fundamental_groups(t, p)
    return KernelReport(
        zj_order=zj,
        pi1_order=pi1.order,
        a_order=a_group.order,
        holds=(zj * a_group.order == pi1.order),
    )
