"""Structure-constant presentations of algebras, coalgebras and Hopf
algebras, with exact axiom validators.

A structure is a bundle of LinMaps over one named base space: an algebra
is (mul: X(x)X -> X, unit: k -> X), a coalgebra is (comul: X -> X(x)X,
counit: X -> k).  Validators return a VerificationReport whose failures
carry the first offending basis tuple; they never raise on bad axioms.
Downstream modules assume validated inputs (validation is eager at
construction time in the instance builders).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AntipodeNotBijective, ShapeError
from .linmaps import LinMap, SpaceLabel, flip_map, kron_all, map_kron, try_inverse, vector_coeffs
from .report import VerificationReport, check_map_equal
from .scalars import Field


@dataclass(frozen=True)
class StructureAlgebra:
    """Finite-dimensional associative unital algebra."""

    mul: LinMap   # X (x) X -> X
    unit: LinMap  # k -> X

    def __post_init__(self):
        space = self.mul.codomain
        if len(space.factors) != 1:
            raise ShapeError("algebra base space must be a single factor")
        if self.mul.domain != space.tensor(space):
            raise ShapeError("mul must map X(x)X -> X")
        if self.unit.domain != SpaceLabel.scalar() or self.unit.codomain != space:
            raise ShapeError("unit must map k -> X")

    @property
    def space(self) -> SpaceLabel:
        return self.mul.codomain

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def field(self) -> Field:
        return self.mul.field

    def identity(self) -> LinMap:
        return LinMap.identity(self.field, self.space)

    def left_mult(self, element: LinMap) -> LinMap:
        """x -> a*x for a fixed element a: k -> X."""
        return self.mul @ map_kron(element, self.identity())

    def right_mult(self, element: LinMap) -> LinMap:
        return self.mul @ map_kron(self.identity(), element)


@dataclass(frozen=True)
class StructureCoalgebra:
    """Finite-dimensional coassociative counital coalgebra."""

    comul: LinMap   # X -> X (x) X
    counit: LinMap  # X -> k

    def __post_init__(self):
        space = self.comul.domain
        if len(space.factors) != 1:
            raise ShapeError("coalgebra base space must be a single factor")
        if self.comul.codomain != space.tensor(space):
            raise ShapeError("comul must map X -> X(x)X")
        if self.counit.domain != space or self.counit.codomain != SpaceLabel.scalar():
            raise ShapeError("counit must map X -> k")

    @property
    def space(self) -> SpaceLabel:
        return self.comul.domain

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def field(self) -> Field:
        return self.comul.field

    def identity(self) -> LinMap:
        return LinMap.identity(self.field, self.space)

    def comul2(self) -> LinMap:
        """The twofold coproduct X -> X(x)X(x)X (coassociative, so one form)."""
        return map_kron(self.comul, self.identity()) @ self.comul


@dataclass(frozen=True)
class HopfAlgebra:
    algebra: StructureAlgebra
    coalgebra: StructureCoalgebra
    antipode: LinMap
    antipode_inv: LinMap | None = None

    def __post_init__(self):
        if self.algebra.space != self.coalgebra.space:
            raise ShapeError("algebra and coalgebra must share one space")
        s = self.antipode
        if s.domain != self.algebra.space or s.codomain != self.algebra.space:
            raise ShapeError("antipode must be an endomap of the base space")

    @property
    def space(self) -> SpaceLabel:
        return self.algebra.space

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def field(self) -> Field:
        return self.algebra.field


def validate_algebra(alg: StructureAlgebra) -> VerificationReport:
    rep = VerificationReport()
    ident = alg.identity()
    assoc_l = alg.mul @ map_kron(alg.mul, ident)
    assoc_r = alg.mul @ map_kron(ident, alg.mul)
    check_map_equal(rep, "algebra-associativity", assoc_l, assoc_r)
    check_map_equal(rep, "algebra-left-unit", alg.mul @ map_kron(alg.unit, ident), ident)
    check_map_equal(rep, "algebra-right-unit", alg.mul @ map_kron(ident, alg.unit), ident)
    return rep


def validate_coalgebra(coa: StructureCoalgebra) -> VerificationReport:
    rep = VerificationReport()
    ident = coa.identity()
    coassoc_l = map_kron(coa.comul, ident) @ coa.comul
    coassoc_r = map_kron(ident, coa.comul) @ coa.comul
    check_map_equal(rep, "coalgebra-coassociativity", coassoc_l, coassoc_r)
    check_map_equal(rep, "coalgebra-left-counit", map_kron(coa.counit, ident) @ coa.comul, ident)
    check_map_equal(rep, "coalgebra-right-counit", map_kron(ident, coa.counit) @ coa.comul, ident)
    return rep


def tensor_square_mul(alg: StructureAlgebra) -> LinMap:
    """Componentwise product on X(x)X: (a(x)b)(a'(x)b') = aa'(x)bb'."""
    x = alg.space
    mid_flip = kron_all(alg.identity(), flip_map(alg.field, x, x), alg.identity())
    return map_kron(alg.mul, alg.mul) @ mid_flip


def validate_hopf(h: HopfAlgebra) -> VerificationReport:
    """Bialgebra compatibility, antipode axioms, bijectivity of S."""
    rep = VerificationReport()
    rep.extend(validate_algebra(h.algebra))
    rep.extend(validate_coalgebra(h.coalgebra))
    alg, coa = h.algebra, h.coalgebra
    ident = alg.identity()
    # comul and counit are algebra maps
    check_map_equal(rep, "hopf-comul-multiplicative",
                    coa.comul @ alg.mul,
                    tensor_square_mul(alg) @ map_kron(coa.comul, coa.comul))
    check_map_equal(rep, "hopf-comul-unital",
                    coa.comul @ alg.unit, map_kron(alg.unit, alg.unit))
    check_map_equal(rep, "hopf-counit-multiplicative",
                    coa.counit @ alg.mul, map_kron(coa.counit, coa.counit))
    check_map_equal(rep, "hopf-counit-unital",
                    coa.counit @ alg.unit,
                    LinMap.identity(h.field, SpaceLabel.scalar()))
    unit_counit = alg.unit @ coa.counit
    check_map_equal(rep, "hopf-antipode-left",
                    alg.mul @ map_kron(h.antipode, ident) @ coa.comul, unit_counit)
    check_map_equal(rep, "hopf-antipode-right",
                    alg.mul @ map_kron(ident, h.antipode) @ coa.comul, unit_counit)
    inv = h.antipode_inv
    if inv is None:
        inv = try_inverse(h.antipode)
    if inv is None:
        rep.add("hopf-antipode-bijective", False,
                {"reason": "antipode matrix is singular"})
    else:
        rep.add("hopf-antipode-bijective", True)
        check_map_equal(rep, "hopf-antipode-inverse",
                        inv @ h.antipode, ident)
    return rep


def antipode_inverse(h: HopfAlgebra) -> LinMap:
    """Exact matrix inverse of the antipode."""
    if h.antipode_inv is not None:
        return h.antipode_inv
    inv = try_inverse(h.antipode)
    if inv is None:
        raise AntipodeNotBijective("antipode matrix is singular")
    return inv


def check_grouplike(element: LinMap, coa: StructureCoalgebra) -> bool:
    """True iff comul(c) = c (x) c and counit(c) = 1, exactly."""
    if element.codomain != coa.space or element.domain != SpaceLabel.scalar():
        raise ShapeError("grouplike candidate must be a vector in the coalgebra")
    if coa.comul @ element != map_kron(element, element):
        return False
    return vector_coeffs(coa.counit @ element) == (coa.field.one,)
