"""Quantum homogeneous spaces: the quotient coalgebra C = A/B+A and the
averaging of a linear section of the projection into a bicolinear one.

Given a Hopf algebra A and a unital subalgebra B with Delta(B) in
A (x) B, the span B+A of products of counit-killed B elements with A is
a coideal; C is the quotient coalgebra, pi the projection, and A carries
induced left and right C-coactions (pi (x) A) o Delta and
(A (x) pi) o Delta.

Coset representatives are deterministic and prefer low basis indices:
the coideal is put in echelon form processing coordinates from the
highest down, so the surviving complement consists of the smallest
basis indices.  This makes i([1]) = 1 whenever possible.

With a cointegral delta on C, any linear section i of pi averages to a
bicolinear section: contract the outer coproduct legs of i against
delta through pi on both sides.  The printed source of the formula is
typographically ambiguous in one spot; we use the only reading that
type-checks (the third coproduct leg of the section image, then the
projection) and mark the report entry as reconstructed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InternalContradiction,
    IotaNotBicolinear,
    NotCoideal,
    NotHomogeneous,
)
from .linmaps import (
    LinMap,
    SpaceLabel,
    Subspace,
    flip_map,
    kron_all,
    map_kron,
    vector,
)
from .report import VerificationReport, check_map_equal
from .structures import HopfAlgebra, StructureCoalgebra, validate_coalgebra
from .connection import Cointegral


@dataclass(frozen=True)
class HomogeneousDatum:
    hopf: HopfAlgebra          # the total Hopf algebra A
    b_subalgebra: Subspace     # B inside A
    bplus_a: Subspace          # the coideal B+A
    quotient: StructureCoalgebra  # C = A/B+A
    pi: LinMap                 # A -> C
    section: LinMap            # i: C -> A, the canonical representatives
    left_coaction: LinMap      # (pi (x) A) o Delta
    right_coaction: LinMap     # (A (x) pi) o Delta

    @property
    def quotient_dim(self) -> int:
        return self.quotient.dim


def _reversed_subspace(sub: Subspace) -> Subspace:
    rev = [tuple(reversed(v)) for v in sub.basis]
    return Subspace.from_vectors(sub.field, sub.ambient, rev)


def _high_pivot_reduction(sub: Subspace):
    """Reduction modulo sub eliminating the highest coordinates first.

    Returns (reduce, representative_indices): reduce maps an ambient
    coefficient tuple to its canonical remainder, supported on the
    representative indices (the lowest-index complement).
    """
    n = sub.ambient.dim
    rev = _reversed_subspace(sub)
    killed = {n - 1 - p for p in rev._pivots}
    reps = [i for i in range(n) if i not in killed]

    def reduce(coeffs):
        rem = rev.reduce(tuple(reversed(tuple(coeffs))))
        return tuple(reversed(rem))

    return reduce, reps


def build_quotient(hopf: HopfAlgebra, b_sub: Subspace):
    """Construct the quotient datum, collecting every check in a report.

    Returns (datum | None, report); the strict entry point
    quotient_coalgebra raises instead.
    """
    rep = VerificationReport()
    field = hopf.field
    alg, coa = hopf.algebra, hopf.coalgebra
    a_space = alg.space
    n = a_space.dim
    ia = alg.identity()

    one = tuple(row[0] for row in alg.unit.entries)
    unital = b_sub.contains_vector(one)
    rep.add("subalgebra-unital", unital)
    closed = True
    for u in b_sub.basis:
        for v in b_sub.basis:
            prod = alg.mul @ map_kron(vector(field, a_space, u),
                                      vector(field, a_space, v))
            if not b_sub.contains_vector(tuple(r[0] for r in prod.entries)):
                closed = False
                break
        if not closed:
            break
    rep.add("subalgebra-closed", closed)

    # Delta(B) in A (x) B
    a_tensor_b = Subspace.from_vectors(
        field, a_space.tensor(a_space),
        [_pair_vec(field, a_space, i, b)
         for i in range(n) for b in b_sub.basis])
    stable = True
    for b in b_sub.basis:
        img = coa.comul @ vector(field, a_space, b)
        if not a_tensor_b.contains_vector(tuple(r[0] for r in img.entries)):
            stable = False
            break
    rep.add("coproduct-stabilises-subalgebra", stable)
    if not (unital and closed and stable):
        return None, rep

    # B+ = B n ker(counit), then B+A = span of products
    ker_eps = Subspace.from_vectors(
        field, a_space,
        _kernel_vectors(coa.counit))
    b_plus = b_sub.intersection(ker_eps)
    prods = []
    for b in b_plus.basis:
        lm = alg.left_mult(vector(field, a_space, b))
        for j in range(n):
            col = lm.column(j)
            if any(col):
                prods.append(col)
    bplus_a = Subspace.from_vectors(field, a_space, prods)

    # coideal checks
    two_sided = Subspace.from_vectors(
        field, a_space.tensor(a_space),
        [_pair_vec(field, a_space, i, b)
         for i in range(n) for b in bplus_a.basis]
        + [_pair_vec_left(field, a_space, b, i)
           for i in range(n) for b in bplus_a.basis])
    coideal_cop = True
    for b in bplus_a.basis:
        img = coa.comul @ vector(field, a_space, b)
        if not two_sided.contains_vector(tuple(r[0] for r in img.entries)):
            coideal_cop = False
            break
    rep.add("coideal-coproduct", coideal_cop)
    coideal_eps = all(
        not any((coa.counit @ vector(field, a_space, b)).entries[0])
        for b in bplus_a.basis)
    rep.add("coideal-counit", coideal_eps)
    if not (coideal_cop and coideal_eps):
        return None, rep

    reduce, reps = _high_pivot_reduction(bplus_a)
    q = len(reps)
    c_space = SpaceLabel.base("C", q)
    z = field.zero
    pi_rows = [[z] * n for _ in range(q)]
    for j in range(n):
        rem = reduce(tuple(field.one if i == j else z for i in range(n)))
        for r, idx in enumerate(reps):
            pi_rows[r][j] = rem[idx]
    pi = LinMap(field, a_space, c_space, pi_rows)
    section = LinMap(field, c_space, a_space,
                     [[field.one if reps[c] == r else z for c in range(q)]
                      for r in range(n)])
    if pi @ section != LinMap.identity(field, c_space):
        raise InternalContradiction("pi o i is not the identity")

    comul_c = map_kron(pi, pi) @ coa.comul @ section
    counit_c = coa.counit @ section
    quotient = StructureCoalgebra(comul_c, counit_c)
    qrep = validate_coalgebra(quotient)
    rep.add("quotient-coalgebra-valid", qrep.passed,
            None if qrep.passed else {"first": qrep.failures[0].name})
    # well-definedness: the induced maps factor through pi
    ok = comul_c @ pi == map_kron(pi, pi) @ coa.comul and \
        counit_c @ pi == coa.counit
    rep.add("quotient-well-defined", ok)
    if not (qrep.passed and ok):
        raise InternalContradiction("quotient structure failed after coideal checks")

    left = map_kron(pi, ia) @ coa.comul
    right = map_kron(ia, pi) @ coa.comul
    datum = HomogeneousDatum(hopf, b_sub, bplus_a, quotient, pi, section,
                             left, right)
    return datum, rep


def _pair_vec(field, a_space, i, b):
    """Basis_i (x) b as a flat coefficient tuple."""
    z = field.zero
    n = a_space.dim
    out = [z] * (n * n)
    for j, c in enumerate(b):
        out[i * n + j] = c
    return tuple(out)


def _pair_vec_left(field, a_space, b, i):
    z = field.zero
    n = a_space.dim
    out = [z] * (n * n)
    for j, c in enumerate(b):
        out[j * n + i] = c
    return tuple(out)


def _kernel_vectors(functional: LinMap):
    from .linmaps import kernel_basis
    return list(kernel_basis(functional).basis)


def quotient_coalgebra(hopf: HopfAlgebra, b_sub: Subspace) -> HomogeneousDatum:
    """Strict quotient construction; raises on a failed precondition."""
    datum, rep = build_quotient(hopf, b_sub)
    if datum is not None:
        return datum
    first = rep.failures[0].name
    if first in ("subalgebra-unital", "subalgebra-closed",
                 "coproduct-stabilises-subalgebra"):
        raise NotHomogeneous(first)
    raise NotCoideal(first)


def induced_coactions(datum: HomogeneousDatum):
    """Both induced coactions, with their laws re-verified."""
    from .extensions import validate_left_coaction, validate_right_coaction
    rep = VerificationReport()
    a_space = datum.hopf.space
    rep.extend(validate_right_coaction(datum.right_coaction, datum.quotient, a_space))
    rep.extend(validate_left_coaction(datum.left_coaction, datum.quotient, a_space))
    return (datum.left_coaction, datum.right_coaction), rep


def linear_section_of_pi(datum: HomogeneousDatum) -> LinMap:
    """The canonical linear section: quotient basis to its representative."""
    return datum.section


def bicolinear_section_iota(datum: HomogeneousDatum, delta: Cointegral,
                            section: LinMap | None = None, strict: bool = True):
    """Average a linear section of pi into a bicolinear one.

    iota(c) contracts delta against the projected outer coproduct legs
    of i(c_2) on both sides.  Returns (iota, report); with strict=True a
    failed verification raises IotaNotBicolinear.
    """
    rep = VerificationReport()
    hopf, quotient, pi = datum.hopf, datum.quotient, datum.pi
    field = hopf.field
    i_map = section if section is not None else datum.section
    ia = hopf.algebra.identity()
    ic = quotient.identity()
    comul_c = quotient.comul
    comul2_a = map_kron(hopf.coalgebra.comul, ia) @ hopf.coalgebra.comul
    chain = map_kron(comul_c, ic) @ comul_c            # C -> C (x) C (x) C
    chain = kron_all(ic, i_map, ic) @ chain            # -> C (x) A (x) C
    chain = kron_all(ic, comul2_a, ic) @ chain         # -> C (x) A A A (x) C
    chain = kron_all(ic, pi, ia, pi, ic) @ chain       # -> C C A C C
    iota = kron_all(delta.delta, ia, delta.delta) @ chain
    rep.add_na("averaging-reading",
               "outer delta contracts the third coproduct leg of the "
               "section image, then the projection (reconstructed)")
    check_map_equal(rep, "averaged-section-splits-projection",
                    pi @ iota, LinMap.identity(field, quotient.space))
    check_map_equal(rep, "averaged-section-left-colinear",
                    datum.left_coaction @ iota, map_kron(ic, iota) @ comul_c)
    check_map_equal(rep, "averaged-section-right-colinear",
                    datum.right_coaction @ iota, map_kron(iota, ic) @ comul_c)
    if strict and not rep.passed:
        raise IotaNotBicolinear(rep.failures[0].name)
    return iota, rep


def extension_from_homogeneous(datum: HomogeneousDatum):
    """Wire the quotient into an entwined extension.

    The entwining sends c (x) a to a_1 (x) pi(i(c) a_2); bijectivity of
    the antipode of A is the standing hypothesis and is recorded, with
    the entwining matrix inverted numerically as everywhere else.
    Returns (extension | None, report).
    """
    from .extensions import validate_and_build
    from .linmaps import try_inverse
    rep = VerificationReport()
    hopf = datum.hopf
    field = hopf.field
    a_space = hopf.space
    ia = hopf.algebra.identity()
    rep.add("antipode-bijective", try_inverse(hopf.antipode) is not None)
    psi = map_kron(ia, datum.pi) @ map_kron(ia, hopf.algebra.mul) @ \
        map_kron(flip_map(field, a_space, a_space), ia) @ \
        map_kron(datum.section, hopf.coalgebra.comul)
    grouplike = datum.pi @ hopf.algebra.unit
    ext, build_rep = validate_and_build(hopf.algebra, datum.quotient, psi,
                                        datum.right_coaction, grouplike)
    rep.extend(build_rep)
    return ext, rep
