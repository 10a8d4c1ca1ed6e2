"""Cointegrals, integrals, sections and the explicit strong connection.

The construction: given an entwined extension with surjective lifted
canonical map and a cointegral delta on C, pick any linear section sigma
of the canonical map on the slice 1 (x) C, form

    gamma = (delta (x) A) o (C (x) left_coaction)
    alpha = (A (x) delta) o (right_coaction (x) C)

and assemble

    ell = (gamma (x) alpha) o (C (x) sigma (x) C) o (comul (x) C) o comul.

Every produced object is re-verified rather than trusted: the defining
conditions of a strong connection become per-instance machine checks,
and an independent brute-force oracle describes the whole affine set of
solutions for cross-checking.

All solves share the deterministic echelon solver (leftmost pivots, free
variables zero).  When a solution space is positive-dimensional the
output is reproducible but not canonical; reports record the dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InternalContradiction,
    NoGrouplikeUnit,
    NotGalois,
    TooLarge,
)
from .extensions import EntwinedExtension, lifted_canonical
from .linmaps import (
    Infeasible,
    LinMap,
    SpaceLabel,
    Subspace,
    kernel_basis,
    kron_all,
    map_from_vector,
    map_kron,
    map_vectorize,
    rref_solve,
    vector,
)
from .report import VerificationReport, check_map_equal
from .structures import HopfAlgebra, StructureCoalgebra


@dataclass(frozen=True)
class Cointegral:
    """Functional C (x) C -> k splitting the coproduct bicolinearly."""

    delta: LinMap
    solution_dim: int = 0


@dataclass(frozen=True)
class Integral:
    """Normalised invariant functional on a Hopf algebra."""

    lam: LinMap
    solution_dim: int = 0


@dataclass(frozen=True)
class SectionMap:
    """Linear sigma: C -> A (x) A with canonical_map o sigma = 1 (x) C."""

    sigma: LinMap
    normalized: bool = False
    solution_dim: int = 0


@dataclass(frozen=True)
class ConnectionForm:
    ell: LinMap
    provenance: str = "formula"  # formula | bruteforce | user


@dataclass(frozen=True)
class BruteForceSolutions:
    """Affine description of every map satisfying the three conditions."""

    particular: LinMap
    kernel: Subspace


# -- cointegrals and integrals ------------------------------------------


def verify_cointegral(delta: LinMap, coa: StructureCoalgebra) -> VerificationReport:
    rep = VerificationReport()
    ic = coa.identity()
    check_map_equal(rep, "cointegral-counit-law", delta @ coa.comul, coa.counit)
    check_map_equal(rep, "cointegral-centrality",
                    map_kron(ic, delta) @ map_kron(coa.comul, ic),
                    map_kron(delta, ic) @ map_kron(ic, coa.comul))
    return rep


def _linear_solve_by_probing(field, n_unknowns, probe, rhs_vec):
    """Solve the linear condition F(x) = rhs by evaluating F on the
    standard basis of the unknown space.  Returns (solution-coefficient
    vector | Infeasible, kernel dimension).
    """
    cols = SpaceLabel.base("unknowns", n_unknowns)
    rows_label = SpaceLabel.base("constraints", len(rhs_vec))
    columns = [probe(k) for k in range(n_unknowns)]
    entries = [[columns[c][r] for c in range(n_unknowns)] for r in range(len(rhs_vec))]
    system = LinMap(field, cols, rows_label, entries)
    target = vector(field, rows_label, rhs_vec)
    sol = rref_solve(system, target)
    if isinstance(sol, Infeasible):
        return sol, kernel_basis(system).dim
    coeffs = tuple(row[0] for row in sol.entries)
    return coeffs, kernel_basis(system).dim


def solve_cointegral(coa: StructureCoalgebra):
    """Deterministic cointegral on C, or Infeasible with a certificate.

    Infeasibility means C is not coseparable over this field; over a
    larger field the system could in principle become solvable.
    """
    field = coa.field
    c = coa.dim
    cc = coa.space.tensor(coa.space)
    ic = coa.identity()

    def probe(k):
        delta_k = map_from_vector(field, cc, SpaceLabel.scalar(),
                                  [field.one if i == k else field.zero
                                   for i in range(c * c)])
        counit_part = map_vectorize(delta_k @ coa.comul)
        central = map_kron(ic, delta_k) @ map_kron(coa.comul, ic) - \
            map_kron(delta_k, ic) @ map_kron(ic, coa.comul)
        return counit_part + map_vectorize(central)

    rhs = list(map_vectorize(coa.counit)) + \
        [field.zero] * (c * c * c)
    sol, free_dim = _linear_solve_by_probing(field, c * c, probe, rhs)
    if isinstance(sol, Infeasible):
        return sol
    delta = map_from_vector(field, cc, SpaceLabel.scalar(), sol)
    if not verify_cointegral(delta, coa).passed:
        raise InternalContradiction("solved cointegral fails its defining laws")
    return Cointegral(delta, free_dim)


def verify_integral(lam: LinMap, hopf: HopfAlgebra) -> VerificationReport:
    rep = VerificationReport()
    coa = hopf.coalgebra
    ic = coa.identity()
    # c_1 lam(c_2) = lam(c) 1, the C-valued invariance law
    check_map_equal(rep, "integral-invariance",
                    map_kron(ic, lam) @ coa.comul, hopf.algebra.unit @ lam)
    check_map_equal(rep, "integral-normalized",
                    lam @ hopf.algebra.unit,
                    LinMap.identity(hopf.field, SpaceLabel.scalar()))
    return rep


def solve_integral(hopf: HopfAlgebra):
    """Deterministic normalised integral on a Hopf algebra, or Infeasible."""
    field = hopf.field
    c = hopf.dim
    coa = hopf.coalgebra
    ic = coa.identity()

    def probe(k):
        lam_k = map_from_vector(field, coa.space, SpaceLabel.scalar(),
                                [field.one if i == k else field.zero
                                 for i in range(c)])
        invariance = map_kron(ic, lam_k) @ coa.comul - hopf.algebra.unit @ lam_k
        normal = lam_k @ hopf.algebra.unit
        return map_vectorize(invariance) + map_vectorize(normal)

    rhs = [field.zero] * (c * c) + [field.one]
    sol, free_dim = _linear_solve_by_probing(field, c, probe, rhs)
    if isinstance(sol, Infeasible):
        return sol
    lam = map_from_vector(field, coa.space, SpaceLabel.scalar(), sol)
    if not verify_integral(lam, hopf).passed:
        raise InternalContradiction("solved integral fails its defining laws")
    return Integral(lam, free_dim)


def integral_to_cointegral(hopf: HopfAlgebra, integral: Integral) -> Cointegral:
    """delta(c (x) c') = lam(c S(c')), re-verified against the cointegral laws."""
    ic = hopf.coalgebra.identity()
    delta = integral.lam @ hopf.algebra.mul @ map_kron(ic, hopf.antipode)
    if not verify_cointegral(delta, hopf.coalgebra).passed:
        raise InternalContradiction("converted cointegral fails its defining laws")
    return Cointegral(delta, 0)


def cointegral_to_integral(delta: Cointegral, hopf: HopfAlgebra):
    """lam(c) = delta(c (x) 1); validity is checked and reported, not assumed."""
    ic = hopf.coalgebra.identity()
    lam = delta.delta @ map_kron(ic, hopf.algebra.unit)
    return Integral(lam, 0), verify_integral(lam, hopf)


# -- sections ------------------------------------------------------------


def solve_section(ext: EntwinedExtension) -> SectionMap:
    """Deterministic right-inverse of the canonical map on the slice 1 (x) C."""
    alg, coa = ext.algebra, ext.coalgebra
    lcan = lifted_canonical(alg, coa, ext.coaction.rho)
    if lcan.rank() != alg.dim * coa.dim:
        raise NotGalois("lifted canonical map is not surjective")
    target = map_kron(alg.unit, coa.identity())
    sigma = rref_solve(lcan, target)
    if isinstance(sigma, Infeasible):  # pragma: no cover - rank was checked
        raise NotGalois("no section exists")
    free_dim = kernel_basis(lcan).dim * coa.dim
    return SectionMap(sigma, normalized=False, solution_dim=free_dim)


def normalize_section(section: SectionMap, grouplike: LinMap,
                      ext: EntwinedExtension) -> SectionMap:
    """Shift sigma so that sigma(e) = 1 (x) 1, preserving the section law."""
    alg, coa = ext.algebra, ext.coalgebra
    if ext.unit_coaction() != map_kron(alg.unit, grouplike):
        raise NoGrouplikeUnit("rho(1) is not 1 (x) e")
    unit_pair = map_kron(alg.unit, alg.unit)
    sigma = section.sigma + unit_pair @ coa.counit - \
        (section.sigma @ grouplike) @ coa.counit
    if sigma @ grouplike != unit_pair:
        raise InternalContradiction("normalisation did not fix sigma(e)")
    lcan = lifted_canonical(alg, coa, ext.coaction.rho)
    if lcan @ sigma != map_kron(alg.unit, coa.identity()):
        raise InternalContradiction("normalisation broke the section law")
    return SectionMap(sigma, normalized=True, solution_dim=section.solution_dim)


# -- the connection ------------------------------------------------------


def gamma_map(delta: Cointegral, ext: EntwinedExtension) -> LinMap:
    """gamma = (delta (x) A) o (C (x) left_coaction), left C-colinear."""
    alg, coa = ext.algebra, ext.coalgebra
    ia, ic = alg.identity(), coa.identity()
    gamma = map_kron(delta.delta, ia) @ map_kron(ic, ext.coaction.rho_left)
    lhs = ext.coaction.rho_left @ gamma
    rhs = map_kron(ic, gamma) @ map_kron(coa.comul, ia)
    if lhs != rhs:
        raise InternalContradiction("gamma is not left colinear")
    return gamma


def alpha_map(delta: Cointegral, ext: EntwinedExtension) -> LinMap:
    """alpha = (A (x) delta) o (right_coaction (x) C), right C-colinear."""
    alg, coa = ext.algebra, ext.coalgebra
    ia, ic = alg.identity(), coa.identity()
    alpha = map_kron(ia, delta.delta) @ map_kron(ext.coaction.rho, ic)
    lhs = ext.coaction.rho @ alpha
    rhs = map_kron(alpha, ic) @ map_kron(ia, coa.comul)
    if lhs != rhs:
        raise InternalContradiction("alpha is not right colinear")
    return alpha


def build_connection(section: SectionMap, delta: Cointegral,
                     ext: EntwinedExtension) -> ConnectionForm:
    """Assemble the explicit strong connection form from sigma and delta."""
    coa = ext.coalgebra
    ic = coa.identity()
    gamma = gamma_map(delta, ext)
    alpha = alpha_map(delta, ext)
    ell = map_kron(gamma, alpha) @ kron_all(ic, section.sigma, ic) @ \
        map_kron(coa.comul, ic) @ coa.comul
    return ConnectionForm(ell, provenance="formula")


def verify_connection(conn: ConnectionForm, ext: EntwinedExtension) -> VerificationReport:
    """The three defining conditions, plus the normalisation check when a
    grouplike is designated (not applicable otherwise)."""
    rep = VerificationReport()
    alg, coa = ext.algebra, ext.coalgebra
    ia, ic = alg.identity(), coa.identity()
    ell = conn.ell
    lcan = lifted_canonical(alg, coa, ext.coaction.rho)
    check_map_equal(rep, "connection-sections-canonical",
                    lcan @ ell, map_kron(alg.unit, ic))
    check_map_equal(rep, "connection-right-colinear",
                    map_kron(ell, ic) @ coa.comul,
                    map_kron(ia, ext.coaction.rho) @ ell)
    check_map_equal(rep, "connection-left-colinear",
                    map_kron(ic, ell) @ coa.comul,
                    map_kron(ext.coaction.rho_left, ia) @ ell)
    if ext.grouplike is None:
        rep.add_na("connection-normalized", "no designated grouplike")
    else:
        check_map_equal(rep, "connection-normalized",
                        ell @ ext.grouplike, map_kron(alg.unit, alg.unit))
    return rep


def colinearity_reduction(section: SectionMap, delta: Cointegral,
                          ext: EntwinedExtension):
    """Classify sigma's colinearity, compute the applicable reduced
    formulas, and assert they agree with the full one.

    Returns (report, connection).  A reduced/full disagreement would
    contradict the construction and raises InternalContradiction.
    """
    rep = VerificationReport()
    alg, coa = ext.algebra, ext.coalgebra
    ia, ic = alg.identity(), coa.identity()
    sigma = section.sigma
    right_col = map_kron(sigma, ic) @ coa.comul == \
        map_kron(ia, ext.coaction.rho) @ sigma
    left_col = map_kron(ic, sigma) @ coa.comul == \
        map_kron(ext.coaction.rho_left, ia) @ sigma
    if right_col and left_col:
        klass = "bicolinear"
    elif right_col:
        klass = "right-colinear"
    elif left_col:
        klass = "left-colinear"
    else:
        klass = "neither"
    rep.add_info("section-colinearity-class", {"class": klass})
    conn = build_connection(section, delta, ext)
    gamma = gamma_map(delta, ext)
    alpha = alpha_map(delta, ext)
    if right_col:
        reduced = map_kron(gamma, ia) @ map_kron(ic, sigma) @ coa.comul
        ok = rep.add("reduction-right-agrees", reduced == conn.ell)
        if not ok:
            raise InternalContradiction("right-reduced formula disagrees")
    else:
        rep.add_na("reduction-right-agrees", "sigma is not right colinear")
    if left_col:
        reduced = map_kron(ia, alpha) @ map_kron(sigma, ic) @ coa.comul
        ok = rep.add("reduction-left-agrees", reduced == conn.ell)
        if not ok:
            raise InternalContradiction("left-reduced formula disagrees")
    else:
        rep.add_na("reduction-left-agrees", "sigma is not left colinear")
    if right_col and left_col:
        ok = rep.add("bicolinear-fixed-point", conn.ell == sigma)
        if not ok:
            raise InternalContradiction("bicolinear sigma was not reproduced")
    else:
        rep.add_na("bicolinear-fixed-point", "sigma is not bicolinear")
    return rep, conn


def splitting(conn: ConnectionForm, ext: EntwinedExtension):
    """s(a) = a_0 ell(a_1), with the equivariant-projectivity checks.

    Returns (s, report): s sections the product, lands in B (x) A, is
    left B-linear and right C-colinear.
    """
    rep = VerificationReport()
    alg, coa = ext.algebra, ext.coalgebra
    field = ext.field
    ia, ic = alg.identity(), coa.identity()
    s = map_kron(alg.mul, ia) @ map_kron(ia, conn.ell) @ ext.coaction.rho
    check_map_equal(rep, "splitting-sections-product", alg.mul @ s, ia)
    b_tensor_a = Subspace.from_vectors(
        field, alg.space.tensor(alg.space),
        [tuple(map_vectorize(map_kron(vector(field, alg.space, b),
                                      vector(field, alg.space, a_row))))
         for b in ext.coinvariants.basis
         for a_row in LinMap.identity(field, alg.space).entries])
    bad = None
    for j in range(alg.dim):
        if not b_tensor_a.contains_vector(s.column(j)):
            bad = j
            break
    rep.add("splitting-image-in-coinvariants", bad is None,
            None if bad is None else {"basis": [bad]})
    bad = None
    for bi, b in enumerate(ext.coinvariants.basis):
        bv = vector(field, alg.space, b)
        lm = alg.left_mult(bv)
        if s @ lm != map_kron(lm, ia) @ s:
            bad = bi
            break
    rep.add("splitting-left-coinvariant-linear", bad is None,
            None if bad is None else {"coinvariant_basis_row": bad})
    check_map_equal(rep, "splitting-right-colinear",
                    map_kron(ia, ext.coaction.rho) @ s,
                    map_kron(s, ic) @ ext.coaction.rho)
    return s, rep


# -- the independent oracle ----------------------------------------------


def brute_force_connections(ext: EntwinedExtension, cap: int = 4096):
    """Stack the three defining conditions as one linear system in the
    entries of ell and solve it outright.

    Returns the affine solution set (particular solution plus kernel) or
    an Infeasible certificate.  Cost grows with the cube of the unknown
    count, hence the cap.
    """
    alg, coa = ext.algebra, ext.coalgebra
    field = ext.field
    n = coa.dim * alg.dim * alg.dim
    if n > cap:
        raise TooLarge(f"{n} unknowns exceed the oracle cap {cap}")
    ia, ic = alg.identity(), coa.identity()
    aa = alg.space.tensor(alg.space)
    lcan = lifted_canonical(alg, coa, ext.coaction.rho)
    rho, lam = ext.coaction.rho, ext.coaction.rho_left

    def conditions(ell: LinMap):
        cond_a = lcan @ ell
        cond_b = map_kron(ell, ic) @ coa.comul - map_kron(ia, rho) @ ell
        cond_c = map_kron(ic, ell) @ coa.comul - map_kron(lam, ia) @ ell
        return map_vectorize(cond_a) + map_vectorize(cond_b) + map_vectorize(cond_c)

    def probe(k):
        unit_vec = [field.one if i == k else field.zero for i in range(n)]
        return conditions(map_from_vector(field, coa.space, aa, unit_vec))

    rhs = list(map_vectorize(map_kron(alg.unit, ic)))
    pad = coa.dim * (alg.dim * alg.dim * coa.dim + coa.dim * alg.dim * alg.dim)
    rhs += [field.zero] * pad
    cols = SpaceLabel.base("unknowns", n)
    rows_label = SpaceLabel.base("constraints", len(rhs))
    columns = [probe(k) for k in range(n)]
    entries = [[columns[c][r] for c in range(n)] for r in range(len(rhs))]
    system = LinMap(field, cols, rows_label, entries)
    sol = rref_solve(system, vector(field, rows_label, rhs))
    if isinstance(sol, Infeasible):
        # attribute the obstruction: is the section condition alone feasible?
        block_a = coa.dim * alg.dim * coa.dim
        a_label = SpaceLabel.base("constraints", block_a)
        a_system = LinMap(field, cols, a_label, entries[:block_a])
        a_sol = rref_solve(a_system, vector(field, a_label, rhs[:block_a]))
        which = ("the section condition (a)" if isinstance(a_sol, Infeasible)
                 else "the colinearity conditions")
        return Infeasible(sol.row, sol.column,
                          detail=f"no map satisfies the stacked conditions; "
                                 f"first obstruction lies in {which}")
    particular = map_from_vector(field, coa.space, aa,
                                 tuple(row[0] for row in sol.entries))
    return BruteForceSolutions(particular, kernel_basis(system))


def membership_check(conn: ConnectionForm, oracle: BruteForceSolutions) -> bool:
    """True iff the connection lies in the oracle's affine solution set."""
    diff = [a - b for a, b in zip(map_vectorize(conn.ell),
                                  map_vectorize(oracle.particular))]
    return oracle.kernel.contains_vector(diff)
