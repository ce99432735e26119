"""Tests for lattices, shifting families, class-graded algebras,
presentations, and the verification checks built on top of them.

The tripled projective line (three pairs of glued points over 0, 1 and
infinity) is the main worked fixture: its presentation, certificate rows,
separatedness defect, and the agreement of the two lattice pipelines all
have independently computed expected values.
"""

import functools
import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coxring.coxalg import (
    BoxTooSmall,
    DegreeMismatch,
    Equivalent,
    Fail,
    GeneratorsIncomplete,
    GradedSectionAlgebra,
    InIdeal,
    Inconclusive,
    NotASection,
    NotEquivalent,
    NotInIdeal,
    NotInKernel,
    NotSeparated,
    Pass,
    Presentation,
    Separated,
    build_presentation,
    build_shifting_family,
    canonical_lambda,
    curve_algebra,
    default_box,
    find_generators,
    find_relations,
    freely_graded_check,
    full_lambda,
    graded_homs_equivalent,
    ideal_membership,
    irrelevant_sections,
    is_pointed,
    separatedness_check,
    shift,
    tensor_presentation,
    uniqueness_crosscheck,
    weight_monoid_check,
)
from coxring.exactmath import MultiPoly, RationalFunction
from coxring.grading import FGAbelianGroup
from coxring.ratcurve import (
    CurvePoint,
    Divisor,
    GluedCurve,
    P1Point,
    principal_divisor,
    section_space,
)


def pt(v):
    return P1Point.infinity() if v == "inf" else P1Point.finite(Fraction(v))


def cp(v, i=0):
    return CurvePoint(pt(v), i)


def tripled_line():
    return GluedCurve([(pt(0), 2), (pt(1), 2), (pt("inf"), 2)])


def doubled_line():
    return GluedCurve([(pt(0), 2)])


def plain_line():
    return GluedCurve([(pt("inf"), 1)])


Z = RationalFunction.z()
ONE = RationalFunction.one()
ZERO6 = (0,) * 6


def explicit_basis():
    return [Divisor.of_point(cp(0)), Divisor.of_point(cp(1)),
            Divisor.of_point(cp(1, 1)), Divisor.of_point(cp("inf"))]


@functools.lru_cache(maxsize=None)
def tripled_algebra():
    return curve_algebra(tripled_line(), "canonical", basis=explicit_basis())


@functools.lru_cache(maxsize=None)
def tripled_box():
    return default_box(tripled_line(), 2, basis=explicit_basis())


@functools.lru_cache(maxsize=None)
def tripled_presentation():
    return build_presentation(tripled_algebra(), tripled_box())


@functools.lru_cache(maxsize=None)
def tripled_full_algebra():
    return curve_algebra(tripled_line(), "full")


@functools.lru_cache(maxsize=None)
def plain_presentation():
    X = plain_line()
    return build_presentation(curve_algebra(X), default_box(X, 2))


# expected generator data for the tripled line over the explicit basis
# D0, D1, D1', Dinf: degrees in basis coordinates, then their sections.
EXPECTED_DEGREES = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
                 (0, 1, 1, -1), (-1, 1, 1, 0)]
EXPECTED_SECTIONS = ["1", "1", "1", "1", "1/(z - 1)", "z/(z - 1)"]

# variable attached to each copy: the unique generator vanishing there.
COPY_VARIABLE = {cp(0): 0, cp(1): 1, cp(1, 1): 2, cp("inf"): 3,
                 cp("inf", 1): 4, cp(0, 1): 5}


def basis_to_ambient(vec):
    lat = tripled_algebra().lattice
    return lat.to_pic.apply(vec)


class TestLattices:
    def test_explicit_basis(self):
        lat = canonical_lambda(tripled_line(), basis=explicit_basis())
        assert lat.rank == 4
        assert list(lat.kernel_basis()) == []
        assert lat.to_pic.is_surjective()
        assert lat.divisor_of((1, 0, 0, 0)) == Divisor.of_point(cp(0))
        assert lat.divisor_of((0, 1, 1, -1)) == (
            Divisor.of_point(cp(1)) + Divisor.of_point(cp(1, 1))
            - Divisor.of_point(cp("inf")))

    def test_greedy_basis(self):
        lat = canonical_lambda(tripled_line())
        assert [D for D in lat.basis] == [
            Divisor.of_point(cp(0)), Divisor.of_point(cp(0, 1)),
            Divisor.of_point(cp(1)), Divisor.of_point(cp("inf"))]
        assert list(lat.kernel_basis()) == []

    def test_full_lattice(self):
        lat = full_lambda(tripled_line())
        assert lat.rank == 6
        assert [tuple(v) for v in lat.kernel_basis()] == [
            (1, 1, 0, 0, -1, -1), (0, 0, 1, 1, -1, -1)]

    def test_ordinary_support_rejected(self):
        with pytest.raises(ValueError, match="special"):
            canonical_lambda(tripled_line(),
                             basis=[Divisor.of_point(CurvePoint(pt(5), 0)),
                                    Divisor.of_point(cp(1)),
                                    Divisor.of_point(cp(1, 1)),
                                    Divisor.of_point(cp("inf"))])

    def test_dependent_basis_rejected(self):
        with pytest.raises(ValueError, match="dependent"):
            canonical_lambda(tripled_line(),
                             basis=[Divisor.of_point(cp(0))] * 4)

    def test_short_basis_rejected(self):
        with pytest.raises(ValueError, match="onto"):
            canonical_lambda(tripled_line(),
                             basis=[Divisor.of_point(cp(0)),
                                    Divisor.of_point(cp(1))])

    def test_relation_basis_rejected(self):
        with pytest.raises(ValueError, match="relations"):
            canonical_lambda(tripled_line(),
                             basis=explicit_basis()
                             + [Divisor.of_point(cp("inf", 1))])

    def test_divisor_of_length(self):
        lat = canonical_lambda(tripled_line(), basis=explicit_basis())
        with pytest.raises(ValueError):
            lat.divisor_of((1, 2))


# lattice degrees of the full tripled lattice with nonzero components,
# used to sample sections for the shifting family laws.
FULL_DEGREES = [ZERO6, (1, 1, 0, 0, 0, 0), (0, 0, 1, 1, 0, 0),
                (0, 0, 0, 0, 1, 1), (1, 1, 1, 1, 0, 0),
                (1, 1, 0, 0, 1, 1), (2, 2, 1, 1, 0, 0),
                (1, 1, 1, 1, 1, 1)]


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


@st.composite
def kernel_elements(draw, bound=2):
    fam = tripled_full_algebra().family
    c = draw(st.tuples(st.integers(-bound, bound), st.integers(-bound,
                                                               bound)))
    out = ZERO6
    for x, E in zip(c, fam.kernel):
        out = vadd(out, tuple(x * e for e in E))
    return out


@st.composite
def full_sections(draw, degrees=tuple(FULL_DEGREES)):
    """A degree of the full lattice and a nonzero section there."""
    L = draw(st.sampled_from(list(degrees)))
    comp = tripled_full_algebra().base.component(L)
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=comp.dim,
                           max_size=comp.dim).filter(lambda c: any(c)))
    f = RationalFunction.zero()
    for c, b in zip(coeffs, comp.basis):
        f = f + b * c
    return L, f


class TestShiftingFamily:
    def test_witnesses(self):
        fam = tripled_full_algebra().family
        assert [str(w) for w in fam.witnesses] == ["1/z", "1/(z - 1)"]

    def test_witness_divisor_opposes_kernel_divisor(self):
        fam = tripled_full_algebra().family
        X = tripled_line()
        for E, g in zip(fam.kernel, fam.witnesses):
            assert principal_divisor(g, X) == -1 * fam.lattice.divisor_of(E)

    def test_shift_of_constant(self):
        fam = tripled_full_algebra().family
        assert shift(fam, fam.kernel[0], ONE, ZERO6) == ONE / Z
        assert shift(fam, fam.kernel[1], ONE, ZERO6) == ONE / (Z - 1)

    def test_shift_zero_is_identity(self):
        fam = tripled_full_algebra().family
        L = (1, 1, 1, 1, 0, 0)
        comp = fam.algebra.component(L)
        f = comp.basis[0] + comp.basis[-1]
        assert shift(fam, ZERO6, f, L) == f

    def test_assembled_witness(self):
        fam = tripled_full_algebra().family
        E = vadd(fam.kernel[0], tuple(-x for x in fam.kernel[1]))
        assert fam.witness_for(E) == (Z - 1) / Z

    @settings(max_examples=30, deadline=None)
    @given(full_sections(), kernel_elements(), kernel_elements())
    def test_composition_law(self, lf, E1, E2):
        fam = tripled_full_algebra().family
        L, f = lf
        once = shift(fam, vadd(E1, E2), f, L)
        twice = shift(fam, E2, shift(fam, E1, f, L), vadd(L, E1))
        assert once == twice

    @settings(max_examples=30, deadline=None)
    @given(full_sections(), full_sections(), kernel_elements())
    def test_module_law(self, lf, lh, E):
        fam = tripled_full_algebra().family
        (L1, f), (L2, h) = lf, lh
        left = shift(fam, E, f * h, vadd(L1, L2))
        assert left == f * shift(fam, E, h, L2)

    def test_not_in_kernel(self):
        fam = tripled_full_algebra().family
        with pytest.raises(NotInKernel):
            shift(fam, (1, 0, 0, 0, 0, 0), ONE, ZERO6)
        with pytest.raises(NotInKernel):
            fam.kernel_coords((1, 1, 0, 0, -1, 0))

    def test_not_a_section(self):
        fam = tripled_full_algebra().family
        with pytest.raises(NotASection):
            shift(fam, fam.kernel[0], Z ** 5, ZERO6)

    def test_rescaled(self):
        fam = tripled_full_algebra().family
        fam2 = fam.rescaled([3, 5])
        assert shift(fam2, fam2.kernel[0], ONE, ZERO6) == (ONE * 3) / Z
        assert fam2.witness_for(fam2.kernel[1]) == (ONE * 5) / (Z - 1)
        with pytest.raises(ValueError):
            fam.rescaled([0, 1])

    def test_trivial_kernel_family(self):
        fam = build_shifting_family(canonical_lambda(tripled_line(),
                                                     basis=explicit_basis()))
        assert fam.kernel == ()
        assert fam.witness_for((0, 0, 0, 0)) == ONE
        with pytest.raises(NotInKernel):
            fam.witness_for((1, 0, 0, 0))


class TestIdealMembership:
    def box(self):
        return tripled_box()

    @settings(max_examples=25, deadline=None)
    @given(full_sections(degrees=tuple(FULL_DEGREES[:6])),
           kernel_elements())
    def test_shifted_difference_is_in_ideal(self, lf, E):
        fam = tripled_full_algebra().family
        L, f = lf
        g = shift(fam, E, f, L)
        verdict = ideal_membership(fam, [(L, f), (vadd(L, E), -1 * g)],
                                   self.box())
        assert isinstance(verdict, InIdeal)

    def test_single_term_is_not_in_ideal(self):
        fam = tripled_full_algebra().family
        L = (1, 1, 0, 0, 0, 0)
        f = ONE / Z
        verdict = ideal_membership(fam, [(L, f)], self.box())
        assert isinstance(verdict, NotInIdeal)
        assert list(verdict.residuals) == [(L, f)]

    def test_square_of_difference_is_in_ideal(self):
        fam = tripled_full_algebra().family
        L = (1, 1, 0, 0, 0, 0)
        E = fam.kernel[0]
        f = ONE + ONE / Z
        g = shift(fam, E, f, L)
        candidate = [(vadd(L, L), f * f),
                     (vadd(vadd(L, L), E), -2 * (f * g)),
                     (vadd(vadd(L, L), vadd(E, E)), g * g)]
        assert isinstance(ideal_membership(fam, candidate, self.box()),
                          InIdeal)

    def test_box_too_small(self):
        fam = tripled_full_algebra().family
        with pytest.raises(BoxTooSmall):
            ideal_membership(fam, [((9, 9, 0, 0, 0, 0), ONE)], self.box())

    def test_empty_candidate(self):
        fam = tripled_full_algebra().family
        assert isinstance(ideal_membership(fam, [], self.box()), InIdeal)


class TestPicGradedAlgebra:
    def test_representative_of_zero(self):
        A = tripled_algebra()
        assert A.rep((0,) * 6) == (0, 0, 0, 0)

    def test_representative_is_linear(self):
        A = tripled_full_algebra()
        box = list(tripled_box())
        for c1, c2 in zip(box[:20], box[5:25]):
            assert A.rep(vadd(c1, c2)) == vadd(A.rep(c1), A.rep(c2))

    def test_representative_has_the_right_class(self):
        for A in (tripled_algebra(), tripled_full_algebra()):
            for c in list(tripled_box())[:40]:
                amb = A.lattice.to_pic.apply(A.rep(c))
                assert A.pic.same_class(amb, c)

    def test_verify_representative(self):
        A = tripled_full_algebra()
        c = basis_to_ambient((0, 1, 1, -1))
        rep = A.rep(c)
        assert A.verify_representative(c, rep)
        shifted = vadd(rep, A.family.kernel[0])
        assert A.verify_representative(c, shifted)
        with pytest.raises(ValueError):
            A.verify_representative(c, vadd(rep, (1, 0, 0, 0, 0, 0)))

    def test_component_dims_match_section_spaces(self):
        X = tripled_line()
        A = tripled_algebra()
        for c in list(tripled_box())[:60]:
            D = A.lattice.divisor_of(A.rep(c))
            assert A.component_dim(c) == section_space(X, D).dim

    def test_hilbert_table(self):
        A = tripled_algebra()
        table = A.hilbert(tripled_box())
        assert table[0] == ((0,) * 6, 1)
        assert len(table) == len(tripled_box())
        assert all(d >= 0 for _, d in table)


class TestPresentation:
    def test_generator_degrees(self):
        P = tripled_presentation()
        pic = tripled_algebra().pic
        assert len(P.generators) == 6
        for (d, _), expected in zip(P.generators, EXPECTED_DEGREES):
            assert pic.same_class(d, basis_to_ambient(expected))

    def test_generator_sections(self):
        P = tripled_presentation()
        assert [str(s) for _, s in P.generators] == EXPECTED_SECTIONS

    def test_single_relation(self):
        P = tripled_presentation()
        assert [str(r) for r in P.relations] == ["T1*T6 - T2*T3 - T4*T5"]

    def test_relation_evaluates_to_zero(self):
        P = tripled_presentation()
        secs = [s for _, s in P.generators]
        assert P.relations[0].substitute(secs).is_zero()

    def test_certificate_row_at_the_relation_degree(self):
        P = tripled_presentation()
        target = list(basis_to_ambient((0, 1, 1, 0)))
        rows = [e for e in P.certificate if e["degree"] == target]
        assert rows == [{"degree": target, "monomials": 3, "dim": 2,
                         "kernel": 1, "ideal_span": 1}]

    def test_certificate_accounts_for_every_kernel(self):
        for entry in tripled_presentation().certificate:
            assert entry["monomials"] - entry["dim"] == entry["kernel"]
            assert entry["ideal_span"] == entry["kernel"]

    def test_plain_line(self):
        P = plain_presentation()
        assert [(d, str(s)) for d, s in P.generators] == [
            ((1,), "1"), ((1,), "z")]
        assert P.relations == ()

    def test_doubled_line(self):
        X = doubled_line()
        P = build_presentation(curve_algebra(X), default_box(X, 2))
        assert [(d, str(s)) for d, s in P.generators] == [
            ((1, 0), "1"), ((0, 1), "1"), ((1, 1), "1/z")]
        assert P.relations == ()

    def test_incomplete_generators_detected(self):
        A = tripled_algebra()
        gens = list(tripled_presentation().generators)[:-1]
        with pytest.raises(GeneratorsIncomplete) as err:
            find_relations(A, gens, tripled_box())
        assert len(err.value.degree) == 6

    def test_variables(self):
        assert tripled_presentation().variables == (
            "T1", "T2", "T3", "T4", "T5", "T6")

    def test_to_json(self):
        data = tripled_presentation().to_json()
        assert sorted(data) == ["certificate", "generators", "grading",
                                "relations"]
        assert data["generators"][4]["section"] == "1/(z - 1)"
        assert data["relations"] == ["T1*T6 - T2*T3 - T4*T5"]
        assert data["grading"] == tripled_algebra().pic.describe()

    def test_immutable(self):
        P = tripled_presentation()
        with pytest.raises(AttributeError):
            P.generators = ()


class TestWeightMonoid:
    def test_tripled_generators_cover_the_class_group(self):
        A = tripled_algebra()
        verdict = weight_monoid_check(A, list(tripled_presentation()
                                              .generators))
        assert isinstance(verdict, Pass)

    def test_index_two_subgroup_fails(self):
        verdict = weight_monoid_check(FGAbelianGroup.free(1), [(2,)])
        assert isinstance(verdict, Fail)
        assert verdict.cokernel["invariant_factors"] == [2]

    def test_torsion_target_passes(self):
        G = FGAbelianGroup(1, [(2,)])
        assert isinstance(weight_monoid_check(G, [(1,)]), Pass)

    def test_trivial_group_with_no_generators(self):
        assert isinstance(weight_monoid_check(FGAbelianGroup(0, []), []),
                          Pass)


def polynomial_ring_presentation(degrees):
    """Free presentation with one variable per degree and no relations."""
    n = len(degrees[0])
    grading = FGAbelianGroup.free(n)
    gens = [(d, None) for d in degrees]
    box = [tuple(0 for _ in range(n))] + list(degrees)
    cert = [{"degree": list(d), "monomials": 1, "dim": 1, "kernel": 0,
             "ideal_span": 0} for d in box]
    return Presentation(grading, gens, (), box, cert)


def tripled_irrelevant_monomials():
    """The covering monomials of the tripled line in the T variables."""
    X = tripled_line()
    dm = tuple(d for d, _ in tripled_presentation().generators)
    out = []
    for t_idx, (t, _) in enumerate(X.special):
        others = [e for k, e in enumerate(X.special) if k != t_idx]
        for kept in itertools.product(*[range(m) for _, m in others]):
            exps = [0] * 6
            for q in X.copies(t):
                exps[COPY_VARIABLE[q]] += 1
            for (s, m), keep in zip(others, kept):
                for i, q in enumerate(X.copies(s)):
                    if i != keep:
                        exps[COPY_VARIABLE[q]] += 1
            out.append(MultiPoly.monomial(tuple(exps), 1, dm))
    return out


class TestFreelyGraded:
    def test_two_variables_of_degree_one(self):
        P = polynomial_ring_presentation([(1,), (1,)])
        T1 = MultiPoly.variable(0, 2, ((1,), (1,)))
        T2 = MultiPoly.variable(1, 2, ((1,), (1,)))
        verdict = freely_graded_check(P, [T1, T2], 4)
        assert isinstance(verdict, Pass)
        assert verdict.details["witnesses"] == (((0, 1),), ((1, 1),))

    def test_tripled_covering(self):
        verdict = freely_graded_check(tripled_presentation(),
                                      tripled_irrelevant_monomials(), 4)
        assert isinstance(verdict, Pass)

    def test_zero_power_bound(self):
        P = polynomial_ring_presentation([(1,)])
        T1 = MultiPoly.variable(0, 1, ((1,),))
        verdict = freely_graded_check(P, [T1], 0)
        assert isinstance(verdict, Inconclusive)

    def test_uncovered_degrees_are_inconclusive(self):
        P = polynomial_ring_presentation([(1, 0), (0, 1)])
        T1 = MultiPoly.variable(0, 2, ((1, 0), (0, 1)))
        verdict = freely_graded_check(P, [T1], 4)
        assert isinstance(verdict, Inconclusive)
        assert verdict.details["index"] == 0


class _ComponentStub:
    """Bare component with just enough surface for the unit search."""

    def __init__(self, basis):
        self.basis = list(basis)
        self.dim = len(self.basis)


class _LaurentStub:
    """Graded ring with invertible elements in every degree."""

    pic = FGAbelianGroup.free(1)

    def pic_component(self, c):
        return _ComponentStub([Z ** c[0]])


class _FatZeroStub:
    """Graded ring whose degree zero part is two dimensional."""

    pic = FGAbelianGroup.free(1)

    def pic_component(self, c):
        if c[0] == 0:
            return _ComponentStub([ONE, Z])
        return _ComponentStub([])


class TestIsPointed:
    def test_tripled(self):
        report = is_pointed(tripled_algebra(), tripled_box())
        assert report["a0_is_field"]
        assert report["units_are_constants"] == "pass"
        assert report["witness"] is None

    def test_zero_box_is_inconclusive(self):
        report = is_pointed(tripled_algebra(), [(0,) * 6])
        assert report["units_are_constants"] == "inconclusive"

    def test_invertible_variable_fails(self):
        report = is_pointed(_LaurentStub(), [(0,), (1,), (-1,)])
        assert report["units_are_constants"] == "fail"
        assert report["witness"] == ((1,), Z)

    def test_fat_degree_zero_is_inconclusive(self):
        report = is_pointed(_FatZeroStub(), [(0,), (1,), (-1,)])
        assert not report["a0_is_field"]
        assert report["units_are_constants"] == "inconclusive"


class TestSeparatedness:
    def test_tripled_irrelevant_elements(self):
        A = tripled_algebra()
        elems = irrelevant_sections(A)
        assert len(elems) == 12
        for c, s in elems:
            assert A.pic_component(c).coordinates_of(s) is not None

    def test_plain_irrelevant_elements(self):
        A = curve_algebra(plain_line())
        assert [(c, str(s)) for c, s in irrelevant_sections(A)] == [
            ((1,), "1"), ((1,), "z")]

    def test_plain_line_is_separated(self):
        A = curve_algebra(plain_line())
        verdict = separatedness_check(A, irrelevant_sections(A))
        assert isinstance(verdict, Separated)
        assert verdict.levels == 2

    def test_tripled_line_is_not_separated(self):
        A = tripled_algebra()
        elems = irrelevant_sections(A)
        verdict = separatedness_check(A, elems)
        assert isinstance(verdict, NotSeparated)
        assert verdict.pair == (0, 1)
        assert verdict.level == 1
        assert str(verdict.witness) == "z^3/(z^3 - 3*z^2 + 3*z - 1)"
        si = elems[0][1]
        sj = elems[1][1]
        assert verdict.shifted == verdict.witness * si * sj

    def test_single_element_is_vacuously_separated(self):
        A = tripled_algebra()
        verdict = separatedness_check(A, irrelevant_sections(A)[:1])
        assert isinstance(verdict, Separated)

    def test_no_levels_is_inconclusive(self):
        A = curve_algebra(plain_line())
        verdict = separatedness_check(A, irrelevant_sections(A), levels=0)
        assert isinstance(verdict, Inconclusive)


class TestHomEquivalence:
    def test_identity(self):
        gens = [(d, s) for d, s in tripled_presentation().generators]
        verdict = graded_homs_equivalent(gens, gens)
        assert isinstance(verdict, Equivalent)
        assert set(verdict.character.values()) == {Fraction(1)}

    def test_global_scaling(self):
        gens = [(d, s) for d, s in tripled_presentation().generators]
        scaled = [(d, s * 2) for d, s in gens]
        verdict = graded_homs_equivalent(gens, scaled)
        assert isinstance(verdict, Equivalent)
        assert set(verdict.character.values()) == {Fraction(2)}

    def test_swapped_basis_is_not_a_character(self):
        mu = [((1,), ONE), ((1,), Z)]
        nu = [((1,), Z), ((1,), ONE)]
        verdict = graded_homs_equivalent(mu, nu)
        assert isinstance(verdict, NotEquivalent)

    def test_relation_violating_ratios(self):
        mu = [((1,), ONE), ((1,), Z)]
        nu = [((1,), ONE * 2), ((1,), Z * 3)]
        verdict = graded_homs_equivalent(mu, nu)
        assert isinstance(verdict, NotEquivalent)

    def test_ratios_on_independent_degrees(self):
        mu = [((1, 0), ONE), ((0, 1), Z)]
        nu = [((1, 0), ONE * 2), ((0, 1), Z * 3)]
        verdict = graded_homs_equivalent(mu, nu)
        assert isinstance(verdict, Equivalent)
        assert verdict.character == {(1, 0): Fraction(2),
                                     (0, 1): Fraction(3)}

    def test_length_mismatch(self):
        with pytest.raises(DegreeMismatch):
            graded_homs_equivalent([((1,), ONE)], [])

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            graded_homs_equivalent([((1,), ONE)], [((2,), ONE)])


class TestUniquenessCrosscheck:
    def test_tripled(self):
        report = uniqueness_crosscheck(tripled_line(),
                                       box=tripled_box(),
                                       basis=explicit_basis())
        assert report == {"classes": 625, "hilbert_equal": True,
                          "iso_verified": True,
                          "witness_multiplicative": True}

    def test_doubled(self):
        report = uniqueness_crosscheck(doubled_line())
        assert report == {"classes": 25, "hilbert_equal": True,
                          "iso_verified": True,
                          "witness_multiplicative": True}

    def test_plain(self):
        report = uniqueness_crosscheck(plain_line(), radius=1)
        assert report == {"classes": 3, "hilbert_equal": True,
                          "iso_verified": True,
                          "witness_multiplicative": True}


class TestTensor:
    def test_two_plain_lines(self):
        P = plain_presentation()
        T = tensor_presentation(P, P)
        assert T.grading.isomorphic(FGAbelianGroup.free(2))
        assert [(d, str(s)) for d, s in T.generators] == [
            ((1, 0), "1"), ((1, 0), "z"), ((0, 1), "1"), ((0, 1), "z")]
        assert T.relations == ()
        assert len(T.box) == len(P.box) ** 2

    def test_certificate_is_multiplicative(self):
        P = plain_presentation()
        A = curve_algebra(plain_line())
        T = tensor_presentation(P, P)
        assert len(T.certificate) == len(P.certificate) ** 2
        for entry in T.certificate:
            d = entry["degree"]
            expect = A.component_dim(d[:1]) * A.component_dim(d[1:])
            assert entry["dim"] == expect
            assert entry["monomials"] - entry["dim"] == entry["kernel"]

    def test_tripled_with_plain(self):
        P = tripled_presentation()
        Q = plain_presentation()
        T = tensor_presentation(P, Q)
        assert len(T.generators) == 8
        assert [str(r) for r in T.relations] == ["T1*T6 - T2*T3 - T4*T5"]
        assert all(d[6:] == (0,) for d, _ in T.generators[:6])
        assert all(d[:6] == ZERO6 for d, _ in T.generators[6:])
        for entry in T.certificate:
            assert entry["monomials"] - entry["dim"] == entry["kernel"]
