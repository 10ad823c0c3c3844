from fractions import Fraction

import pytest

from conftest import fraction_context, spec_context

from cyclohecke.center import (
    ClassPolynomials,
    DualBasis,
    alternative_representatives,
    center,
    center_bases_yz,
    center_conjecture_report,
    class_data,
    commutator_subspace,
    context_for_weight,
    is_central,
    representative_dependence_report,
    spans_equal,
    symmetric_jm_subalgebra,
)
from cyclohecke.group import (
    GroupParams,
    conjugacy_invariant,
    enumerate_group,
    length,
)
from cyclohecke.hecke import t_element
from cyclohecke.linalg import SubspaceBasis
from cyclohecke.seminormal import SeminormalData


def test_class_data():
    infos = class_data(GroupParams(2, 2))
    assert len(infos) == 5
    labels = [i.label for i in infos]
    assert labels == sorted(labels)
    for info in infos:
        assert conjugacy_invariant(info.rep) == info.label
        assert length(info.rep) == info.min_length


@pytest.mark.parametrize("r,n,xi,qs,classes", [
    (2, 2, Fraction(2), [Fraction(1), Fraction(100)], 5),
    (1, 3, Fraction(-1), [Fraction(1)], 3),
    (2, 2, Fraction(-1), [Fraction(1), Fraction(-1)], 5),
    (2, 3, Fraction(-1), [Fraction(1), Fraction(-1)], 10),
])
def test_center_and_cocenter_dimensions(r, n, xi, qs, classes):
    ctx = spec_context(r, n, xi, qs)
    comm = commutator_subspace(ctx)
    elements, zbasis = center(ctx)
    assert comm.rank == ctx.dimension - classes
    assert zbasis.rank == classes
    for z in elements:
        assert is_central(ctx, z)
    # identity is central; [x, x] = 0 membership
    assert zbasis.contains(ctx.one().terms)
    x = ctx.generator(0) * ctx.generator(1)
    assert comm.contains((x * x - x * x).terms)
    assert comm.contains(x.commutator(ctx.generator(1)).terms)


def test_center_commutator_tau_duality():
    # over a semisimple field: z central iff tau(z h) = 0 for all h in [H,H]
    ctx = spec_context(2, 2)
    comm = commutator_subspace(ctx)
    elements, _ = center(ctx)
    from cyclohecke.hecke import HeckeElement
    for z in elements:
        for vec in comm.vectors():
            h = HeckeElement(ctx, vec)
            assert ctx.ring.is_zero((z * h).tau())


def test_symmetric_jm_span():
    ctx = spec_context(1, 3, Fraction(-1), [Fraction(1)])
    sym = symmetric_jm_subalgebra(ctx)
    from cyclohecke.hecke import elementary_symmetric_jm
    assert sym.contains(ctx.one().terms)
    assert sym.contains(elementary_symmetric_jm(ctx, 1).terms)
    _, zbasis = center(ctx)
    assert spans_equal(sym, zbasis)


@pytest.mark.parametrize("r,n,e,kappa,dim", [
    (1, 3, 2, (0,), 3),
    (2, 2, 2, (0, 1), 5),
    (1, 3, 3, (0,), 3),
])
def test_center_conjecture_instances(r, n, e, kappa, dim):
    rep = center_conjecture_report(r, n, e, kappa)
    assert rep["dim_center"] == dim
    assert rep["center_equals_symmetric_jm"]
    assert rep["center_rank_matches_classes"]


def test_center_conjecture_rejects_xi_one():
    with pytest.raises(ValueError):
        center_conjecture_report(1, 2, 1, (0,))


@pytest.fixture(scope="module")
def polys22():
    ctx = spec_context(2, 2)
    return ClassPolynomials(ctx, seminormal=SeminormalData(ctx))


def test_f_delta_on_representatives(polys22):
    ctx = polys22.ctx
    for info in polys22.classes:
        coeffs = polys22.f_polys(info.rep)
        for info2 in polys22.classes:
            want = ctx.ring.one() if info2.label == info.label \
                else ctx.ring.zero()
            assert coeffs[info2.label] == want


def test_g_delta_on_cp_representatives(polys22):
    ctx = polys22.ctx
    for info in polys22.classes:
        wc = polys22.cp_representative(info.label)
        assert conjugacy_invariant(wc) == info.label
        coeffs = polys22.g_polys(wc)
        for info2 in polys22.classes:
            want = ctx.ring.one() if info2.label == info.label \
                else ctx.ring.zero()
            assert coeffs[info2.label] == want


def test_residual_membership_all_elements(polys22):
    for w in enumerate_group(polys22.ctx.params):
        polys22.f_polys(w, check_residual=True)
        polys22.g_polys(w, check_residual=True)


def test_geck_pfeiffer_zero_one_on_minimal_coxeter():
    # r=1: on minimal (Coxeter-parabolic) elements f is a 0/1 indicator
    ctx = spec_context(1, 3)
    polys = ClassPolynomials(ctx, seminormal=SeminormalData(ctx))
    for info in polys.classes:
        coeffs = polys.f_polys(info.rep)
        values = sorted(str(v) for v in coeffs.values())
        assert values == ["0", "0", "1"]


def test_symbolic_class_polynomials_integral():
    ctx = fraction_context(2, 2)
    polys = ClassPolynomials(ctx, seminormal=SeminormalData(ctx))
    for w in enumerate_group(ctx.params):
        for val in polys.f_polys(w, check_residual=False).values():
            val.as_laurent()
        for val in polys.g_polys(w, check_residual=False).values():
            val.as_laurent()


def test_dual_basis_and_yz():
    ctx = spec_context(2, 2)
    polys = ClassPolynomials(ctx, seminormal=SeminormalData(ctx))
    dual = DualBasis(ctx)
    D = ctx.dimension
    # duality and the trace identity sum_w tau(T_w T_w^vee) = |W|
    total = ctx.ring.zero()
    for i, w in enumerate(dual.order):
        assert (dual.t(w) * dual.duals[i]).tau() == ctx.ring.one()
        total = total + (dual.t(w) * dual.duals[i]).tau()
    assert total == ctx.ring.from_int(D)
    ys, zs = center_bases_yz(ctx, polys, dual)
    for fam in (ys, zs):
        basis = SubspaceBasis(ctx.ring)
        for elt in fam.values():
            assert is_central(ctx, elt)
            basis.add(elt.terms)
        assert basis.rank == len(polys.classes)


def test_alternative_representatives_experiment():
    params = GroupParams(2, 2)
    alts = alternative_representatives(params)
    assert len(alts) == 5
    ctx = spec_context(2, 2)
    polys = ClassPolynomials(ctx, seminormal=SeminormalData(ctx))
    report = representative_dependence_report(ctx, polys)
    assert "agrees_everywhere" in report
    assert isinstance(report["differences"], list)


def test_symbolic_specialization_consistency():
    ctx_sym = fraction_context(2, 2)
    polys_sym = ClassPolynomials(ctx_sym, seminormal=SeminormalData(ctx_sym))
    words = list(enumerate_group(GroupParams(2, 2)))
    sym_vals = {w: polys_sym.f_polys(w, check_residual=False) for w in words}
    xi, qs = Fraction(3), [Fraction(2), Fraction(49)]
    ctx_sp = spec_context(2, 2, xi, qs)
    polys_sp = ClassPolynomials(ctx_sp, seminormal=SeminormalData(ctx_sp))
    values = (xi,) + tuple(qs)
    for w in words:
        direct = polys_sp.f_polys(w, check_residual=False)
        for label, val in sym_vals[w].items():
            assert val.as_laurent().specialize(values, Fraction(1)) \
                == direct[label]


def test_context_for_weight_cyclotomic():
    ctx = context_for_weight(1, 2, 3, (0,))
    total = ctx.ring.zero()
    power = ctx.ring.one()
    for _ in range(3):
        total = total + power
        power = power * ctx.xi
    assert ctx.ring.is_zero(total)


def test_cocenter_basis_ranks():
    # [H,H] + span{T_{w_C}} fills the algebra, and each T_{w_C} adds rank;
    # the starred family is a basis of the cocenter as well
    for xi, qs in [(Fraction(2), [Fraction(1), Fraction(100)]),
                   (Fraction(-1), [Fraction(1), Fraction(-1)])]:
        ctx = spec_context(2, 2, xi, qs)
        infos = class_data(ctx.params)
        for starred in (False, True):
            basis = commutator_subspace(ctx)
            start = basis.rank
            for info in infos:
                elt = t_element(ctx, info.rep)
                if starred:
                    elt = elt.star()
                assert basis.add(elt.terms)
            assert basis.rank == start + len(infos) == ctx.dimension
