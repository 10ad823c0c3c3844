r"""
The acceptance battery: exhaustive desk-scale verification of the group
layer, the Hecke relations, seminormal structure, center/cocenter
dimensions, class polynomials, center-conjecture instances and KLR blocks.

Each criterion returns a list of named checks; the CLI ``selftest``
subcommand and the pytest acceptance module both run these.  ``quick``
trims the parameter list to (r, n) <= (2, 3); ``full`` runs everything.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .group import (
    GroupParams,
    bm_normal_form,
    conjugacy_invariant,
    enumerate_classes,
    enumerate_group,
    eval_word,
    is_alpha_form,
    length,
    phi_bijection_full,
)
from .hecke import AlgebraContext, t_element
from .rings import RingSpec
from .tableaux import enumerate_multipartitions


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def as_json(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def _spec_ctx(r, n, xi=Fraction(2), qs=None):
    if qs is None:
        qs = [Fraction(100) ** (l - 1) for l in range(1, r + 1)]
    ring = RingSpec.specialized(xi, qs)
    return AlgebraContext(GroupParams(r, n), ring,
                          ring.xi(), [ring.q(l) for l in range(1, r + 1)])


def _laurent_ctx(r, n):
    ring = RingSpec.laurent(r)
    return AlgebraContext(GroupParams(r, n), ring,
                          ring.xi(), [ring.q(l) for l in range(1, r + 1)])


def _fraction_ctx(r, n):
    ring = RingSpec.fraction(r)
    return AlgebraContext(GroupParams(r, n), ring,
                          ring.xi(), [ring.q(l) for l in range(1, r + 1)])


# -- criterion 1: group layer exactness ----------------------------------------

def criterion_group_exactness(level="full"):
    sizes = [(2, 2), (3, 2), (2, 3)]
    if level == "full":
        sizes += [(3, 3), (2, 4)]
    checks = []
    for r, n in sizes:
        params = GroupParams(r, n)
        dist = enumerate_group(params)
        ok_count = len(dist) == params.order
        ok_len = all(length(w) == d for w, d in dist.items())
        checks.append(Check(f"({r},{n}) element count = r^n n!", ok_count,
                            f"{len(dist)} vs {params.order}"))
        checks.append(Check(f"({r},{n}) BM length = BFS distance, all elements",
                            ok_len))
        ok_bm = all(eval_word(params, bm_normal_form(w).word) == w for w in dist)
        checks.append(Check(f"({r},{n}) BM words reconstruct", ok_bm))
        classes = enumerate_classes(params)
        expected = len(enumerate_multipartitions(r, n))
        checks.append(Check(f"({r},{n}) class count = #multipartitions",
                            len(classes) == expected,
                            f"{len(classes)} vs {expected}"))
        ok_beta = True
        detail = ""
        for cls in classes:
            minimal = min(length(w) for w in cls)
            betas = [w for w in cls
                     if (a := is_alpha_form(w)) is not None and a.is_bipartition()]
            if len(betas) != 1 or length(betas[0]) != minimal:
                ok_beta = False
                detail = f"class {conjugacy_invariant(cls[0])}"
                break
            beta = is_alpha_form(betas[0])
            if phi_bijection_full(params, beta) != conjugacy_invariant(betas[0]):
                ok_beta = False
                detail = "phi mismatch"
                break
        checks.append(Check(
            f"({r},{n}) unique minimal w_beta per class, phi-compatible",
            ok_beta, detail))
    return checks


# -- criterion 2: reduction certificates ----------------------------------------

def criterion_reduction(level="full"):
    from .reduction import reduce_to_minimal, verify_certificate
    sizes = [(2, 3), (3, 2)]
    if level == "full":
        sizes.append((3, 3))
    checks = []
    for r, n in sizes:
        params = GroupParams(r, n)
        classes = enumerate_classes(params)
        all_ok = True
        detail = ""
        steps = 0
        for cls in classes:
            minimal = min(length(w) for w in cls)
            for w in cls:
                cert = reduce_to_minimal(w, canonical=True)
                ok, why = verify_certificate(cert)
                if not ok:
                    all_ok, detail = False, why
                    break
                if cert.terminal_length != minimal:
                    all_ok = False
                    detail = f"terminal length {cert.terminal_length} vs {minimal}"
                    break
                steps += len(cert.steps)
            if not all_ok:
                break
        checks.append(Check(
            f"({r},{n}) certified reduction of every element", all_ok,
            detail or f"{steps} admissible steps"))
    return checks


# -- criterion 3: Hecke relations and dimension ----------------------------------

def _relation_checks(ctx, tag, rng, trials):
    checks = []
    n = ctx.params.n
    T = [ctx.generator(i) for i in range(n)]
    one = ctx.one()
    prod = one
    for q in ctx.qs:
        prod = prod * (T[0] - one.scale(q))
    checks.append(Check(f"{tag} cyclotomic relation", prod.is_zero()))
    ok = all(((T[i] - one.scale(ctx.xi)) * (T[i] + one)).is_zero()
             for i in range(1, n))
    checks.append(Check(f"{tag} quadratic relations", ok))
    ok = True
    if n >= 2:
        ok = T[0] * T[1] * T[0] * T[1] == T[1] * T[0] * T[1] * T[0]
    for i in range(1, n - 1):
        ok = ok and T[i] * T[i + 1] * T[i] == T[i + 1] * T[i] * T[i + 1]
    for i in range(n):
        for j in range(i + 2, n):
            ok = ok and T[i] * T[j] == T[j] * T[i]
    checks.append(Check(f"{tag} braid and commutation relations", ok))
    jms = ctx.jm_all()
    ok = all((jms[a] * jms[b] == jms[b] * jms[a])
             for a in range(n) for b in range(a + 1, n))
    checks.append(Check(f"{tag} Jucys-Murphy elements commute", ok))
    idxs = list(ctx.basis_indices())
    closure_ok = True
    assoc_ok = True
    for _ in range(trials):
        a = ctx.from_index(rng.choice(idxs))
        b = ctx.from_index(rng.choice(idxs))
        c = ctx.from_index(rng.choice(idxs))
        ab = a * b
        closure_ok = closure_ok and all(
            all(0 <= x < ctx.params.r for x in cc) for cc, _ in ab.terms)
        assoc_ok = assoc_ok and (ab * c == a * (b * c))
        if not (closure_ok and assoc_ok):
            break
    checks.append(Check(f"{tag} straightening closure on random products",
                        closure_ok))
    checks.append(Check(f"{tag} associativity on {trials} random triples",
                        assoc_ok))
    return checks


def criterion_hecke_relations(level="full", seed=0, trials=100):
    rng = random.Random(seed)
    checks = []
    for r, n in [(2, 2), (3, 2), (2, 3)]:
        checks += _relation_checks(_laurent_ctx(r, n), f"({r},{n}) symbolic",
                                   rng, trials if level == "full" else 25)
    if level == "full":
        checks += _relation_checks(_spec_ctx(2, 4), "(2,4) specialized",
                                   rng, trials)
    return checks


# -- criterion 4: seminormal suite ------------------------------------------------

def criterion_seminormal(level="full"):
    from .center import class_data
    from .linalg import invert_matrix
    from .seminormal import SeminormalData
    checks = []
    for r, n in [(2, 2), (1, 3)]:
        ctx = _spec_ctx(r, n)
        snd = SeminormalData(ctx)
        checks.append(Check(f"({r},{n}) resolution of identity sum F_t = 1",
                            snd.resolution_of_identity() == ctx.one()))
        all_t = [t for shape in snd.shapes for t in snd.std[shape]]
        ok = all((snd.F(t) * snd.F(t) == snd.F(t)) for t in all_t)
        ok = ok and all((snd.F(s) * snd.F(t)).is_zero()
                        for i, s in enumerate(all_t) for t in all_t[i + 1:])
        checks.append(Check(f"({r},{n}) F_t orthogonal idempotents", ok))
        ok = True
        for shape in snd.shapes:
            stds = snd.std[shape]
            for s in stds:
                for t in stds:
                    for u in stds:
                        for v in stds:
                            lhs = snd.f(s, t) * snd.f(u, v)
                            if t.rows == u.rows:
                                ok = ok and lhs == snd.f(s, v).scale(snd.gamma(t))
                            else:
                                ok = ok and lhs.is_zero()
        checks.append(Check(
            f"({r},{n}) f_st f_uv = delta_tu gamma_t f_sv exhaustively", ok))
        ok = True
        for shape in snd.shapes:
            s_lam = snd.schur(shape)
            for s in snd.std[shape]:
                for t in snd.std[shape]:
                    val = snd.f(s, t).tau()
                    want = ctx.ring.div(snd.gamma(t), s_lam) \
                        if s.rows == t.rows else ctx.ring.zero()
                    ok = ok and val == want
        checks.append(Check(f"({r},{n}) tau(f_st) = delta_st gamma_t / s_lambda",
                            ok))
        ok = all(snd.central_idempotent_via_symmetric(shape)
                 == snd.F_lambda(shape) for shape in snd.shapes)
        checks.append(Check(
            f"({r},{n}) F_lambda realized as symmetric JM polynomial", ok))
        classes = class_data(ctx.params)
        matrix = [
            [snd.character(shape, t_element(ctx, info.rep)) for info in classes]
            for shape in snd.shapes
        ]
        try:
            invert_matrix(ctx.ring, matrix)
            ok = True
        except ArithmeticError:
            ok = False
        checks.append(Check(f"({r},{n}) character matrix invertible", ok))
    return checks


# -- criterion 5: center and cocenter dimensions -----------------------------------

def criterion_center_dims(level="full"):
    from .center import center, commutator_subspace
    cases = [
        ("semisimple", 1, 3, Fraction(2), [Fraction(1)]),
        ("semisimple", 2, 2, Fraction(2), [Fraction(1), Fraction(100)]),
        ("non-semisimple", 1, 3, Fraction(-1), [Fraction(1)]),
        ("non-semisimple", 2, 2, Fraction(-1), [Fraction(1), Fraction(-1)]),
    ]
    if level == "full":
        cases += [
            ("semisimple", 1, 4, Fraction(2), [Fraction(1)]),
            ("semisimple", 2, 3, Fraction(2), [Fraction(1), Fraction(100)]),
            ("non-semisimple", 1, 4, Fraction(-1), [Fraction(1)]),
            ("non-semisimple", 2, 3, Fraction(-1), [Fraction(1), Fraction(-1)]),
        ]
    checks = []
    for tag, r, n, xi, qs in cases:
        ctx = _spec_ctx(r, n, xi, qs)
        expected = len(enumerate_multipartitions(r, n))
        comm = commutator_subspace(ctx)
        _, zbasis = center(ctx)
        checks.append(Check(
            f"({r},{n}) {tag} xi={xi}: dim Z = #classes",
            zbasis.rank == expected, f"{zbasis.rank} vs {expected}"))
        checks.append(Check(
            f"({r},{n}) {tag} xi={xi}: rank [H,H] = dim - #classes",
            comm.rank == ctx.dimension - expected,
            f"{comm.rank} vs {ctx.dimension - expected}"))
    return checks


# -- criterion 6: class polynomials --------------------------------------------------

def criterion_class_polynomials(level="full"):
    from .center import ClassPolynomials, DualBasis, center_bases_yz, is_central
    from .linalg import SubspaceBasis
    from .seminormal import SeminormalData
    checks = []
    for r, n in [(2, 2), (1, 3)]:
        ctx = _spec_ctx(r, n)
        polys = ClassPolynomials(ctx, seminormal=SeminormalData(ctx))
        ok = True
        for info in polys.classes:
            coeffs = polys.f_polys(info.rep)
            for info2 in polys.classes:
                want = ctx.ring.one() if info2.label == info.label \
                    else ctx.ring.zero()
                ok = ok and coeffs[info2.label] == want
        checks.append(Check(f"({r},{n}) f on representatives is a delta", ok))
        ok = True
        for w in enumerate_group(ctx.params):
            try:
                polys.f_polys(w, check_residual=True)
            except AssertionError:
                ok = False
                break
        checks.append(Check(
            f"({r},{n}) residual T_w - sum f T_wC lies in [H,H], all w", ok))
        if r == 1 and n == 3:
            dual = DualBasis(ctx)
            ys, zs = center_bases_yz(ctx, polys, dual)
            okc = all(is_central(ctx, y) for y in ys.values()) and \
                all(is_central(ctx, z) for z in zs.values())
            sy = SubspaceBasis(ctx.ring)
            for y in ys.values():
                sy.add(y.terms)
            sz = SubspaceBasis(ctx.ring)
            for z in zs.values():
                sz.add(z.terms)
            expected = len(polys.classes)
            checks.append(Check(
                f"({r},{n}) y_C and z_C central bases of the center",
                okc and sy.rank == expected and sz.rank == expected))
    # symbolic integrality
    sym_sizes = [(2, 2)] if level != "full" else [(2, 2), (3, 2)]
    for r, n in sym_sizes:
        ctx = _fraction_ctx(r, n)
        polys = ClassPolynomials(ctx, seminormal=SeminormalData(ctx))
        ok = True
        try:
            for w in enumerate_group(ctx.params):
                for val in polys.f_polys(w, check_residual=False).values():
                    val.as_laurent()
                for val in polys.g_polys(w, check_residual=False).values():
                    val.as_laurent()
        except ArithmeticError:
            ok = False
        checks.append(Check(
            f"({r},{n}) symbolic f and g are denominator-free Laurent", ok))
        if (r, n) == (2, 2):
            from .center import DualBasis, center_bases_yz, is_central
            dual = DualBasis(ctx)
            ys, zs = center_bases_yz(ctx, polys, dual)
            okc = all(is_central(ctx, y) for y in ys.values()) and \
                all(is_central(ctx, z) for z in zs.values())
            from .linalg import SubspaceBasis
            sy = SubspaceBasis(ctx.ring)
            sz = SubspaceBasis(ctx.ring)
            for y in ys.values():
                sy.add(y.terms)
            for z in zs.values():
                sz.add(z.terms)
            expected = len(polys.classes)
            checks.append(Check(
                "(2,2) symbolic y_C and z_C central bases",
                okc and sy.rank == expected and sz.rank == expected))
    return checks


# -- criterion 7: center conjecture instances ------------------------------------------

def criterion_center_conjecture(level="full"):
    from .center import center_conjecture_report
    cases = [(1, 3, 2, (0,)), (2, 2, 2, (0, 1)), (1, 3, 3, (0,))]
    if level == "full":
        cases += [(1, 4, 2, (0,)), (2, 3, 2, (0, 1))]
    checks = []
    for r, n, e, kappa in cases:
        rep = center_conjecture_report(r, n, e, kappa)
        checks.append(Check(
            f"(r={r},n={n},e={e}) center = symmetric JM polynomials, "
            f"dim = #classes",
            rep["center_equals_symmetric_jm"] and
            rep["center_rank_matches_classes"],
            f"dims {rep['dim_center']}/{rep['dim_symmetric_jm']}"
            f" classes {rep['classes']}"))
    return checks


# -- criterion 8: KLR blocks ---------------------------------------------------------

def criterion_klr(level="full"):
    from .center import context_for_weight, is_central
    from .klr import KLRBlocks, WeightData
    checks = []
    cases = [(1, 3, 2, (0,)), (2, 2, 2, (0, 1))]
    for r, n, e, kappa in cases:
        ctx = context_for_weight(r, n, e, kappa)
        blocks = KLRBlocks(ctx, WeightData(e, kappa))
        _, klr_checks = blocks.report()
        ok = all(c[1] for c in klr_checks)
        detail = "; ".join(c[0] for c in klr_checks if not c[1])
        checks.append(Check(f"(r={r},n={n},e={e}) KLR block suite", ok, detail))
        okz = True
        for label in blocks.block_labels():
            for i in range(e):
                z = blocks.z(i, label)
                okz = okz and is_central(ctx, z)
                okz = okz and z == blocks.z_recomputed_reversed(i, label)
        checks.append(Check(
            f"(r={r},n={n},e={e}) z(i,alpha) central and enumeration-invariant",
            okz))
    return checks


# -- criterion 9: cross-oracle consistency ----------------------------------------------

def criterion_cross_oracles(level="full", seed=0):
    from .center import ClassPolynomials, class_data, commutator_subspace
    from .linalg import solve
    from .seminormal import SeminormalData, check_semisimple
    rng = random.Random(seed)
    checks = []
    # characters via tau versus regular trace
    for r, n in [(2, 2), (1, 3)]:
        ctx = _spec_ctx(r, n)
        snd = SeminormalData(ctx)
        samples = [ctx.one(), ctx.generator(0)]
        if n >= 2:
            samples.append(ctx.generator(1) * ctx.generator(0))
        idxs = list(ctx.basis_indices())
        samples += [ctx.from_index(rng.choice(idxs)) for _ in range(3)]
        ok = all(
            snd.character(shape, h) == snd.character_via_regular_trace(shape, h)
            for shape in snd.shapes for h in samples
        )
        checks.append(Check(
            f"({r},{n}) characters: tau formula = regular trace", ok))
    # symbolic class polynomials specialize correctly
    ctx_sym = _fraction_ctx(2, 2)
    polys_sym = ClassPolynomials(ctx_sym, seminormal=SeminormalData(ctx_sym))
    words = list(enumerate_group(GroupParams(2, 2)))
    sym_vals = {w: polys_sym.f_polys(w, check_residual=False) for w in words}
    ok = True
    found = 0
    while found < 3:
        xi = Fraction(rng.randint(2, 7))
        qs = [Fraction(rng.randint(1, 4)), Fraction(rng.randint(5, 50)) ** 2]
        ctx_sp = _spec_ctx(2, 2, xi, qs)
        if not check_semisimple(ctx_sp)[0]:
            continue
        found += 1
        polys_sp = ClassPolynomials(ctx_sp, seminormal=SeminormalData(ctx_sp))
        values = (xi,) + tuple(qs)
        for w in words:
            direct = polys_sp.f_polys(w, check_residual=False)
            for label, val in sym_vals[w].items():
                lau = val.as_laurent()
                evaluated = lau.specialize(values, Fraction(1))
                ok = ok and evaluated == direct[label]
    checks.append(Check(
        "(2,2) symbolic f specialize to directly computed values "
        "(3 random specializations)", ok))
    # r=1 class polynomials against a commutator-membership solver on S_3
    ctx = _spec_ctx(1, 3)
    polys = ClassPolynomials(ctx, seminormal=SeminormalData(ctx))
    comm = commutator_subspace(ctx)
    classes = class_data(ctx.params)
    reduced_reps = {
        info.label: comm.reduce(t_element(ctx, info.rep).terms)
        for info in classes
    }
    ok = True
    for w in enumerate_group(ctx.params):
        target = comm.reduce(t_element(ctx, w).terms)
        rows_keys = set(target)
        for vec in reduced_reps.values():
            rows_keys |= set(vec)
        matrix = []
        rhs = []
        for idx in sorted(rows_keys):
            matrix.append({
                label: vec[idx] for label, vec in reduced_reps.items()
                if idx in vec
            })
            rhs.append(target.get(idx, ctx.ring.zero()))
        sol = solve(ctx.ring, matrix, rhs)
        chars = polys.f_polys(w, check_residual=False)
        for info in classes:
            ok = ok and sol.get(info.label, ctx.ring.zero()) == chars[info.label]
    checks.append(Check(
        "(1,3) class polynomials agree with the independent "
        "commutator-membership solver", ok))
    return checks


CRITERIA = [
    ("1 group exactness", criterion_group_exactness),
    ("2 reduction certificates", criterion_reduction),
    ("3 hecke relations", criterion_hecke_relations),
    ("4 seminormal suite", criterion_seminormal),
    ("5 center/cocenter dimensions", criterion_center_dims),
    ("6 class polynomials", criterion_class_polynomials),
    ("7 center conjecture instances", criterion_center_conjecture),
    ("8 klr blocks", criterion_klr),
    ("9 cross-oracle consistency", criterion_cross_oracles),
]


def run_acceptance(level="full", only=None):
    """Run (a subset of) the acceptance criteria; returns [(name, [Check])]."""
    results = []
    for name, fn in CRITERIA:
        if only is not None and not any(str(k) in name for k in only):
            continue
        results.append((name, fn(level)))
    return results
