r"""
Seminormal structure of the split semisimple cyclotomic Hecke algebra.

Everything here assumes the semisimplicity criterion

    prod_{k=1}^{n} (1 + xi + .. + xi^{k-1})
      * prod_{1 <= l < l' <= r, -n < k < n} (xi^k Q_l - Q_{l'})   is a unit,

which is re-checked on construction, never trusted.  The primitive
idempotents are built from Jucys-Murphy interpolation:

    F_t = prod_k prod_{c in C(k), c != c_k(t)} (L_k - c) / (c_k(t) - c),

where C(k) collects the possible contents of entry k over all shapes.  The
seminormal basis is f_{st} = F_s m_{st} F_t with multiplication rule
f_{st} f_{uv} = delta_{tu} gamma_t f_{sv}; the dual version g_{st} uses the
n-basis.  Schur elements arise as s_lambda = 1 / tau(F_t), independent of
the choice of t, and characters as chi_lambda(h) = s_lambda tau(h F_lambda).

The central idempotent F_lambda = sum_t F_t is recovered a second way, as an
explicit symmetric polynomial in the Jucys-Murphy elements: for each other
shape mu an elementary symmetric function value separates the multisets of
contents, and the normalized product of the separators evaluated at
(L_1, .., L_n) reproduces F_lambda exactly.
"""

from __future__ import annotations

from .hecke import HeckeError, elementary_symmetric_jm, m_basis, n_basis
from .rings import elementary_symmetric
from .tableaux import (
    content_vector,
    enumerate_multipartitions,
    standard_tableaux,
    t_row,
)


class NotSemisimpleError(ArithmeticError):
    pass


def semisimplicity_witness(ctx):
    """None when the criterion product is a unit, else a description of a
    vanishing factor."""
    ring, xi = ctx.ring, ctx.xi
    if not ring.is_field:
        raise HeckeError("semisimplicity test needs a field coefficient ring")
    one = ring.one()
    for k in range(1, ctx.params.n + 1):
        total = ring.zero()
        power = one
        for _ in range(k):
            total = total + power
            power = power * xi
        if ring.is_zero(total):
            return f"1 + xi + .. + xi^{k - 1} = 0"
    r, n = ctx.params.r, ctx.params.n
    for l in range(1, r + 1):
        for lp in range(l + 1, r + 1):
            for k in range(-(n - 1), n):
                factor = xi ** k * ctx.qs[l - 1] - ctx.qs[lp - 1]
                if ring.is_zero(factor):
                    return f"xi^{k} Q{l} - Q{lp} = 0"
    return None


def check_semisimple(ctx):
    """(bool, witness-or-None) for the displayed criterion product."""
    witness = semisimplicity_witness(ctx)
    return witness is None, witness


class SeminormalData:
    """Per-context lazy store of seminormal structure."""

    def __init__(self, ctx):
        ok, witness = check_semisimple(ctx)
        if not ok:
            raise NotSemisimpleError(f"parameters are not semisimple: {witness}")
        self.ctx = ctx
        self.shapes = enumerate_multipartitions(ctx.params.r, ctx.params.n)
        self.std = {shape: standard_tableaux(shape) for shape in self.shapes}
        self.content_sets = self._content_sets()
        self._ft = {}
        self._f = {}
        self._g = {}
        self._gamma = {}
        self._gamma_prime = {}
        self._flam = {}
        self._schur = {}
        self._mdiag = {}
        self._ndiag = {}

    # -- raw combinatorial data ------------------------------------------

    def _content_sets(self):
        n = self.ctx.params.n
        sets = [[] for _ in range(n)]
        for shape in self.shapes:
            for t in self.std[shape]:
                cv = content_vector(t, self.ctx.xi, self.ctx.qs)
                for k in range(n):
                    if cv[k] not in sets[k]:
                        sets[k].append(cv[k])
        return sets

    def contents(self, t):
        return content_vector(t, self.ctx.xi, self.ctx.qs)

    # -- idempotents -------------------------------------------------------

    def F(self, t):
        key = (t.shape, t.rows)
        cached = self._ft.get(key)
        if cached is not None:
            return cached
        ctx = self.ctx
        cv = self.contents(t)
        out = ctx.one()
        for k in range(1, ctx.params.n + 1):
            jm = ctx.jm(k)
            for c in self.content_sets[k - 1]:
                if c == cv[k - 1]:
                    continue
                denom = cv[k - 1] - c
                if ctx.ring.is_zero(denom):
                    raise NotSemisimpleError("content collision under semisimplicity")
                out = (jm - ctx.one().scale(c)) * out
                out = out.scale(ctx.ring.invert(denom))
        self._ft[key] = out
        return out

    def F_lambda(self, shape):
        cached = self._flam.get(shape)
        if cached is None:
            cached = self.ctx.zero()
            for t in self.std[shape]:
                cached = cached + self.F(t)
            self._flam[shape] = cached
        return cached

    # -- seminormal bases ----------------------------------------------------

    def f(self, s, t):
        key = (s.shape, s.rows, t.rows)
        cached = self._f.get(key)
        if cached is None:
            cached = self.F(s) * m_basis(self.ctx, s, t, self._mdiag) * self.F(t)
            self._f[key] = cached
        return cached

    def g(self, s, t):
        key = (s.shape, s.rows, t.rows)
        cached = self._g.get(key)
        if cached is None:
            cached = self.F(s) * n_basis(self.ctx, s, t, self._ndiag) * self.F(t)
            self._g[key] = cached
        return cached

    def _diag_scalar(self, elt, squared):
        """The scalar gamma with squared == gamma * elt."""
        ring = self.ctx.ring
        if elt.is_zero():
            raise NotSemisimpleError("vanishing diagonal seminormal element")
        idx = next(iter(elt.terms))
        gamma = ring.div(squared.terms.get(idx, ring.zero()), elt.terms[idx])
        if squared != elt.scale(gamma):
            raise NotSemisimpleError("diagonal element is not quasi-idempotent")
        return gamma

    def gamma(self, t):
        key = (t.shape, t.rows)
        cached = self._gamma.get(key)
        if cached is None:
            ftt = self.f(t, t)
            cached = self._diag_scalar(ftt, ftt * ftt)
            if self.ctx.ring.is_zero(cached):
                raise NotSemisimpleError("gamma_t vanished")
            self._gamma[key] = cached
        return cached

    def gamma_prime(self, t):
        key = (t.shape, t.rows)
        cached = self._gamma_prime.get(key)
        if cached is None:
            gtt = self.g(t, t)
            cached = self._diag_scalar(gtt, gtt * gtt)
            if self.ctx.ring.is_zero(cached):
                raise NotSemisimpleError("gamma'_t vanished")
            self._gamma_prime[key] = cached
        return cached

    # -- Schur elements and characters ---------------------------------------

    def schur(self, shape):
        cached = self._schur.get(shape)
        if cached is None:
            ring = self.ctx.ring
            values = []
            for t in self.std[shape]:
                tf = self.F(t).tau()
                if ring.is_zero(tf):
                    raise NotSemisimpleError("tau(F_t) vanished")
                values.append(ring.div(ring.one(), tf))
            first = values[0]
            if any(not (v == first) for v in values[1:]):
                raise NotSemisimpleError("Schur element depends on the tableau")
            cached = first
            self._schur[shape] = cached
        return cached

    def character(self, shape, h):
        """chi_lambda(h) = s_lambda * tau(h F_lambda)."""
        return self.schur(shape) * (h * self.F_lambda(shape)).tau()

    def character_via_regular_trace(self, shape, h):
        """Trace of right multiplication by h F_lambda over dim of the simple."""
        ctx = self.ctx
        x = h * self.F_lambda(shape)
        trace = ctx.ring.zero()
        for idx in ctx.basis_indices():
            prod = ctx.from_index(idx) * x
            trace = trace + prod.terms.get(idx, ctx.ring.zero())
        dim = len(self.std[shape])
        return ctx.ring.div(trace, ctx.ring.from_int(dim))

    # -- the symmetric-polynomial realization of F_lambda ----------------------

    def separating_exponent(self, lam, mu):
        """Least m with e_m separating the content multisets of lam and mu."""
        ring = self.ctx.ring
        cv_l = list(content_vector(t_row(lam), self.ctx.xi, self.ctx.qs))
        cv_m = list(content_vector(t_row(mu), self.ctx.xi, self.ctx.qs))
        for m in range(1, self.ctx.params.n + 1):
            a = elementary_symmetric(cv_l, m, ring.one())
            b = elementary_symmetric(cv_m, m, ring.one())
            if not ring.is_zero(a - b):
                return m, a, b
        raise NotSemisimpleError(
            "no separating elementary symmetric exponent; inconsistent data")

    def central_idempotent_via_symmetric(self, lam):
        """g_lambda(L_1, .., L_n): equals F_lambda as an algebra element."""
        ctx = self.ctx
        out = ctx.one()
        esym_cache = {}
        for mu in self.shapes:
            if mu == lam:
                continue
            m, a, b = self.separating_exponent(lam, mu)
            em = esym_cache.get(m)
            if em is None:
                em = elementary_symmetric_jm(ctx, m)
                esym_cache[m] = em
            out = out * (em - ctx.one().scale(b))
            out = out.scale(ctx.ring.invert(a - b))
        return out

    # -- resolution of identity ------------------------------------------------

    def resolution_of_identity(self):
        total = self.ctx.zero()
        for shape in self.shapes:
            total = total + self.F_lambda(shape)
        return total
