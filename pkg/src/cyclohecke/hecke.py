r"""
The cyclotomic Hecke algebra of $G(r,1,n)$ on its Ariki-Koike basis.

Generators $T_0, T_1, \dots, T_{n-1}$ over a commutative ring with units
$\xi, Q_1, \dots, Q_r$, subject to

    (T_0 - Q_1) .. (T_0 - Q_r) = 0,        T_0 T_1 T_0 T_1 = T_1 T_0 T_1 T_0,
    (T_i - xi)(T_i + 1) = 0,               braid and commutation relations.

Jucys-Murphy elements: $\mathcal{L}_m = \xi^{1-m} T_{m-1} \cdots T_1 T_0
T_1 \cdots T_{m-1}$, so $\mathcal{L}_1 = T_0$.  Elements are stored as sparse
maps on the Ariki-Koike basis $\{\mathcal{L}^c T_w\}$ with $0 \le c_i < r$
and $w \in \mathfrak{S}_n$; multiplication is division-free straightening.

The straightening rules, writing $L = \mathcal{L}_i$, $M = \mathcal{L}_{i+1}$:

    T_i L^a M^b = (swap of exponents) T_i  +  corrections:
      b > a:  +(xi-1) * L^{a+p} M^{b-p},      p = 0 .. b-a-1,
      a > b:  -(xi-1) * L^{b+q} M^{a-q},      q = 0 .. a-b-1,

which keeps every exponent below max(a, b); together with the cyclotomic
reduction of $\mathcal{L}_1^r = e_1(Q)\mathcal{L}_1^{r-1} - e_2(Q)
\mathcal{L}_1^{r-2} + \cdots$ this makes multiplication by a generator on
the left overflow-free.  Right multiplication by $T_0$ commutes
$\mathcal{L}_1$ leftwards through $T_w$; when the travelling element lands
on a coordinate already at exponent $r-1$, the offending factor is peeled
off and re-applied through its generator word on the left.

A second basis $\{T_w : w \in W_n\}$, one fixed reduced word per group
element, is available through :func:`t_element`; two reduced words of the
same element give products that differ only by shorter non-Coxeter terms,
so the collection is again a basis.
"""

from __future__ import annotations

import itertools

from .group import (
    GroupParams,
    bm_word,
    coxeter_word,
    perm_compose,
    perm_identity,
    perm_transposition,
)
from .rings import elementary_symmetric


class HeckeError(ValueError):
    pass


class AlgebraContext:
    """Immutable bundle of (r, n), coefficient ring and parameters."""

    def __init__(self, params, ring, xi, qs):
        if not isinstance(params, GroupParams):
            params = GroupParams(*params)
        qs = tuple(qs)
        if len(qs) != params.r:
            raise HeckeError("need one cyclotomic parameter per color")
        ring.check(xi)
        for q in qs:
            ring.check(q)
        if ring.is_zero(xi) or any(ring.is_zero(q) for q in qs):
            raise HeckeError("Hecke and cyclotomic parameters must be units")
        self.params = params
        self.ring = ring
        self.xi = xi
        self.qs = qs
        self.xi_inv = self._invert_unit(xi)
        self.xi_m1 = xi - ring.one()
        # signed elementary symmetric functions for the cyclotomic reduction
        self.cyc_coeffs = [
            (elementary_symmetric(list(qs), j, ring.one()), (-1) ** (j - 1))
            for j in range(1, params.r + 1)
        ]
        self._rmul = {}
        self._lmul = {}
        self._commute = {}
        self._t_cache = {}
        self._jm_cache = {}

    def _invert_unit(self, v):
        from .rings import Laurent
        if isinstance(v, Laurent):
            return v.inverse_unit()
        return self.ring.div(self.ring.one(), v)

    # -- bookkeeping --------------------------------------------------------

    @property
    def dimension(self):
        return self.params.order

    def identity_index(self):
        n = self.params.n
        return ((0,) * n, perm_identity(n))

    def basis_indices(self):
        n, r = self.params.n, self.params.r
        perms = sorted(itertools.permutations(range(1, n + 1)))
        for c in itertools.product(range(r), repeat=n):
            for w in perms:
                yield (c, w)

    def zero(self):
        return HeckeElement(self, {})

    def one(self):
        return HeckeElement(self, {self.identity_index(): self.ring.one()})

    def from_index(self, idx, coeff=None):
        return HeckeElement(self, {idx: self.ring.one() if coeff is None else coeff})

    def generator(self, token):
        """T_0 for token 0, T_i for token i."""
        n, r = self.params.n, self.params.r
        if token == 0:
            if r == 1:
                return self.one().scale(self.qs[0])
            c = (1,) + (0,) * (n - 1)
            return self.from_index((c, perm_identity(n)))
        if not 1 <= token <= n - 1:
            raise HeckeError(f"generator index {token} out of range")
        return self.from_index(((0,) * n, perm_transposition(n, token)))

    def jm(self, m):
        """The m-th Jucys-Murphy element."""
        if not 1 <= m <= self.params.n:
            raise HeckeError(f"Jucys-Murphy index {m} out of range")
        if m not in self._jm_cache:
            if self.params.r >= 2:
                c = tuple(1 if k == m - 1 else 0 for k in range(self.params.n))
                elt = self.from_index((c, perm_identity(self.params.n)))
            else:
                elt = _lmul_jm(self, m, self.one())
            self._jm_cache[m] = elt
        return self._jm_cache[m]

    def jm_all(self):
        return [self.jm(m) for m in range(1, self.params.n + 1)]


# -- index-level straightening ------------------------------------------------

def _lmul_t0_index(ctx, idx):
    """L_1 * (L^c T_w) as [(coeff, index)]."""
    c, w = idx
    r = ctx.params.r
    if c[0] + 1 < r:
        return (((ctx.ring.one()), ((c[0] + 1,) + c[1:], w)),)
    out = []
    for j, (ej, sign) in enumerate(ctx.cyc_coeffs, start=1):
        coeff = ej if sign > 0 else -ej
        out.append((coeff, ((r - j,) + c[1:], w)))
    return tuple(out)


def _left_coxeter(ctx, i, w):
    """T_i * T_w as [(coeff, perm)]."""
    sw = perm_compose(perm_transposition(ctx.params.n, i), w)
    # ascent iff i appears before i+1 in the one-line word of w^{-1}
    wi = w.index(i)
    wi1 = w.index(i + 1)
    if wi < wi1:
        return ((ctx.ring.one(), sw),)
    return ((ctx.xi_m1, w), (ctx.xi, sw))


def _lmul_ti_index(ctx, i, idx):
    """T_i * (L^c T_w) as [(coeff, index)]."""
    c, w = idx
    a, b = c[i - 1], c[i]
    swapped = list(c)
    swapped[i - 1], swapped[i] = b, a
    swapped = tuple(swapped)
    out = []
    for coeff, perm in _left_coxeter(ctx, i, w):
        out.append((coeff, (swapped, perm)))
    if b > a:
        for p in range(b - a):
            cc = list(c)
            cc[i - 1], cc[i] = a + p, b - p
            out.append((ctx.xi_m1, (tuple(cc), w)))
    elif a > b:
        for q in range(a - b):
            cc = list(c)
            cc[i - 1], cc[i] = b + q, a - q
            out.append((-ctx.xi_m1, (tuple(cc), w)))
    return tuple(out)


def _rmul_ti_index(ctx, idx, i):
    """(L^c T_w) * T_i as [(coeff, index)]."""
    c, w = idx
    ws = perm_compose(w, perm_transposition(ctx.params.n, i))
    if w[i - 1] < w[i]:
        return ((ctx.ring.one(), (c, ws)),)
    return ((ctx.xi_m1, (c, w)), (ctx.xi, (c, ws)))


def _terms_rmul_ti(ctx, terms, i):
    out = {}
    for idx, coeff in terms.items():
        for c2, idx2 in _rmul_ti_index(ctx, idx, i):
            _bump(ctx, out, idx2, coeff * c2)
    return out


def _commute_l_through(ctx, word, m):
    """T_word * L_m as a terms dict; every index has a unit exponent vector."""
    key = (word, m)
    cached = ctx._commute.get(key)
    if cached is not None:
        return cached
    n = ctx.params.n
    if not word:
        c = tuple(1 if k == m - 1 else 0 for k in range(n))
        result = {(c, perm_identity(n)): ctx.ring.one()}
    else:
        pre, i = word[:-1], word[-1]
        if m not in (i, i + 1):
            result = _terms_rmul_ti(ctx, _commute_l_through(ctx, pre, m), i)
        elif m == i:
            x = _commute_l_through(ctx, pre, i + 1)
            result = _terms_rmul_ti(ctx, x, i)
            for idx, coeff in x.items():
                _bump(ctx, result, idx, -(ctx.xi_m1) * coeff)
        else:
            x1 = _commute_l_through(ctx, pre, i)
            x2 = _commute_l_through(ctx, pre, i + 1)
            result = _terms_rmul_ti(ctx, x1, i)
            for idx, coeff in x2.items():
                _bump(ctx, result, idx, ctx.xi_m1 * coeff)
    ctx._commute[key] = result
    return result


def _bump(ctx, terms, idx, coeff):
    if idx in terms:
        s = terms[idx] + coeff
        if ctx.ring.is_zero(s):
            del terms[idx]
        else:
            terms[idx] = s
    elif not ctx.ring.is_zero(coeff):
        terms[idx] = coeff


def _lmul_jm(ctx, m, elt):
    """L_m * elt through the palindromic generator word."""
    word = tuple(range(m - 1, 0, -1)) + (0,) + tuple(range(1, m))
    out = elt
    for tok in reversed(word):
        out = _lmul_gen(ctx, tok, out)
    scale = ctx.ring.one()
    for _ in range(m - 1):
        scale = scale * ctx.xi_inv
    return out.scale(scale)


def _rmul_t0_index(ctx, idx):
    """(L^c T_w) * T_0 as a terms dict."""
    c, w = idx
    r = ctx.params.r
    passed = _commute_l_through(ctx, coxeter_word(w), 1)
    out = {}
    overflow = {}
    for (cu, u), coeff in passed.items():
        m = cu.index(1) + 1
        if c[m - 1] + 1 < r:
            merged = tuple(ci + 1 if k == m - 1 else ci for k, ci in enumerate(c))
            _bump(ctx, out, (merged, u), coeff)
        else:
            overflow.setdefault(m, {})[(c, u)] = coeff
    for m, terms in overflow.items():
        resolved = _lmul_jm(ctx, m, HeckeElement(ctx, terms))
        for idx2, coeff in resolved.terms.items():
            _bump(ctx, out, idx2, coeff)
    return out


def _rmul_gen_index(ctx, idx, token):
    key = (idx, token)
    cached = ctx._rmul.get(key)
    if cached is None:
        if token == 0:
            cached = tuple(_rmul_t0_index(ctx, idx).items())
        else:
            cached = tuple((i, c) for c, i in _rmul_ti_index(ctx, idx, token))
        ctx._rmul[key] = cached
    return cached


def _lmul_gen_index(ctx, token, idx):
    key = (token, idx)
    cached = ctx._lmul.get(key)
    if cached is None:
        if token == 0:
            cached = tuple((i, c) for c, i in _lmul_t0_index(ctx, idx))
        else:
            cached = tuple((i, c) for c, i in _lmul_ti_index(ctx, token, idx))
        ctx._lmul[key] = cached
    return cached


def _rmul_gen(ctx, elt, token):
    out = {}
    for idx, coeff in elt.terms.items():
        for idx2, c2 in _rmul_gen_index(ctx, idx, token):
            _bump(ctx, out, idx2, coeff * c2)
    return HeckeElement(ctx, out)


def _lmul_gen(ctx, token, elt):
    out = {}
    for idx, coeff in elt.terms.items():
        for idx2, c2 in _lmul_gen_index(ctx, token, idx):
            _bump(ctx, out, idx2, coeff * c2)
    return HeckeElement(ctx, out)


def _index_word_and_scale(ctx, idx):
    """Canonical generator word of L^c T_w and its scalar prefactor."""
    c, w = idx
    word = []
    shift = 0
    for m, cm in enumerate(c, start=1):
        for _ in range(cm):
            word.extend(range(m - 1, 0, -1))
            word.append(0)
            word.extend(range(1, m))
            shift += m - 1
    word.extend(coxeter_word(w))
    scale = ctx.ring.one()
    for _ in range(shift):
        scale = scale * ctx.xi_inv
    return tuple(word), scale


# -- elements ------------------------------------------------------------------

class HeckeElement:
    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        self.terms = {i: c for i, c in terms.items() if not ctx.ring.is_zero(c)}

    def _check(self, other):
        if not isinstance(other, HeckeElement) or other.ctx is not self.ctx:
            raise HeckeError("mixed algebra contexts")
        return other

    def __add__(self, other):
        o = self._check(other)
        out = dict(self.terms)
        for idx, coeff in o.terms.items():
            _bump(self.ctx, out, idx, coeff)
        return HeckeElement(self.ctx, out)

    def __sub__(self, other):
        o = self._check(other)
        out = dict(self.terms)
        for idx, coeff in o.terms.items():
            _bump(self.ctx, out, idx, -coeff)
        return HeckeElement(self.ctx, out)

    def __neg__(self):
        return HeckeElement(self.ctx, {i: -c for i, c in self.terms.items()})

    def scale(self, coeff):
        self.ctx.ring.check(coeff)
        return HeckeElement(self.ctx, {i: c * coeff for i, c in self.terms.items()})

    def __mul__(self, other):
        o = self._check(other)
        ctx = self.ctx
        out = ctx.zero()
        for idx, coeff in o.terms.items():
            word, scale = _index_word_and_scale(ctx, idx)
            part = self
            for tok in word:
                part = _rmul_gen(ctx, part, tok)
            out = out + part.scale(scale * coeff)
        return out

    def rmul_gen(self, token):
        return _rmul_gen(self.ctx, self, token)

    def lmul_gen(self, token):
        return _lmul_gen(self.ctx, token, self)

    def star(self):
        """The anti-involution fixing all generators."""
        ctx = self.ctx
        out = ctx.zero()
        for (c, w), coeff in self.terms.items():
            part = ctx.from_index((c, perm_identity(ctx.params.n)))
            for tok in coxeter_word(w):
                part = _lmul_gen(ctx, tok, part)
            out = out + part.scale(coeff)
        return out

    def tau(self):
        """Identity-basis coefficient: the standard symmetrizing form."""
        return self.terms.get(self.ctx.identity_index(), self.ctx.ring.zero())

    def is_zero(self):
        return not self.terms

    def commutator(self, other):
        return self * other - other * self

    def __eq__(self, other):
        return (
            isinstance(other, HeckeElement)
            and other.ctx is self.ctx
            and other.terms.keys() == self.terms.keys()
            and all(other.terms[i] == c for i, c in self.terms.items())
        )

    def __repr__(self):
        items = sorted(self.terms.items())[:6]
        body = ", ".join(f"{i}: {c!r}" for i, c in items)
        more = "" if len(self.terms) <= 6 else f", .. ({len(self.terms)} terms)"
        return f"HeckeElement({{{body}{more}}})"

    def to_json(self):
        ring = self.ctx.ring
        return [
            {"c": list(c), "w": list(w), "coeff": ring.format(coeff)}
            for (c, w), coeff in sorted(self.terms.items())
        ]

    @staticmethod
    def from_json(ctx, payload):
        terms = {}
        for item in payload:
            idx = (tuple(item["c"]), tuple(item["w"]))
            _bump(ctx, terms, idx, ctx.ring.parse(item["coeff"]))
        return HeckeElement(ctx, terms)


def word_product(ctx, word):
    """T_{x_1} .. T_{x_k} for a word over {T_0 .. T_{n-1}}."""
    out = ctx.one()
    for tok in word:
        out = _rmul_gen(ctx, out, tok)
    return out


def t_element(ctx, w):
    """T_w for a group element, via its fixed BM reduced word."""
    key = (w.colors, w.perm)
    cached = ctx._t_cache.get(key)
    if cached is None:
        cached = word_product(ctx, bm_word(w))
        ctx._t_cache[key] = cached
    return cached


def t_perm(ctx, perm):
    """T_w for a plain permutation (word-independent)."""
    return word_product(ctx, coxeter_word(perm))


# -- cellular bases -------------------------------------------------------------

def young_subgroup(row_sizes, n):
    """All permutations preserving the consecutive blocks of given sizes."""
    blocks = []
    start = 1
    for size in row_sizes:
        blocks.append(tuple(range(start, start + size)))
        start += size
    perms = [perm_identity(n)]
    for block in blocks:
        new = []
        for base in perms:
            for arrangement in itertools.permutations(block):
                img = list(base)
                for pos, val in zip(block, arrangement):
                    img[pos - 1] = val
                new.append(tuple(img))
        perms = new
    return perms


def _row_sizes(shape):
    return [row for comp in shape for row in comp]


def m_tt(ctx, shape):
    """The diagonal cellular generator m_{t^mu, t^mu}."""
    n, r = ctx.params.n, ctx.params.r
    elt = ctx.zero()
    for w in young_subgroup(_row_sizes(shape), n):
        elt = elt + t_perm(ctx, w)
    cum = 0
    for k in range(2, r + 1):
        cum += sum(shape[k - 2])
        for m in range(1, cum + 1):
            elt = elt * (ctx.jm(m) - ctx.one().scale(ctx.qs[k - 1]))
    return elt


def n_tt(ctx, shape):
    """The diagonal dual cellular generator n_{t_mu, t_mu}."""
    from .tableaux import conjugate_multipartition
    from .group import perm_inversions
    n, r = ctx.params.n, ctx.params.r
    conj = conjugate_multipartition(shape)
    elt = ctx.zero()
    for w in young_subgroup(_row_sizes(conj), n):
        ln = perm_inversions(w)
        coeff = ctx.ring.one()
        for _ in range(ln):
            coeff = coeff * ctx.xi_inv
        if ln % 2:
            coeff = -coeff
        elt = elt + t_perm(ctx, w).scale(coeff)
    cum = 0
    for k in range(2, r + 1):
        cum += sum(shape[r - k + 1])
        for m in range(1, cum + 1):
            elt = elt * (ctx.jm(m) - ctx.one().scale(ctx.qs[r - k]))
    return elt


def m_basis(ctx, s, t, diag_cache=None):
    """The Murphy cellular basis element m_{st}."""
    from .tableaux import d_perm
    from .group import perm_inverse
    if s.shape != t.shape:
        raise HeckeError("tableaux must share a shape")
    diag = (diag_cache or {}).get(s.shape)
    if diag is None:
        diag = m_tt(ctx, s.shape)
        if diag_cache is not None:
            diag_cache[s.shape] = diag
    left = t_perm(ctx, perm_inverse(d_perm(s)))
    right = t_perm(ctx, d_perm(t))
    return left * diag * right


def n_basis(ctx, s, t, diag_cache=None):
    """The dual cellular basis element n_{st}."""
    from .tableaux import d_perm_col
    from .group import perm_inverse
    if s.shape != t.shape:
        raise HeckeError("tableaux must share a shape")
    diag = (diag_cache or {}).get(s.shape)
    if diag is None:
        diag = n_tt(ctx, s.shape)
        if diag_cache is not None:
            diag_cache[s.shape] = diag
    left = t_perm(ctx, perm_inverse(d_perm_col(s)))
    right = t_perm(ctx, d_perm_col(t))
    return left * diag * right


def elementary_symmetric_jm(ctx, m):
    """e_m(L_1, .., L_n) as an algebra element."""
    n = ctx.params.n
    out = ctx.zero()
    for subset in itertools.combinations(range(1, n + 1), m):
        part = ctx.one()
        for k in subset:
            part = part * ctx.jm(k)
        out = out + part
    return out
