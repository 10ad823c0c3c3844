r"""
Conjugating an element of $W_n$ to a minimal-length class representative,
with a step-by-step certificate.

A single move $w \to x w x^{-1}$ (one generator $x$) is *admissible* when
$\ell(xwx^{-1}) \le \ell(w)$ and additionally $\ell(xw) < \ell(w)$ or
$\ell(wx^{-1}) < \ell(w)$.  Chains of admissible moves never increase the
length, and every element admits a chain ending in a block product
$w_\alpha$ attached to a colored semi-bicomposition $\alpha$; such block
products are of minimal length in their conjugacy class.

The engine runs in two stages and records every move:

1. *Peeling.*  Working down the tower $W_n \supset W_{n-1} \supset \cdots$,
   repeatedly conjugate by the last letter of the $b$ part of the current
   double-coset normal form $w = a\,d\,b$.  Each such move is admissible
   (the right product drops by one letter) and the measure
   $(\ell(w), \ell(b))$ decreases lexicographically, so the stage terminates
   with $w = d_1 d_2 \cdots d_n$, a product of blocks $w_{\lambda,\epsilon}$.

2. *Block sorting.*  Adjacent blocks are swapped until the colored blocks
   come first in weakly increasing size (colors weakly decreasing on equal
   sizes).  Each such swap has a conjugation schedule supported on the
   window of the two blocks; the engine finds one by breadth-first search
   over admissible moves restricted to the window and verifies every step
   at runtime, rather than trusting a precomputed index schedule.

The terminal $w_\alpha$ has minimal length in its conjugacy class, but the
uncolored part $\mu$ of $\alpha$ is only a composition.  Sorting $\mu$ into
a partition is *not* possible with admissible moves: already $s_2$ and $s_1$
in $\mathfrak{S}_3$ are both minimal and every single-generator conjugation
between them passes through length 3.  The canonical representative
$w_\beta$ (with $\mu$ a partition) is instead reached by *strong
conjugation*: length-preserving steps $v \mapsto y^{-1} v y$ with
$\ell(vy) = \ell(v) + \ell(y)$, exchanging adjacent uncolored blocks.  These
are recorded separately as ``TailStep`` witnesses.

Every certificate can be replayed independently via ``verify_certificate``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .group import (
    ColoredSemiBicomposition,
    GroupElement,
    dc_normal_form,
    gen_element,
    length,
    theta_factorization,
    w_alpha,
    w_lambda_eps,
)


class InternalInconsistencyError(AssertionError):
    """A theorem-backed invariant failed at runtime."""


@dataclass(frozen=True)
class ReductionStep:
    conjugator: int           # generator token: 0 for t, i for s_i
    before: GroupElement
    after: GroupElement
    len_before: int
    len_after: int
    side: str                 # which descent condition held

    def to_json(self):
        from .group import format_word
        return {
            "conjugator": format_word((self.conjugator,)),
            "before": self.before.to_json(),
            "after": self.after.to_json(),
            "len_before": self.len_before,
            "len_after": self.len_after,
            "side": self.side,
        }


@dataclass(frozen=True)
class TailStep:
    """Strong-conjugation witness: after = y^{-1} * before * y with
    len(before * y) = len(before) + len(y) and length preserved."""

    conjugator_word: tuple
    before: GroupElement
    after: GroupElement

    def to_json(self):
        from .group import format_word
        return {
            "conjugator": format_word(self.conjugator_word),
            "before": self.before.to_json(),
            "after": self.after.to_json(),
            "length": length(self.before),
        }


@dataclass
class ReductionCertificate:
    start: GroupElement
    steps: list
    terminal: ColoredSemiBicomposition
    terminal_element: GroupElement
    canonical: ColoredSemiBicomposition
    tail: list = field(default_factory=list)
    canonical_element: GroupElement = None

    @property
    def terminal_length(self):
        return length(self.terminal_element)

    def to_json(self):
        out = {
            "start": self.start.to_json(),
            "steps": [s.to_json() for s in self.steps],
            "terminal": self.terminal.to_json(),
            "terminal_element": self.terminal_element.to_json(),
            "terminal_length": self.terminal_length,
            "canonical": self.canonical.to_json(),
        }
        if self.tail:
            out["tail"] = [s.to_json() for s in self.tail]
        if self.canonical_element is not None:
            out["canonical_element"] = self.canonical_element.to_json()
        return out


def try_move(cur, token):
    """The admissible move conjugating by one generator, or None."""
    g = gen_element(cur.params, token)
    nxt = g * cur * g.inverse()
    len_before = length(cur)
    len_after = length(nxt)
    if len_after > len_before:
        return None
    left = length(g * cur) < len_before
    right = length(cur * g.inverse()) < len_before
    if not (left or right):
        return None
    side = "both" if left and right else ("left" if left else "right")
    return ReductionStep(token, cur, nxt, len_before, len_after, side)


def _peel(w, steps):
    """Stage 1: conjugate down to a product of level divisors."""
    params = w.params
    cur = w
    suffix = GroupElement.identity(params)
    m = params.n
    while m >= 2:
        core = cur * suffix.inverse()
        dc = dc_normal_form(core, m)
        if dc.b.is_identity():
            suffix = dc.d * suffix
            m -= 1
            continue
        token = dc.b_word[-1]
        step = try_move(cur, token)
        if step is None:
            raise InternalInconsistencyError(
                f"peeling move by {token} violated the descent condition")
        steps.append(step)
        cur = step.after
    return cur


def _conjugation_path(src, dst, tokens):
    """Shortest chain of admissible moves from src to dst using the given
    conjugator tokens.  Existence is guaranteed for the block swaps below."""
    if src == dst:
        return []
    parents = {src: None}
    queue = deque([src])
    while queue:
        cur = queue.popleft()
        for token in tokens:
            step = try_move(cur, token)
            if step is None or step.after in parents:
                continue
            parents[step.after] = step
            if step.after == dst:
                path = []
                node = dst
                while parents[node] is not None:
                    st = parents[node]
                    path.append(st)
                    node = st.before
                return list(reversed(path))
            queue.append(step.after)
    raise InternalInconsistencyError(
        "no admissible conjugation schedule found for a block swap")


def _swap_blocks(cur, blocks, i, steps):
    """Swap adjacent blocks i, i+1 via a window-supported move schedule."""
    params = cur.params
    start = sum(size for size, _ in blocks[:i])
    width = blocks[i][0] + blocks[i + 1][0]
    new_blocks = list(blocks)
    new_blocks[i], new_blocks[i + 1] = new_blocks[i + 1], new_blocks[i]
    target, _ = w_lambda_eps(
        params,
        tuple(size for size, _ in new_blocks),
        tuple(color for _, color in new_blocks),
    )
    tokens = list(range(start + 1, start + width))
    steps.extend(_conjugation_path(cur, target, tokens))
    return target, new_blocks


def _block_exchange_perm(params, start, p1, p2):
    """The permutation exchanging adjacent windows of sizes p1 and p2."""
    img = list(range(1, params.n + 1))
    for i in range(1, p1 + 1):
        img[start + i - 1] = start + p2 + i
    for i in range(1, p2 + 1):
        img[start + p1 + i - 1] = start + i
    colors = (0,) * params.n
    return GroupElement(params, colors, tuple(img))


def _strong_swap(cur, blocks, i, tail):
    """Exchange adjacent uncolored blocks i, i+1 by strong conjugation."""
    params = cur.params
    start = sum(size for size, _ in blocks[:i])
    p1, p2 = blocks[i][0], blocks[i + 1][0]
    new_blocks = list(blocks)
    new_blocks[i], new_blocks[i + 1] = new_blocks[i + 1], new_blocks[i]
    target, _ = w_lambda_eps(
        params,
        tuple(size for size, _ in new_blocks),
        tuple(color for _, color in new_blocks),
    )
    candidates = [_block_exchange_perm(params, start, p1, p2)]
    candidates.append(candidates[0].inverse())
    y = None
    for cand in candidates:
        if (cand.inverse() * cur * cand == target
                and length(cur * cand) == length(cur) + length(cand)):
            y = cand
            break
    if y is None:
        raise InternalInconsistencyError("block exchange witness failed")
    from .group import coxeter_word
    tail.append(TailStep(coxeter_word(y.perm), cur, target))
    return target, new_blocks


def reduce_to_minimal(w, canonical=False):
    """Conjugate w to a minimal-length element w_alpha, with certificate.

    The admissible-move chain always ends on a block product indexed by a
    colored semi-bicomposition.  With ``canonical=True`` the certificate
    additionally carries strong-conjugation witnesses sorting the uncolored
    part into a partition, landing on the canonical class representative
    w_beta (the element ``canonical_element``).
    """
    steps = []
    cur = _peel(w, steps)
    _, lam, eps = theta_factorization(cur)
    blocks = list(zip(lam, eps))

    # colored blocks migrate to the front
    moved = True
    while moved:
        moved = False
        for i in range(len(blocks) - 1):
            if blocks[i][1] == 0 and blocks[i + 1][1] != 0:
                cur, blocks = _swap_blocks(cur, blocks, i, steps)
                moved = True
                break

    # colored prefix: sizes weakly increasing, colors weakly decreasing on ties
    k = sum(1 for _, c in blocks if c != 0)
    moved = True
    while moved:
        moved = False
        for i in range(k - 1):
            (p1, c1), (p2, c2) = blocks[i], blocks[i + 1]
            if p1 > p2 or (p1 == p2 and c1 < c2):
                cur, blocks = _swap_blocks(cur, blocks, i, steps)
                moved = True
                break

    alpha = ColoredSemiBicomposition(
        lam=tuple(size for size, color in blocks[:k]),
        colors=tuple(color for _, color in blocks[:k]),
        mu=tuple(size for size, color in blocks[k:]),
    )
    expect, _ = w_alpha(w.params, alpha)
    if cur != expect:
        raise InternalInconsistencyError("terminal element is not w_alpha")
    beta = ColoredSemiBicomposition(
        alpha.lam, alpha.colors, tuple(sorted(alpha.mu, reverse=True)))

    tail = []
    canonical_element = None
    if canonical:
        moved = True
        while moved:
            moved = False
            for i in range(k, len(blocks) - 1):
                if blocks[i][0] < blocks[i + 1][0]:
                    cur, blocks = _strong_swap(cur, blocks, i, tail)
                    moved = True
                    break
        canonical_element = cur
        if canonical_element != w_alpha(w.params, beta)[0]:
            raise InternalInconsistencyError("tail sorting missed w_beta")

    cert = ReductionCertificate(w, steps, alpha, expect, beta, tail,
                                canonical_element)
    ok, detail = verify_certificate(cert)
    if not ok:
        raise InternalInconsistencyError(f"certificate failed self-check: {detail}")
    return cert


def verify_certificate(cert):
    """Independent replay of a certificate. Returns (ok, detail)."""
    params = cert.start.params
    cur = cert.start
    for idx, step in enumerate(cert.steps):
        if step.before != cur:
            return False, f"step {idx}: chain broken"
        g = gen_element(params, step.conjugator)
        if g * cur * g.inverse() != step.after:
            return False, f"step {idx}: not a conjugation by the stated generator"
        lb, la = length(cur), length(step.after)
        if (lb, la) != (step.len_before, step.len_after):
            return False, f"step {idx}: recorded lengths are wrong"
        if la > lb:
            return False, f"step {idx}: length increased"
        left = length(g * cur) < lb
        right = length(cur * g.inverse()) < lb
        want = {"left": left, "right": right, "both": left and right}.get(step.side)
        if not want:
            return False, f"step {idx}: recorded descent condition does not hold"
        cur = step.after
    expect, _ = w_alpha(params, cert.terminal)
    if cur != expect or cur != cert.terminal_element:
        return False, "terminal element mismatch"
    want_beta = ColoredSemiBicomposition(
        cert.terminal.lam, cert.terminal.colors,
        tuple(sorted(cert.terminal.mu, reverse=True)))
    if cert.canonical != want_beta or not cert.canonical.is_bipartition():
        return False, "canonical label mismatch"
    for idx, step in enumerate(cert.tail):
        if step.before != cur:
            return False, f"tail step {idx}: chain broken"
        from .group import eval_word
        y = eval_word(params, step.conjugator_word)
        if y.inverse() * cur * y != step.after:
            return False, f"tail step {idx}: not the stated strong conjugation"
        if length(step.after) != length(cur):
            return False, f"tail step {idx}: length not preserved"
        if length(cur * y) != length(cur) + length(y):
            return False, f"tail step {idx}: length additivity fails"
        cur = step.after
    if cert.canonical_element is not None:
        if cur != cert.canonical_element:
            return False, "canonical element mismatch"
        if cur != w_alpha(params, cert.canonical)[0]:
            return False, "canonical element is not w_beta"
    return True, "ok"
