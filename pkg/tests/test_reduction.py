import pytest

from cyclohecke.group import (
    ColoredSemiBicomposition,
    GroupElement,
    GroupParams,
    conjugacy_invariant,
    enumerate_classes,
    eval_word,
    length,
    phi_bijection_full,
    w_alpha,
)
from cyclohecke.reduction import (
    reduce_to_minimal,
    try_move,
    verify_certificate,
)


def test_admissible_move_conditions():
    P = GroupParams(2, 3)
    w = eval_word(P, (2, 1, 0, 1, 2, 0))
    step = try_move(w, 0)
    if step is not None:
        assert step.len_after <= step.len_before
        assert step.side in ("left", "right", "both")
    # already-minimal elements admit no strictly-decreasing neighbors
    s2 = GroupElement.gen_s(P, 2)
    for tok in range(3):
        step = try_move(s2, tok)
        assert step is None or step.after == s2 or length(step.after) == 1


def test_block_form_has_empty_certificate():
    P = GroupParams(2, 3)
    for lam, eps, mu_sorted in [((1, 2), (1, 0), True), ((3,), (1,), True)]:
        alpha = ColoredSemiBicomposition(
            tuple(p for p, e in zip(lam, eps) if e),
            tuple(e for e in eps if e),
            tuple(p for p, e in zip(lam, eps) if not e),
        )
        w, _ = w_alpha(P, alpha)
        cert = reduce_to_minimal(w)
        assert cert.steps == [] and cert.terminal == alpha


def test_mu_sorting_is_strong_conjugation_not_admissible():
    # s_2 and s_1 are both minimal in S_3; no admissible chain joins them,
    # so the canonical form is reached by the recorded tail witnesses.
    P = GroupParams(1, 3)
    s2 = GroupElement.gen_s(P, 2)
    cert = reduce_to_minimal(s2, canonical=True)
    assert cert.steps == []
    assert cert.terminal.mu == (1, 2)
    assert cert.canonical.mu == (2, 1)
    assert len(cert.tail) == 1
    assert cert.canonical_element == GroupElement.gen_s(P, 1)
    ok, detail = verify_certificate(cert)
    assert ok, detail


@pytest.mark.parametrize("r,n", [(2, 3), (3, 2), (3, 3)])
def test_exhaustive_reduction(r, n):
    P = GroupParams(r, n)
    for cls in enumerate_classes(P):
        minimal = min(length(w) for w in cls)
        canonical_elements = set()
        for w in cls:
            cert = reduce_to_minimal(w, canonical=True)
            ok, detail = verify_certificate(cert)
            assert ok, detail
            assert cert.terminal_length == minimal
            assert cert.canonical.is_bipartition()
            assert length(cert.canonical_element) == minimal
            canonical_elements.add(cert.canonical_element)
        assert len(canonical_elements) == 1
        assert phi_bijection_full(P, cert.canonical) == \
            conjugacy_invariant(cls[0])


def test_every_step_certified():
    P = GroupParams(2, 3)
    w = eval_word(P, (2, 1, 0, 1, 2, 0))
    cert = reduce_to_minimal(w, canonical=True)
    cur = w
    for step in cert.steps:
        assert step.before == cur
        g = eval_word(P, (step.conjugator,))
        assert step.after == g * cur * g.inverse()
        lb = length(cur)
        assert step.len_before == lb and step.len_after <= lb
        left = length(g * cur) < lb
        right = length(cur * g.inverse()) < lb
        assert {"left": left, "right": right, "both": left and right}[step.side]
        cur = step.after
    assert cur == cert.terminal_element


def test_certificate_serialization():
    P = GroupParams(2, 3)
    w = eval_word(P, (1, 2, 0, 1))
    cert = reduce_to_minimal(w, canonical=True)
    payload = cert.to_json()
    assert payload["terminal_length"] == length(cert.terminal_element)
    assert len(payload["steps"]) == len(cert.steps)
