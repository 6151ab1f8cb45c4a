"""The fifteen-factor product: coset invariance, representative
independence, modularity, the proportionality constant, and the
tetrahedral cross-check."""

import random

import pytest

from azy5.chars import M0, act_set, pair_sign
from azy5.construction import (AZY_NORMALIZATION, alternate_system,
                               estimate_lambda, geometric_crosscheck,
                               invariance_word, phi, phi_gamma,
                               phi_modularity_error, rep_independence_error)
from azy5.forms import p2
from azy5.siegel import SiegelPoint, sample_taus
from azy5.symplectic import (E11, ETA0, IDENTITY, J, THETA0_2, act_tau,
                             coset_reps, gl_rotation, in_subgroup,
                             translation)

# phi / (signed triple sum) under the +1 base-monomial normalization
LAMBDA_EXACT = -(2.0 ** -57) / 1000.0


def test_phi_gamma_at_identity(taus):
    tau = taus[0]
    a = phi_gamma(IDENTITY, tau)
    b = p2(tau)
    assert a.value == b.value
    assert a.err == b.err


def test_p2_sign_flip_under_eta0(taus):
    for tau in taus[:3]:
        lhs = p2(act_tau(ETA0, tau)).value
        rhs = -p2(tau).value
        assert abs(lhs - rhs) < 1e-9 * max(1.0, abs(rhs))


def test_invariance_word_properties():
    rng = random.Random(5)
    words = [invariance_word(rng) for _ in range(10)]
    for w in words:
        assert pair_sign(w) == 1
        assert in_subgroup(w, THETA0_2)
    again = [invariance_word(random.Random(5)) for _ in range(10)]
    assert words[0] == again[0]  # seeded draws are reproducible


def test_alternate_system_is_a_transversal():
    alt = alternate_system(seed=3)
    assert len(alt.reps) == 15
    canon = {frozenset(act_set(g.inverse(), M0)): g for g in coset_reps(THETA0_2).reps}
    seen = set()
    for g in alt.reps:
        key = frozenset(act_set(g.inverse(), M0))
        seen.add(key)
        # same coset as the canonical representative with the same key
        assert in_subgroup(g @ canon[key].inverse(), THETA0_2)
    assert len(seen) == 15


def test_factor_ratio_under_stabilizer(taus):
    """Left multiplication by a stabilizer element eta scales a factor by
    exactly pair_sign(eta): +1 on the invariance kernel, -1 on elements
    that transpose the matched pairs."""
    tau = taus[0]
    g = coset_reps(THETA0_2).reps[3]
    cases = ((translation(E11), 1),
             (gl_rotation(((0, -1), (1, -1))), 1),
             (gl_rotation(((0, 1), (1, 0))), -1),
             (gl_rotation(((1, 1), (0, 1))), -1))
    base = phi_gamma(g, tau).value
    for eta, sign in cases:
        assert pair_sign(eta) == sign
        moved = phi_gamma(eta @ g, tau).value
        assert abs(moved - sign * base) < 1e-9 * abs(base)


def test_rep_independence(taus):
    for seed in (0, 1):
        assert rep_independence_error(taus[0], seed=seed) < 1e-8


def test_phi_rejects_short_system(taus):
    from azy5.symplectic import CosetSystem
    bad = CosetSystem(THETA0_2, (IDENTITY,), None)
    with pytest.raises(ValueError):
        phi(taus[0], system=bad)


def test_phi_modularity(taus):
    tau = taus[1]
    for gamma in (J, ETA0):
        assert phi_modularity_error(gamma, tau) < 1e-6


def test_lambda_estimate_double():
    est = estimate_lambda(seed=0, samples=3)
    assert est.spread < 1e-5
    assert abs(est.value - LAMBDA_EXACT) < 1e-8 * abs(LAMBDA_EXACT)
    assert abs(est.value.imag) < 1e-8 * abs(LAMBDA_EXACT)
    assert est.normalization == AZY_NORMALIZATION
    assert len(est.ratios) == 3


def test_lambda_estimate_hiprec():
    est = estimate_lambda(seed=0, samples=2, eps=1e-30, hiprec=True)
    assert est.spread < 1e-20
    assert abs(complex(est.value) - LAMBDA_EXACT) < 1e-12 * abs(LAMBDA_EXACT)


def test_lambda_guard_raises():
    with pytest.raises(RuntimeError):
        estimate_lambda(seed=0, samples=1, cancellation_guard=1e9)


def test_geometric_crosscheck():
    taus = sample_taus(seed=11, count=2)
    per_rep, product_spread = geometric_crosscheck(taus)
    assert len(per_rep) == 15
    quads = {q for q, _ in per_rep.values()}
    assert len(quads) == 15
    for q, spread in per_rep.values():
        assert spread < 1e-5
    assert product_spread < 1e-5


def test_phi_hiprec_agrees_with_double(taus):
    tau = taus[0]
    a = phi(tau).value
    b = phi(tau, eps=1e-30, hiprec=True).value
    assert abs(a - complex(b)) < 1e-10 * abs(a)
