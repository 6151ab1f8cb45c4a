"""The fifteen-factor tetrahedral product and its certification.

For a coset representative gamma of the index-15 subgroup fixing the
coordinate quadruple, the factor

    phi_gamma(tau) = chi_P(gamma) det(c tau + d)^{-2} P2(gamma tau)

transforms under left multiplication of gamma by a stabilizer element eta
as phi_{eta gamma} = pair_sign(eta) phi_gamma: the weight-2 multiplier of
P2 on the stabilizer differs from chi_P by the sign of the permutation eta
induces on the three matched pairs of odd characteristics (chi_P restricts
to the in-pair flip parity, the P2 multiplier to flips times pair moves;
GL rotations that transpose two pairs leave P2 fixed while chi_P sees
them as odd).  The factors are therefore genuinely coset-invariant exactly
under the index-two kernel of pair_sign, and the product

    phi(tau) = prod_{i=1}^{15} phi_{gamma_i}(tau)

is independent of the transversal up to the product of the fifteen pair
signs; transversals obtained from one another by kernel elements give
identical values.  alternate_system draws its stabilizer words from that
kernel, which is what representative independence means here.

For the fixed canonical transversal, phi(gamma tau) / det(c tau+d)^30
phi(tau) is automatically a character of the full group (quotient of a
fixed function by a cocycle) and is measured to be the sign character on
all four generators, hence everywhere: phi has weight 30 and character
chi_P, and is proportional to the weight-30 signed triple sum;
estimate_lambda measures the constant.

The geometric cross-check: gamma_i pairs with the tetrahedron of the
plus-quadruple gamma_i^{-1} M0, whose quartic form F evaluated at the
second-order constants is a constant multiple of phi_{gamma_i} (the
constant reflects the unit-norm face normalization), so each ratio is
constant in tau and the product of all fifteen F values is a constant
multiple of phi.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import mpmath as mp

from .chars import M0, act_set, chi_p, pair_sign
from .forms import azy_eval, p2, product_err
from .numeric import HIPREC_DPS, fsum_complex, m2_det, mobius, value_prec
from .geometry import f_m
from .siegel import SiegelPoint, sample_tau
from .symplectic import (E11, E22, ESYM, GENERATORS, THETA0_2, CosetSystem,
                         act_tau, coset_reps, gl_rotation, lower_translation,
                         translation)
from .theta import ThetaValue

AZY_NORMALIZATION = (
    "weight-30 signed triple sum normalized so the monomial "
    "(theta_[00;00] theta_[00;01] theta_[01;00])^20 has coefficient +1; "
    "phi is the product of the fifteen factors "
    "chi_P(gamma) det(c tau + d)^-2 P2(gamma tau)."
)


def _det_ctd(gamma, tau, hiprec=False, dps=None):
    if hiprec:
        with mp.workdps(dps or HIPREC_DPS):
            _, den = mobius(gamma, tau.entries_mp())
            return m2_det(den)
    _, den = mobius(gamma, tau.entries())
    return m2_det(den)


def phi_gamma(gamma, tau, eps=1e-12, hiprec=False, dps=None):
    """One coset factor chi_P(gamma) det(c tau+d)^{-2} P2(gamma tau)."""
    det = _det_ctd(gamma, tau, hiprec, dps)
    tg = act_tau(gamma, tau, hiprec, dps)
    pv = p2(tg, eps, hiprec, dps)
    with value_prec(hiprec, dps):
        scale = det ** (-2)
        v = chi_p(gamma) * scale * pv.value
    return ThetaValue(v, float(abs(scale)) * pv.err)


def phi(tau, eps=1e-12, hiprec=False, dps=None, system=None):
    """The weight-30 product over a 15-element transversal (the canonical
    one unless `system` provides another)."""
    reps = (system or coset_reps(THETA0_2)).reps
    if len(reps) != 15:
        raise ValueError("phi needs a 15-element coset transversal")
    factors = [phi_gamma(g, tau, eps, hiprec, dps) for g in reps]
    with value_prec(hiprec, dps):
        v = None
        for f in factors:
            v = f.value if v is None else v * f.value
    return ThetaValue(v, product_err((f.value, f.err, 1) for f in factors))


# Generators of the kernel of pair_sign inside the stabilizer: the three
# upper translations and ESYM flip pairs in place, the even lower
# translations and the reflection rotation act trivially on the odd
# characteristics, and the order-3 rotation cycles the three pairs.
_INVARIANCE_GENERATORS = (
    translation(E11), translation(E22), translation(ESYM),
    lower_translation(((2, 0), (0, 0))), lower_translation(((0, 0), (0, 2))),
    lower_translation(((0, 2), (2, 0))),
    gl_rotation(((-1, 0), (0, 1))), gl_rotation(((0, -1), (1, -1))),
)


def invariance_word(rng, length=6):
    """Seeded random word in the stabilizer subgroup under which the
    factors phi_gamma are exactly coset-invariant (pair_sign = +1)."""
    w = None
    for _ in range(length):
        g = rng.choice(_INVARIANCE_GENERATORS)
        if rng.randrange(2):
            g = g.inverse()
        w = g if w is None else w @ g
    if pair_sign(w) != 1:
        raise AssertionError("invariance word escaped the pair_sign kernel")
    return w


def alternate_system(seed=0, word_length=6):
    """A second transversal: each canonical representative multiplied on
    the left by a seeded random element of the invariance kernel, then
    shuffled.  phi over this system must agree with the canonical one
    exactly (up to numerics): the acid test of representative
    independence.  Stabilizer elements with pair_sign -1 would flip the
    corresponding factor, so they are excluded; longer words do not make
    the test stronger but do push gamma tau toward the boundary, where
    the series need far larger truncation."""
    rng = random.Random(seed)
    base = coset_reps(THETA0_2)
    reps = [invariance_word(rng, word_length) @ g for g in base.reps]
    rng.shuffle(reps)
    return CosetSystem(THETA0_2, tuple(reps), None)


def rep_independence_error(tau, seed=0, eps=1e-12, hiprec=False, dps=None):
    """Relative difference of phi across the two transversals at tau."""
    a = phi(tau, eps, hiprec, dps)
    b = phi(tau, eps, hiprec, dps, system=alternate_system(seed))
    if hiprec:
        with mp.workdps(dps or HIPREC_DPS):
            return float(abs(a.value - b.value) / abs(a.value))
    return float(abs(a.value - b.value) / abs(a.value))


def phi_modularity_error(gamma, tau, eps=1e-12, hiprec=False, dps=None):
    """|phi(gamma tau) / (chi_P(gamma) det(c tau+d)^30 phi(tau)) - 1|."""
    det = _det_ctd(gamma, tau, hiprec, dps)
    tg = act_tau(gamma, tau, hiprec, dps)
    lhs = phi(tg, eps, hiprec, dps).value
    base = phi(tau, eps, hiprec, dps).value
    if hiprec:
        with mp.workdps(dps or HIPREC_DPS):
            return float(abs(lhs / (chi_p(gamma) * det ** 30 * base) - 1))
    return float(abs(lhs / (chi_p(gamma) * det ** 30 * base) - 1))


@dataclass(frozen=True)
class LambdaEstimate:
    """Proportionality constant phi = lambda * (signed triple sum), with
    the per-sample ratios, their relative spread, and the normalization
    convention the number refers to."""
    value: complex
    ratios: tuple
    spread: float
    normalization: str = AZY_NORMALIZATION


def _median(xs):
    s = sorted(xs)
    n = len(s)
    if n % 2:
        return s[n // 2]
    return (s[n // 2 - 1] + s[n // 2]) / 2


def estimate_lambda(seed=0, samples=5, eps=1e-12, hiprec=False, dps=None,
                    cancellation_guard=1e-6):
    """Measure lambda = phi/azy at seeded sample points.  Points where the
    signed sum suffers catastrophic cancellation (|value| below
    cancellation_guard times the largest monomial) are redrawn."""
    import numpy as np
    rng = np.random.default_rng(seed)
    ratios = []
    attempts = 0
    while len(ratios) < samples:
        attempts += 1
        if attempts > 20 * samples:
            raise RuntimeError("sampling keeps hitting azy cancellation; widen the guard")
        tau = sample_tau(rng)
        av, _, amax = azy_eval(tau, eps, hiprec, dps)
        if abs(av) < cancellation_guard * amax:
            continue
        pv = phi(tau, eps, hiprec, dps)
        if hiprec:
            with mp.workdps(dps or HIPREC_DPS):
                ratios.append(pv.value / av)
        else:
            ratios.append(pv.value / av)
    med = complex(_median([float(r.real) for r in ratios]),
                  _median([float(r.imag) for r in ratios]))
    scale = abs(med)
    spread = max(float(abs(a - b)) for a in ratios for b in ratios) / scale
    if hiprec:
        with mp.workdps(dps or HIPREC_DPS):
            med_mp = mp.mpc(_median([r.real for r in ratios]),
                            _median([r.imag for r in ratios]))
        return LambdaEstimate(med_mp, tuple(ratios), spread)
    return LambdaEstimate(med, tuple(ratios), spread)


def geometric_crosscheck(taus, eps=1e-12, hiprec=False, dps=None):
    """Per-representative constancy of F_{gamma^{-1} M0} / phi_gamma over
    the sample points, plus the spread of (prod of all fifteen F) / phi.
    Returns (per_rep, product_spread) where per_rep maps each
    representative index to (sorted quadruple, relative spread)."""
    reps = coset_reps(THETA0_2).reps
    quads = [frozenset(act_set(g.inverse(), M0)) for g in reps]
    if len(set(quads)) != 15:
        raise RuntimeError("transversal does not hit all fifteen quadruples")
    per_rep = {}
    prod_ratios = []
    for i, (g, q) in enumerate(zip(reps, quads)):
        rs = []
        for tau in taus:
            fv = f_m(q, tau, eps, hiprec, dps)
            pg = phi_gamma(g, tau, eps, hiprec, dps).value
            rs.append(complex(fv / pg))
        spread = max(abs(a - b) for a in rs for b in rs) / abs(_median([r.real for r in rs]) + 1j * _median([r.imag for r in rs]))
        per_rep[i] = (tuple(sorted(q)), spread)
    for tau in taus:
        total = None
        for q in quads:
            fv = f_m(q, tau, eps, hiprec, dps)
            total = fv if total is None else total * fv
        pv = phi(tau, eps, hiprec, dps).value
        prod_ratios.append(complex(total / pv))
    med = complex(_median([r.real for r in prod_ratios]),
                  _median([r.imag for r in prod_ratios]))
    product_spread = max(abs(a - b) for a in prod_ratios for b in prod_ratios) / abs(med)
    return per_rep, product_spread
