"""Certified evaluation of theta constants with reduced characteristics.

Series convention (all exponentials are in units of pi*i, i.e. exp(w) here
means e^{pi i w}):

    theta_m(tau) = sum_{n in Z^g} e^{pi i [ (n+m'/2)^T tau (n+m'/2)
                                            + (n+m'/2)^T m'' ]},

the z = 0 value of the classical series; it vanishes identically for odd m.
Second-order constants are Theta_{m'}(tau) = theta_{[m';0]}(2 tau), indexed
by m' in {00, 01, 10, 11} (this order fixes all matrix and vector layouts).

Truncation is over max-norm shells ||n||_inf <= R summed in a fixed order
(shells outward, lexicographic inside a shell, exactly rounded summation),
so results are bit-reproducible.  A term on shell r has modulus
e^{-pi (n+a)^T Y (n+a)} <= e^{-pi lam (r-1/2)^2} with lam the least
eigenvalue of Y = Im tau and a in [-1/2,1/2]^g, and genus-2 shells hold
8r points (2 at genus 1), giving the certified tail majorant

    tail(R) <= C(g) * sum_{r > R} r^{g-1} e^{-pi lam (r-1/2)^2},  C(2) = 8,

evaluated numerically with a geometric remainder.  Derivative series carry
an extra polynomial majorant (r+1/2)^2 and prefactor 4 pi.

The transformation factors under gamma in Sp(4,Z) are

    theta_{gamma.m}(gamma.tau) = kappa(gamma) chi_m(gamma)
                                 det(c tau + d)^{1/2} theta_m(tau),

where chi_m(gamma) = e^{2 pi i xi_m(gamma)} is an eighth root of unity
computed exactly from integer data, and kappa(gamma) is independent of m
with kappa^4 = e^{pi i Tr(b^T c)}.  kappa is never produced by a closed
formula here: kappa_numeric measures it against the principal branch of
det(c tau0 + d)^{1/2} at a probe point, and every downstream identity is
checked at fourth-power or modulus level where the branch cancels.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import NamedTuple

import mpmath as mp
import numpy as np

from .chars import (EVEN_CHARS, act_char_vectors, char_index, mdbl_of,
                    mprime_of, parity, reduction_sign)
from .numeric import HIPREC_DPS, fsum_complex, m2_det, mobius
from .siegel import SiegelPoint
from .symplectic import SymplecticMatrix, act_tau

MPRIME_ORDER = ((0, 0), (0, 1), (1, 0), (1, 1))


class ThetaValue(NamedTuple):
    """Value together with the analytic tail bound of the truncation used."""
    value: complex
    err: float


_lattice_cache = {}


def _lattice(g, R):
    """Lattice points with ||n||_inf <= R, shells outward, lexicographic
    within each shell."""
    key = (g, R)
    pts = _lattice_cache.get(key)
    if pts is None:
        out = []
        for r in range(R + 1):
            if g == 1:
                shell = [(-r,), (r,)] if r else [(0,)]
            else:
                shell = sorted({(i, j) for i in range(-r, r + 1) for j in range(-r, r + 1)
                                if max(abs(i), abs(j)) == r})
            out.extend(shell)
        pts = np.array(out, dtype=np.int64)
        _lattice_cache[key] = pts
    return pts


def _tail(lam, R, g=2, poly=0, scale=1.0):
    """Certified tail majorant for truncation radius R (see module docstring)."""
    if lam <= 0:
        raise ValueError("lambda_min must be positive")
    total = 0.0
    prev = math.inf
    r = R + 1
    while True:
        cnt = 8.0 * r if g == 2 else 2.0
        t = scale * cnt * (r + 0.5) ** poly * math.exp(-math.pi * lam * (r - 0.5) ** 2)
        total += t
        if t <= prev / 2 and (t <= total * 2.0 ** -60 or t < 1e-320):
            return total + t  # geometric remainder at ratio <= 1/2
        prev = t
        r += 1
        if r > R + 200000:
            raise RuntimeError("tail bound fails to certify; lambda_min too small")


def _radius(lam, eps, g=2, poly=0, scale=1.0):
    # analytic first guess: first-term majorant ~ scale*8r (r+1/2)^p
    # e^{-pi lam (r-1/2)^2} < eps, then walk to the minimal certified R
    guess = math.sqrt(max(1.0, math.log(max(8.0 * scale, 2.0) / eps)) / (math.pi * lam))
    R = max(1, int(guess) - 2)
    if R > 4000:
        raise RuntimeError(
            "truncation radius exceeds sanity cap; Im(tau) is too close to "
            "singular for direct summation")
    while _tail(lam, R, g, poly, scale) >= eps:
        R += 1
        if R > 4096:
            raise RuntimeError("truncation radius exceeds sanity cap")
    while R > 1 and _tail(lam, R - 1, g, poly, scale) < eps:
        R -= 1
    return R


def truncation_radius(tau, eps):
    """Smallest shell radius whose certified tail bound is below eps for a
    first-order theta constant at tau."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    return _radius(tau.lam_min, eps, g=tau.g)


def _series_value_double(T, a, b, R, g):
    pts = _lattice(g, R)
    if g == 1:
        v0 = pts[:, 0] + a[0]
        q = T[0][0] * v0 * v0 + 2 * b[0] * v0
    else:
        v0 = pts[:, 0] + a[0]
        v1 = pts[:, 1] + a[1]
        q = (T[0][0] * v0 * v0 + 2 * T[0][1] * v0 * v1 + T[1][1] * v1 * v1
             + 2 * (b[0] * v0 + b[1] * v1))
    return fsum_complex(np.exp(1j * np.pi * q))


def _series_value_mp(T, a, b, R, g):
    pts = _lattice(g, R)
    half = mp.mpf(1) / 2
    aa = [mp.mpf(2 * x) * half for x in a]
    bb = [mp.mpf(2 * x) * half for x in b]
    re, im = [], []
    for row in pts:
        if g == 1:
            v0 = row[0] + aa[0]
            q = T[0][0] * v0 * v0 + 2 * bb[0] * v0
        else:
            v0 = row[0] + aa[0]
            v1 = row[1] + aa[1]
            q = (T[0][0] * v0 * v0 + 2 * T[0][1] * v0 * v1 + T[1][1] * v1 * v1
                 + 2 * (bb[0] * v0 + bb[1] * v1))
        t = mp.expjpi(q)
        re.append(t.real)
        im.append(t.imag)
    return mp.mpc(mp.fsum(re), mp.fsum(im))


def theta_raw(mprime, mdbl, tau, eps=1e-12, hiprec=False, dps=None):
    """Theta constant for integer (possibly unreduced) characteristic
    vectors.  The m' part is reduced internally by an exact lattice shift;
    the m'' part is kept as given, so the classical shift sign
    theta_{m+2n} = (-1)^{m'.n''} theta_m comes out of the series itself."""
    g = tau.g
    a = tuple(Fraction(int(x) % 2, 2) for x in mprime)
    b = tuple(Fraction(int(x), 2) for x in mdbl)
    lam = tau.lam_min
    R = _radius(lam, eps, g=g)
    err = _tail(lam, R, g=g)
    if hiprec:
        with mp.workdps(dps or HIPREC_DPS):
            T = tau.entries_mp()
            af = [mp.mpf(x.numerator) / x.denominator for x in a]
            bf = [mp.mpf(x.numerator) / x.denominator for x in b]
            val = _series_value_mp(T, af, bf, R, g)
        return ThetaValue(val, err)
    T = tau.entries()
    val = _series_value_double(T, [float(x) for x in a], [float(x) for x in b], R, g)
    return ThetaValue(val, err)


def theta_constant(m, tau, eps=1e-12, hiprec=False, dps=None):
    """First-order theta constant for the reduced characteristic with 4-bit
    index m; exactly zero (with zero error) for odd m."""
    if parity(m) == -1:
        return ThetaValue(mp.mpc(0) if hiprec else 0j, 0.0)
    return theta_raw(mprime_of(m), mdbl_of(m), tau, eps, hiprec, dps)


def theta_constant_g1(a_bit, b_bit, tau1, eps=1e-12, hiprec=False, dps=None):
    """Genus-1 theta constant theta_[a;b](tau1) for a scalar point."""
    pt = tau1 if isinstance(tau1, SiegelPoint) else SiegelPoint([[tau1]])
    if (a_bit * b_bit) % 2:
        return ThetaValue(mp.mpc(0) if hiprec else 0j, 0.0)
    return theta_raw((a_bit,), (b_bit,), pt, eps, hiprec, dps)


def _doubled(tau, dps=None):
    # mpmath rounds every operation, mpc construction included, to the
    # ambient precision, so the payload must be doubled under an explicit
    # working precision at least as high as the one it was built with.
    mp_ent = tau._mp
    if mp_ent is not None:
        with mp.workdps(dps or HIPREC_DPS):
            mp_ent = tuple(tuple(z + z for z in row) for row in mp_ent)
    return SiegelPoint(2 * tau.mat, mp_entries=mp_ent)


def theta_second_order(mprime, tau, eps=1e-12, hiprec=False, dps=None):
    """Second-order constant Theta_{m'}(tau) = theta_{[m';0]}(2 tau)."""
    return theta_raw(mprime, (0, 0), _doubled(tau, dps), eps, hiprec, dps)


def theta_second_vector(tau, eps=1e-12, hiprec=False, dps=None):
    """The four second-order constants in MPRIME_ORDER."""
    return tuple(theta_second_order(mpv, tau, eps, hiprec, dps) for mpv in MPRIME_ORDER)


def theta_all_even(tau, eps=1e-12, hiprec=False, dps=None):
    """All ten even first-order constants, keyed by 4-bit index."""
    return {m: theta_constant(m, tau, eps, hiprec, dps) for m in EVEN_CHARS}


def theta_gradient(mprime, tau, eps=1e-12, hiprec=False, dps=None):
    """(d/dtau11, d/dtau12, d/dtau22) of Theta_{m'} at tau, the off-diagonal
    derivative counting the symmetric entry once.  Differentiating the
    2 tau series termwise gives weights 2 pi i v1^2, 4 pi i v1 v2,
    2 pi i v2^2 on the shifted lattice points v = n + m'/2."""
    lam2 = 2 * tau.lam_min
    R = _radius(lam2, eps, g=2, poly=2, scale=4 * math.pi)
    a0, a1 = mprime[0] / 2, mprime[1] / 2
    if hiprec:
        with mp.workdps(dps or HIPREC_DPS):
            T = _doubled(tau, dps).entries_mp()
            half = mp.mpf(1) / 2
            aa0, aa1 = mprime[0] * half, mprime[1] * half
            acc = [[[], []] for _ in range(3)]
            for row in _lattice(2, R):
                v0 = row[0] + aa0
                v1 = row[1] + aa1
                q = T[0][0] * v0 * v0 + 2 * T[0][1] * v0 * v1 + T[1][1] * v1 * v1
                t = mp.expjpi(q)
                for k, w in enumerate((v0 * v0, 2 * v0 * v1, v1 * v1)):
                    tw = t * w
                    acc[k][0].append(tw.real)
                    acc[k][1].append(tw.imag)
            tpi = 2j * mp.pi
            return tuple(tpi * mp.mpc(mp.fsum(acc[k][0]), mp.fsum(acc[k][1]))
                         for k in range(3))
    T = _doubled(tau).entries()
    pts = _lattice(2, R)
    v0 = pts[:, 0] + a0
    v1 = pts[:, 1] + a1
    q = T[0][0] * v0 * v0 + 2 * T[0][1] * v0 * v1 + T[1][1] * v1 * v1
    t = np.exp(1j * np.pi * q)
    tpi = 2j * math.pi
    return (tpi * fsum_complex(t * v0 * v0),
            tpi * fsum_complex(2 * t * v0 * v1),
            tpi * fsum_complex(t * v1 * v1))


# --- exact transformation factors ---------------------------------------


def xi_numerator(m, gamma):
    """Integer num with xi_m(gamma) = num/8, from
    xi = -(1/8)(m'^T b^T d m' + m''^T a^T c m'' - 2 m'^T b^T c m'')
        + (1/4) diag(a b^T)^T (d m' - c m'').
    The sign of the diag term is pinned by theta_{[10;00]}(tau + E11)
    = e^{pi i/4} theta_{[10;00]}(tau) together with probe agreement
    across all even characteristics."""
    mp1, mp2 = mprime_of(m)
    md1, md2 = mdbl_of(m)
    a, b, c, d = gamma.a, gamma.b, gamma.c, gamma.d

    def quad(u1, u2, M, w1, w2):
        return (u1 * (M[0][0] * w1 + M[0][1] * w2) + u2 * (M[1][0] * w1 + M[1][1] * w2))

    btd = ((b[0][0] * d[0][0] + b[1][0] * d[1][0], b[0][0] * d[0][1] + b[1][0] * d[1][1]),
           (b[0][1] * d[0][0] + b[1][1] * d[1][0], b[0][1] * d[0][1] + b[1][1] * d[1][1]))
    atc = ((a[0][0] * c[0][0] + a[1][0] * c[1][0], a[0][0] * c[0][1] + a[1][0] * c[1][1]),
           (a[0][1] * c[0][0] + a[1][1] * c[1][0], a[0][1] * c[0][1] + a[1][1] * c[1][1]))
    btc = ((b[0][0] * c[0][0] + b[1][0] * c[1][0], b[0][0] * c[0][1] + b[1][0] * c[1][1]),
           (b[0][1] * c[0][0] + b[1][1] * c[1][0], b[0][1] * c[0][1] + b[1][1] * c[1][1]))
    q = (quad(mp1, mp2, btd, mp1, mp2) + quad(md1, md2, atc, md1, md2)
         - 2 * quad(mp1, mp2, btc, md1, md2))
    dab = (a[0][0] * b[0][0] + a[0][1] * b[0][1], a[1][0] * b[1][0] + a[1][1] * b[1][1])
    v = (d[0][0] * mp1 + d[0][1] * mp2 - c[0][0] * md1 - c[0][1] * md2,
         d[1][0] * mp1 + d[1][1] * mp2 - c[1][0] * md1 - c[1][1] * md2)
    return -q + 2 * (dab[0] * v[0] + dab[1] * v[1])


_SQ2 = math.sqrt(0.5)
_CHI8 = (1 + 0j, _SQ2 + 1j * _SQ2, 1j, -_SQ2 + 1j * _SQ2,
         -1 + 0j, -_SQ2 - 1j * _SQ2, -1j, _SQ2 - 1j * _SQ2)


def xi_chi(m, gamma):
    """(xi_m(gamma) as a Fraction mod 1, chi_m(gamma) = e^{2 pi i xi}).
    chi is always an eighth root of unity."""
    num = xi_numerator(m, gamma)
    return Fraction(num % 8, 8), _CHI8[num % 8]


def transform_unit(m, gamma):
    """(n, k) with theta_n(gamma tau) = kappa(gamma) e^{pi i k/4}
    det(c tau + d)^{1/2} theta_m(tau), n the mod-2 reduction of the image
    characteristic and k in Z/8 folding chi_m together with the sign of
    that reduction.  Everything here is exact integer arithmetic."""
    mpv, mdv = act_char_vectors(gamma, m)
    k = xi_numerator(m, gamma) % 8
    if reduction_sign(mpv, mdv) < 0:
        k = (k + 4) % 8
    n = char_index((mpv[0] % 2, mpv[1] % 2), (mdv[0] % 2, mdv[1] % 2))
    return n, k


def trace_btc(gamma):
    """Tr(b^T c) = entrywise contraction of the b and c blocks."""
    b, c = gamma.b, gamma.c
    return (b[0][0] * c[0][0] + b[0][1] * c[0][1]
            + b[1][0] * c[1][0] + b[1][1] * c[1][1])


def kappa4(gamma):
    """Exact kappa(gamma)^4 = e^{pi i Tr(b^T c)} = +-1."""
    return -1 if trace_btc(gamma) % 2 else 1


def gamma_tilde(gamma):
    """[[a, 2b], [c/2, d]] for gamma with even c block; the element that
    governs second-order constants through the 2 tau substitution."""
    a, b, c, d = gamma.a, gamma.b, gamma.c, gamma.d
    if any(c[i][j] % 2 for i in range(2) for j in range(2)):
        raise ValueError("gamma_tilde requires c to be even")
    return SymplecticMatrix.from_blocks(
        a, tuple(tuple(2 * x for x in row) for row in b),
        tuple(tuple(x // 2 for x in row) for row in c), d)


_DEFAULT_PROBE_TAU = None


def _default_probe_tau():
    global _DEFAULT_PROBE_TAU
    if _DEFAULT_PROBE_TAU is None:
        _DEFAULT_PROBE_TAU = SiegelPoint.scaled_identity(1j)
    return _DEFAULT_PROBE_TAU


def kappa_probes(gamma, tau0=None, eps=1e-12, min_abs=1e-3):
    """kappa measured from every even probe characteristic with
    |theta_m(tau0)| > min_abs, as a dict m -> kappa.  All probes of a given
    gamma must agree; the spread is a correctness check on chi."""
    tau0 = tau0 or _default_probe_tau()
    tau_g = act_tau(gamma, tau0)
    _, den = mobius(gamma, tau0.entries())
    sqrt_det = cmath.sqrt(m2_det(den))
    out = {}
    for m in EVEN_CHARS:
        th = theta_constant(m, tau0, eps).value
        if abs(th) <= min_abs:
            continue
        n, k = transform_unit(m, gamma)
        th_g = theta_constant(n, tau_g, eps).value
        out[m] = th_g / (_CHI8[k] * sqrt_det * th)
    if not out:
        raise RuntimeError("all probe thetas too small at tau0; pick another probe point")
    return out


def kappa_numeric(gamma, tau0=None, eps=1e-12):
    """Theta multiplier kappa(gamma) measured numerically against the
    principal branch of det(c tau0 + d)^{1/2}.  Unimodular, and
    kappa^4 = e^{pi i Tr(b^T c)}; only branch-insensitive powers of the
    result are meaningful."""
    probes = kappa_probes(gamma, tau0, eps)
    return next(iter(probes.values()))
