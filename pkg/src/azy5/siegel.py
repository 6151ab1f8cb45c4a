"""Points of the Siegel upper half-space: complex symmetric g x g matrices
with positive definite imaginary part (g = 1 or 2 here).

The JSON interchange format is
    {"g": 2, "entries": [[[re, im], [re, im]], [[re, im], [re, im]]]}
with entries listed row-major.
"""

from __future__ import annotations

import numpy as np

from .numeric import sym2_eig_bounds, to_mpc


class SiegelPoint:
    """Immutable Siegel upper half-space point.  Entries are stored as a
    numpy complex matrix, symmetrized on construction; lam_min is the
    smallest eigenvalue of the imaginary part and is required positive.

    A point may additionally carry high-precision entries (nested mpc
    tuples, already symmetric) so that transformed points keep full
    precision along the mpmath code path; entries_mp() prefers them."""

    __slots__ = ("g", "mat", "lam_min", "_mp")

    def __init__(self, entries, mp_entries=None):
        m = np.asarray(entries, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] not in (1, 2):
            raise ValueError("expected a 1x1 or 2x2 matrix")
        if not np.allclose(m, m.T, rtol=0, atol=1e-12 * (1 + np.abs(m).max())):
            raise ValueError("tau must be symmetric")
        m = (m + m.T) / 2
        y = m.imag
        if m.shape[0] == 1:
            lam = float(y[0, 0])
        else:
            lam, _ = sym2_eig_bounds(((y[0, 0], y[0, 1]), (y[1, 0], y[1, 1])))
        if not lam > 0:
            raise ValueError("Im tau must be positive definite")
        object.__setattr__(self, "g", m.shape[0])
        object.__setattr__(self, "mat", m)
        object.__setattr__(self, "lam_min", float(lam))
        object.__setattr__(self, "_mp", mp_entries)
        self.mat.setflags(write=False)

    def __setattr__(self, name, value):
        raise AttributeError("SiegelPoint is immutable")

    def __repr__(self):
        rows = "; ".join(" ".join(f"{z:.6g}" for z in row) for row in self.mat)
        return f"SiegelPoint[{rows}]"

    def entries(self):
        """Entries as nested tuples of Python complex."""
        return tuple(tuple(complex(z) for z in row) for row in self.mat)

    def entries_mp(self):
        """Entries as nested tuples of mpc: the carried high-precision data
        when present, otherwise the (exactly representable) double entries."""
        if self._mp is not None:
            return self._mp
        return tuple(tuple(to_mpc(z) for z in row) for row in self.mat)

    def to_json(self):
        return {"g": self.g,
                "entries": [[[z.real, z.imag] for z in row] for row in self.mat]}

    @classmethod
    def from_json(cls, data):
        g = int(data["g"])
        rows = data["entries"]
        if len(rows) != g or any(len(r) != g for r in rows):
            raise ValueError("entries shape does not match g")
        m = [[complex(e[0], e[1]) for e in row] for row in rows]
        return cls(m)

    @classmethod
    def scaled_identity(cls, t=1j, g=2):
        return cls(np.eye(g) * t)


def sample_tau(rng, scale=0.1):
    """Seeded generic sample: tau = i(1 + S) + scale*B with S symmetric PSD
    of spectral norm <= 0.5 and B symmetric with entries in [-1, 1].  The
    imaginary part then has lambda_min >= 1."""
    A = rng.uniform(-1.0, 1.0, size=(2, 2))
    S = A @ A.T
    _, lam_max = sym2_eig_bounds(((S[0, 0], S[0, 1]), (S[1, 0], S[1, 1])))
    if lam_max > 0.5:
        S = S * (0.5 / lam_max)
    B = rng.uniform(-1.0, 1.0, size=(2, 2))
    B = (B + B.T) / 2
    return SiegelPoint(1j * (np.eye(2) + S) + scale * B)


def sample_taus(seed, count, scale=0.1):
    rng = np.random.default_rng(seed)
    return [sample_tau(rng, scale) for _ in range(count)]
