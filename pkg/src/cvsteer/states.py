r"""Constructors for the two-mode Gaussian states used throughout the package.

Every constructor returns a 4x4 covariance matrix in (x1, p1, x2, p2)
ordering with vacuum variance 1/2. Mode 1 is the steered/conditioned mode A,
mode 2 is the measured mode B.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .phase_space import canonical_symplectic_eigenvalues

__all__ = [
    "TmstSpec",
    "CanonicalForm",
    "tmst_cm",
    "twb_cm",
    "swns_cm",
    "canonical_cm",
    "gqd_sequence",
    "state_from_dict",
]


@dataclass(frozen=True)
class TmstSpec:
    r"""Two-mode squeezed thermal state: thermal modes of purity muA and muB
    coupled by a two-mode squeezer of strength r.

    Purity 0 is admitted as the infinite-temperature boundary so the scalar
    criteria remain evaluable there, but no covariance matrix exists for it.
    """

    muA: float
    muB: float
    r: float

    def __post_init__(self) -> None:
        for name in ("muA", "muB"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1.0) or not math.isfinite(v):
                raise ValueError(f"{name} must lie in [0, 1], got {v}")
        if not (self.r >= 0.0) or not math.isfinite(self.r):
            raise ValueError(f"r must be a finite value >= 0, got {self.r}")

    def abc(self) -> tuple[float, float, float]:
        """Canonical parameters (a, b, c) with correlation block diag(c, -c)."""
        muA, muB, r = self.muA, self.muB, self.r
        if muA == 0.0 or muB == 0.0:
            raise ValueError("purity 0 has no finite covariance parameters")
        ch = math.cosh(2.0 * r)
        sh = math.sinh(2.0 * r)
        quarter = 1.0 / (4.0 * muA * muB)
        a = (-muA + muB + (muA + muB) * ch) * quarter
        b = (muA - muB + (muA + muB) * ch) * quarter
        c = (muA + muB) * sh * quarter
        return a, b, c


@dataclass(frozen=True)
class CanonicalForm:
    r"""Canonical two-mode parameters: cm = [[a I, diag(c1, c2)], [diag(c1, c2), b I]].

    Local purities force a >= 1/2 and b >= 1/2; that much is enforced here.
    Full physicality (smallest symplectic eigenvalue >= 1/2) is checked on
    construction and recorded in ``physical`` but deliberately not enforced,
    so parameter-space searches can probe the boundary.
    """

    a: float
    b: float
    c1: float
    c2: float
    physical: bool = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        for name in ("a", "b"):
            v = getattr(self, name)
            if not (v >= 0.5) or not math.isfinite(v):
                raise ValueError(f"{name} must be >= 1/2, got {v}")
        for name in ("c1", "c2"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        a, b, c1, c2 = self.a, self.b, self.c1, self.c2
        psd = (a * b - c1 * c1) > -1e-12 and (a * b - c2 * c2) > -1e-12
        nu_min = canonical_symplectic_eigenvalues(a, b, c1, c2)[0] if psd else 0.0
        object.__setattr__(self, "physical", bool(psd and nu_min >= 0.5 - 1e-9))

    def __iter__(self):
        return iter((self.a, self.b, self.c1, self.c2))


def tmst_cm(spec: TmstSpec) -> np.ndarray:
    r"""Covariance matrix of a two-mode squeezed thermal state.

    Raises ValueError when either purity is 0 (the matrix diverges there).
    """
    a, b, c = spec.abc()
    return canonical_cm(a, b, c, -c)


def twb_cm(r: float) -> np.ndarray:
    r"""Covariance matrix of a twin-beam state of squeezing r.

    Built from the mean photon number per beam Ns = sinh(r)^2:
    a = b = Ns + 1/2, c1 = -c2 = sqrt(Ns (Ns + 1)). Coincides with
    tmst_cm(TmstSpec(1, 1, r)) and provides an independent route to it.
    """
    if not (r >= 0.0) or not math.isfinite(r):
        raise ValueError(f"r must be a finite value >= 0, got {r}")
    ns = math.sinh(r) ** 2
    c = math.sqrt(ns * (1.0 + ns))
    return canonical_cm(ns + 0.5, ns + 0.5, c, -c)


def swns_cm(muA: float, muB: float) -> np.ndarray:
    r"""A separable two-mode state whose conditional states are nonclassical.

    Construction: two thermal modes of purity muA, muB are sent through a
    single-mode squeezer with quadrature map diag(e^r, e^-r) on each mode
    (r = (1/4) ln((muA + 16 muB)/(16 muA + muB))), then a balanced mixer, then
    a two-mode squeezer of strength ln 2. The output is already in canonical
    form for every purity pair, and for small enough purities it is separable
    yet conditionally nonclassical under homodyne detection of mode B.
    """
    for name, v in (("muA", muA), ("muB", muB)):
        if not (0.0 < v <= 1.0) or not math.isfinite(v):
            raise ValueError(f"{name} must lie in (0, 1], got {v}")
    r = 0.25 * math.log((muA + 16.0 * muB) / (16.0 * muA + muB))
    big_r = math.log(2.0)
    phi = math.pi / 4.0
    eye = np.eye(2)
    sz = np.diag([1.0, -1.0])
    s1 = np.diag([math.exp(r), math.exp(-r), math.exp(r), math.exp(-r)])
    mixer = np.block(
        [[math.cos(phi) * eye, math.sin(phi) * eye],
         [-math.sin(phi) * eye, math.cos(phi) * eye]]
    )
    s2 = np.block(
        [[math.cosh(big_r) * eye, math.sinh(big_r) * sz],
         [math.sinh(big_r) * sz, math.cosh(big_r) * eye]]
    )
    thermal = np.diag([0.5 / muA, 0.5 / muA, 0.5 / muB, 0.5 / muB])
    m = s2 @ mixer @ s1
    return m @ thermal @ m.T


def canonical_cm(*args) -> np.ndarray:
    r"""Assemble the 4x4 covariance matrix of a canonical form.

    Accepts a CanonicalForm (or any iterable of four numbers) or four scalars
    a, b, c1, c2. Unphysical parameter sets are assembled as-is; physicality is
    flagged on CanonicalForm, not enforced here.
    """
    if len(args) == 1:
        a, b, c1, c2 = (float(v) for v in args[0])
    elif len(args) == 4:
        a, b, c1, c2 = (float(v) for v in args)
    else:
        raise TypeError("canonical_cm takes a CanonicalForm or four scalars")
    return np.array(
        [
            [a, 0.0, c1, 0.0],
            [0.0, a, 0.0, c2],
            [c1, 0.0, b, 0.0],
            [0.0, c2, 0.0, b],
        ]
    )


def gqd_sequence(n: int) -> CanonicalForm:
    r"""Element n of a family of states that stay weakly nonclassically
    steerable from B to A while both their Gaussian discords drop to zero:
    a = (n+2)/(2n+1), b = n, c1 = 1/sqrt(2n), c2 = -sqrt(2n/(2n+1)).

    Every element is physical, with the weak-criterion value exactly
    n/(2n+1); n must be an integer greater than 2.
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise ValueError(f"n must be an integer > 2, got {n!r}")
    if n <= 2:
        raise ValueError(f"n must be > 2, got {n}")
    n = int(n)
    return CanonicalForm(
        (n + 2.0) / (2.0 * n + 1.0),
        float(n),
        1.0 / math.sqrt(2.0 * n),
        -math.sqrt(2.0 * n / (2.0 * n + 1.0)),
    )


def _require_keys(d: dict, kind: str, keys: tuple[str, ...]) -> list[float]:
    missing = [k for k in keys if k not in d]
    if missing:
        raise ValueError(f"state spec kind {kind!r} needs fields {missing}")
    return [d[k] for k in keys]


def state_from_dict(d: dict) -> tuple[np.ndarray, TmstSpec | None]:
    r"""Build a covariance matrix from a JSON-style state description.

    Supported kinds:
        {"kind": "tmst", "muA": _, "muB": _, "r": _}
        {"kind": "twb", "r": _}
        {"kind": "canonical", "a": _, "b": _, "c1": _, "c2": _}
        {"kind": "swns", "muA": _, "muB": _}
        {"kind": "gqd_seq", "n": _}
        {"kind": "cm", "matrix": 16 numbers, row-major (flat or nested)}

    Returns (cm, spec) where spec is the TmstSpec for the "tmst" and "twb"
    kinds and None otherwise. Raises ValueError for malformed input.
    """
    if not isinstance(d, dict):
        raise ValueError("state spec must be a JSON object")
    kind = d.get("kind")
    if kind == "tmst":
        mu_a, mu_b, r = _require_keys(d, kind, ("muA", "muB", "r"))
        spec = TmstSpec(float(mu_a), float(mu_b), float(r))
        return tmst_cm(spec), spec
    if kind == "twb":
        (r,) = _require_keys(d, kind, ("r",))
        spec = TmstSpec(1.0, 1.0, float(r))
        return twb_cm(float(r)), spec
    if kind == "canonical":
        a, b, c1, c2 = _require_keys(d, kind, ("a", "b", "c1", "c2"))
        return canonical_cm(float(a), float(b), float(c1), float(c2)), None
    if kind == "swns":
        mu_a, mu_b = _require_keys(d, kind, ("muA", "muB"))
        return swns_cm(float(mu_a), float(mu_b)), None
    if kind == "gqd_seq":
        (n,) = _require_keys(d, kind, ("n",))
        if isinstance(n, float) and not n.is_integer():
            raise ValueError(f"gqd_seq n must be an integer, got {n}")
        return canonical_cm(gqd_sequence(int(n))), None
    if kind == "cm":
        (raw,) = _require_keys(d, kind, ("matrix",))
        m = np.asarray(raw, dtype=float)
        if m.size != 16:
            raise ValueError(f"cm matrix needs 16 entries, got {m.size}")
        return m.reshape(4, 4), None
    raise ValueError(f"unknown state kind {kind!r}")
