"""The partial-dual genus polynomial.

For a connected graph the polynomial counts, per genus, the partial duals
over all edge subsets; its coefficients always sum to 2^m.  Subsets are
enumerated as a plain binary counter over edge indices, and the genus of
each dual is recomputed from scratch by counting boundary orbits of the
rewritten rotation successor (no incremental shortcuts).  Coefficients are
exact integers throughout.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import DisconnectedGraphError, RibbonGraph, is_connected

MAX_EDGES = 62


@dataclass(frozen=True)
class GenusPolynomial:
    """Dense nonnegative-integer coefficients indexed by genus, trailing zeros trimmed."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = [int(c) for c in self.coeffs]
        for c in cs:
            if c < 0:
                raise ValueError(f"negative coefficient {c}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no degree")
        return len(self.coeffs) - 1

    def total(self) -> int:
        return sum(self.coeffs)

    def to_text(self) -> str:
        """Render as ``c0 + c1*z + c2*z^2`` with zero terms omitted."""
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{k}")
        return " + ".join(terms) if terms else "0"

    def __str__(self) -> str:
        return self.to_text()

    @classmethod
    def monomial(cls, coeff: int, power: int) -> "GenusPolynomial":
        return cls((0,) * power + (coeff,))


def poly_eq(p: GenusPolynomial, q: GenusPolynomial) -> bool:
    return p.coeffs == q.coeffs


def poly_mul(p: GenusPolynomial, q: GenusPolynomial) -> GenusPolynomial:
    if p.is_zero or q.is_zero:
        return GenusPolynomial(())
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return GenusPolynomial(tuple(out))


def is_monomial(p: GenusPolynomial) -> bool:
    """Exactly one nonzero coefficient (constants included)."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    return sum(1 for c in p.coeffs if c) == 1


def is_log_concave(p: GenusPolynomial) -> bool:
    """c_k^2 >= c_{k-1} * c_{k+1} everywhere, with no internal zeros."""
    cs = p.coeffs
    support = [k for k, c in enumerate(cs) if c]
    if support and support[-1] - support[0] + 1 != len(support):
        return False
    for k in range(1, len(cs) - 1):
        if cs[k] * cs[k] < cs[k - 1] * cs[k + 1]:
            return False
    return True


def _histogram_range(
    sigma: tuple[int, ...],
    alpha: tuple[int, ...],
    edge_of: tuple[int, ...],
    m: int,
    lo: int,
    hi: int,
) -> list[int]:
    """Genus histogram of the partial duals for subset masks in [lo, hi)."""
    nd = len(sigma)
    hist = [0] * (m // 2 + 1)
    full = (1 << m) - 1
    sa = [sigma[alpha[d]] for d in range(nd)]
    rng = range(nd)
    for mask in range(lo, hi):
        succ = [sa[d] if (mask >> edge_of[d]) & 1 else sigma[d] for d in rng]
        v = 0
        seen = bytearray(nd)
        for s in rng:
            if not seen[s]:
                v += 1
                d = s
                while not seen[d]:
                    seen[d] = 1
                    d = succ[d]
        comp = full ^ mask
        succ = [sa[d] if (comp >> edge_of[d]) & 1 else sigma[d] for d in rng]
        f = 0
        seen = bytearray(nd)
        for s in rng:
            if not seen[s]:
                f += 1
                d = s
                while not seen[d]:
                    seen[d] = 1
                    d = succ[d]
        hist[(2 - v + m - f) >> 1] += 1
    return hist


def _histogram_star(args) -> list[int]:
    return _histogram_range(*args)


def gamma(g: RibbonGraph, *, workers: int = 1) -> GenusPolynomial:
    """The partial-dual genus polynomial of a connected graph.

    Coefficient ``k`` counts the edge subsets whose partial dual has genus
    ``k``.  With ``workers > 1`` the mask range is split by high bits into
    one contiguous chunk per worker and the per-chunk histograms are summed
    in chunk order, so the result is independent of the worker count.
    """
    g.validate()
    if not is_connected(g):
        raise DisconnectedGraphError("the genus polynomial requires a connected graph")
    m = g.num_edges
    if m > MAX_EDGES:
        raise ValueError(f"{m} edges exceeds the supported maximum of {MAX_EDGES}")
    if m == 0:
        return GenusPolynomial((1,))
    total = 1 << m
    if workers <= 1 or total < 4 * workers:
        hist = _histogram_range(g.sigma, g.alpha, g.dart_edge, m, 0, total)
    else:
        step = -(-total // workers)
        chunks = [
            (g.sigma, g.alpha, g.dart_edge, m, lo, min(lo + step, total))
            for lo in range(0, total, step)
        ]
        hist = [0] * (m // 2 + 1)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_histogram_star, chunks):
                for k, c in enumerate(part):
                    hist[k] += c
    return GenusPolynomial(tuple(hist))
