"""Exact eccentricity spectra and energy/radius bounds for complete
multipartite graphs, plus the antipodal strong-product spectrum and the
equienergetic pair construction built from it.

The spectrum of K_{n1,...,np} splits into three regimes:

* every class of size >= 2: twice the adjacency spectrum of the complement
  (a disjoint union of cliques), i.e. 2(ni - 1) per class and -2 with
  multiplicity n - p;
* every class a singleton: the complete graph, n - 1 and -1 repeated;
* mixed: the singleton classes form a dominating clique.  Structural
  eigenvalues -2 and -1 come from differences inside the large classes and
  inside the clique; the remaining eigenvalues belong to the equitable
  quotient over (large classes..., clique).  With exactly one large class the
  quotient is 2x2 and its roots are kept as exact quadratic surds; with
  several, repeated class sizes are deflated exactly and the rest are the
  simple roots of a small integer characteristic polynomial.
"""

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import (
    DisconnectedSpecError,
    NotDivisibleError,
    PreconditionViolatedError,
)
from .exact import Surd, quadratic_roots, simplify_value
from .graphs import Graph, as_spec, build_multipartite, complete, strong_product

CASE_ALL_PARTS_GE_2 = "ALL_PARTS_GE_2"
CASE_COMPLETE_GRAPH = "COMPLETE_GRAPH"
CASE_SPLIT_MIXED = "SPLIT_MIXED"
CASE_PRODUCT_THM5 = "PRODUCT_THM5"


@dataclass(frozen=True)
class ClosedFormSpectrum:
    """Eigenvalues with multiplicities, sorted descending, plus provenance.

    Values are exact (int or Surd) wherever the construction allows; only the
    mixed regime with several distinct large class sizes introduces floats,
    as simple roots of an integer polynomial.
    """

    entries: tuple[tuple[object, int], ...]
    case_tag: str
    params: dict = field(default_factory=dict)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    def eigenvalues(self) -> np.ndarray:
        """Expanded float eigenvalues, descending."""
        out: list[float] = []
        for value, mult in self.entries:
            out.extend([float(value)] * mult)
        return np.array(sorted(out, reverse=True))

    def grouped(self, tol: float) -> list[tuple[float, int]]:
        """(value, multiplicity) pairs with entries closer than tol merged."""
        merged: list[list] = []
        for value, mult in self.entries:
            fv = float(value)
            if merged and abs(merged[-1][0] - fv) <= tol:
                total = merged[-1][1] + mult
                merged[-1][0] = (merged[-1][0] * merged[-1][1] + fv * mult) / total
                merged[-1][1] = total
            else:
                merged.append([fv, mult])
        return [(v, m) for v, m in merged]

    def _has_float(self) -> bool:
        return any(isinstance(v, float) for v, _ in self.entries)

    def trace(self):
        """Sum of value*multiplicity; exact unless float entries are present."""
        if self._has_float():
            return float(sum(float(v) * m for v, m in self.entries))
        total = Surd(0)
        for value, mult in self.entries:
            total = total + Surd(value) * mult if isinstance(value, (int, Fraction)) else total + value * mult
        return simplify_value(total)

    def energy_exact(self):
        """Sum of |value|*multiplicity as an exact number, or None with floats."""
        if self._has_float():
            return None
        total = Surd(0)
        for value, mult in self.entries:
            exact = Surd(value) if isinstance(value, (int, Fraction)) else value
            total = total + abs(exact) * mult
        return simplify_value(total)

    def energy(self) -> float:
        exact = self.energy_exact()
        if exact is not None:
            return float(exact)
        return float(sum(abs(float(v)) * m for v, m in self.entries))


def _sorted_entries(pairs) -> tuple[tuple[object, int], ...]:
    merged: dict = {}
    order: list = []
    for value, mult in pairs:
        if mult <= 0:
            continue
        value = simplify_value(value)
        key = value if not isinstance(value, float) else ("f", value)
        if key in merged:
            merged[key][1] += mult
        else:
            item = [value, mult]
            merged[key] = item
            order.append(item)
    order.sort(key=lambda item: float(item[0]), reverse=True)
    return tuple((v, m) for v, m in order)


def split_quadratic_coefficients(p1: int, p2: int) -> tuple[int, int]:
    """Coefficients (b, c) of x**2 - b*x + c for the split regime: an
    independent set of p1 vertices joined to a clique on p2 vertices."""
    return 2 * p1 + p2 - 3, p1 * p2 - 2 * p1 - 2 * p2 + 2


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        if pi:
            for j, qj in enumerate(q):
                out[i + j] += pi * qj
    return out


def _poly_sub(p: list[int], q: list[int]) -> list[int]:
    width = max(len(p), len(q))
    p = [0] * (width - len(p)) + p
    q = [0] * (width - len(q)) + q
    return [a - b for a, b in zip(p, q)]


def _arrow_char_poly(distinct_sizes: list[tuple[int, int]], singles: int) -> list[int]:
    # det(xI - Q) for the quotient over distinct large-class sizes plus the
    # clique of singletons: Q = diag(2(m-1)) bordered by a column of
    # `singles`, a row of class totals, and corner singles-1.
    diag = [2 * (m - 1) for m, _ in distinct_sizes]
    totals = [m * count for m, count in distinct_sizes]
    poly = [1, -(singles - 1)]
    for d in diag:
        poly = _poly_mul(poly, [1, -d])
    for t, total in enumerate(totals):
        term = [singles * total]
        for u, d in enumerate(diag):
            if u != t:
                term = _poly_mul(term, [1, -d])
        poly = _poly_sub(poly, term)
    return poly


def _real_roots(int_coeffs: list[int]) -> list[float]:
    roots = np.roots(np.array(int_coeffs, dtype=np.float64))
    scale = 1.0 + max(abs(r) for r in roots)
    if np.abs(roots.imag).max() > 1e-9 * scale:
        raise ArithmeticError("quotient polynomial produced non-real roots")
    return sorted((float(r) for r in roots.real), reverse=True)


def multipartite_spectrum_closed(parts) -> ClosedFormSpectrum:
    """Exact eccentricity spectrum of the complete multipartite graph.

    Part lists with a single class are rejected: they describe an edgeless
    graph with no finite eccentricities.
    """
    spec = as_spec(parts)
    if spec.p == 1:
        raise DisconnectedSpecError(
            f"{spec} has a single class and therefore no edges"
        )
    n, p = spec.n, spec.p
    params: dict = {"n": n, "p": p, "parts": spec.parts, "small_n": n < 4}
    large = [x for x in spec.parts if x >= 2]
    singles = p - len(large)

    if not large:
        entries = _sorted_entries([(n - 1, 1), (-1, n - 1)])
        return ClosedFormSpectrum(entries, CASE_COMPLETE_GRAPH, params)

    if singles == 0:
        pairs = [(2 * (size - 1), count) for size, count in Counter(large).items()]
        pairs.append((-2, n - p))
        return ClosedFormSpectrum(_sorted_entries(pairs), CASE_ALL_PARTS_GE_2, params)

    p1 = sum(large)
    p2 = singles
    params.update({"independent_size": p1, "clique_size": p2, "large_classes": len(large)})
    pairs = [(-2, p1 - len(large)), (-1, p2 - 1)]
    if len(large) == 1:
        b, c = split_quadratic_coefficients(p1, p2)
        params["quadratic"] = (b, c)
        r_plus, r_minus = quadratic_roots(b, c)
        pairs.extend([(r_plus, 1), (r_minus, 1)])
    else:
        counts = sorted(Counter(large).items(), reverse=True)
        for size, count in counts:
            if count >= 2:
                pairs.append((2 * (size - 1), count - 1))
        poly = _arrow_char_poly(counts, singles)
        params["quotient_poly"] = tuple(poly)
        pairs.extend((root, 1) for root in _real_roots(poly))
    return ClosedFormSpectrum(_sorted_entries(pairs), CASE_SPLIT_MIXED, params)


def multipartite_energy_closed(parts) -> float:
    """Closed-form eccentricity energy: sum of |eigenvalue| * multiplicity."""
    return multipartite_spectrum_closed(parts).energy()


def radius_upper_bound(n: int, allow_small: bool = False) -> float:
    """Largest possible eccentricity spectral radius over the multipartite
    family on n vertices: (n-2) + sqrt(n^2 - 3n + 3), attained by the star."""
    if n < 4 and not allow_small:
        raise PreconditionViolatedError(f"bound is stated for n >= 4, got {n}")
    return (n - 2) + math.sqrt(n * n - 3 * n + 3)


def energy_bounds(n: int, allow_small: bool = False) -> tuple[float, float]:
    """(lower, upper) bounds for the eccentricity energy on n vertices.

    The lower bound 2n-2 is the complete graph's energy; the upper bound is
    attained by the star.
    """
    if n < 4 and not allow_small:
        raise PreconditionViolatedError(f"bounds are stated for n >= 4, got {n}")
    return float(2 * n - 2), 2 * (n - 2) + 2 * math.sqrt(n * n - 3 * n + 3)


def antipodal_product_spectrum(m: int, a: int, d: int, n_h: int) -> ClosedFormSpectrum:
    """Eccentricity spectrum of G (x) H for an a-antipodal G of order m and
    diameter d, strong-multiplied by any connected H of order n_h with
    diameter below d: d*n_h*(a-1), 0 and -d*n_h with multiplicities m/a,
    m(n_h - 1) and (m/a)(a-1)."""
    if m < 1 or a < 1 or n_h < 1:
        raise PreconditionViolatedError("m, a and n_h must be positive")
    if m % a != 0:
        raise NotDivisibleError(f"fibre size {a} does not divide order {m}")
    if d < 2:
        raise PreconditionViolatedError(f"diameter must be at least 2, got {d}")
    entries = _sorted_entries(
        [
            (d * n_h * (a - 1), m // a),
            (0, m * (n_h - 1)),
            (-d * n_h, (m // a) * (a - 1)),
        ]
    )
    params = {"m": m, "a": a, "d": d, "n_h": n_h}
    return ClosedFormSpectrum(entries, CASE_PRODUCT_THM5, params)


def equienergetic_pair(n: int, i: int) -> tuple[Graph, Graph, int]:
    """A pair of non-cospectral graphs sharing eccentricity energy 16(n-1).

    The first graph is the strong product of the balanced bipartite graph
    K_{n,n} with an edge; the second is K_{n+i,n,n,n-i}.  i = 0 gives the
    balanced four-class partner, i up to n-2 keeps every class size >= 2.
    """
    if n < 2:
        raise PreconditionViolatedError(f"construction needs n >= 2, got {n}")
    if not 0 <= i <= n - 2:
        raise PreconditionViolatedError(f"offset must satisfy 0 <= i <= n-2, got {i}")
    product = strong_product(build_multipartite([n, n]), complete(2))
    partner = build_multipartite([n + i, n, n, n - i])
    return product, partner, 16 * (n - 1)
