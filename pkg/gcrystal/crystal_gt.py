"""
The Gelfand-Tsetlin geometric crystal on GT_n^{<=m}.

Phi sends a pattern to a matrix in (B^-)^{<=m} and Psi reads it back through flag-minor
ratios. The crystal operators act by the unipotent sandwich x_j(.) Phi(z) x_j(.). When
m >= n there are closed subtraction-free formulas for the same maps; those are the only
route available over TropInt.
"""
from __future__ import annotations

import logging
from collections.abc import Sequence
from functools import reduce
from typing import Any

from gcrystal.datatypes import CrystalData, GTPattern, MinorIndex, gt_indices
from gcrystal.errors import CapabilityError, InputError, VanishingMinor
from gcrystal.matrices import SfMatrix, chevalley, flag_minor, interval, minor, phi_factors
from gcrystal.semifield import Semifield, gmax

logger = logging.getLogger(__name__)


def _check_index(z: GTPattern, j: int) -> None:
    if not 1 <= j < z.n:
        raise InputError(f"GT crystal index {j} out of range [1, {z.n - 1}]")


def phi_param(z: GTPattern) -> SfMatrix:
    """Phi(z) = W^p(z_pp, z_{p,p+1}/z_pp, ...) ... W^1(z_11, z_12/z_11, ...)."""
    return reduce(lambda a, b: a @ b, phi_factors(z))


def psi_param(a: SfMatrix, m: int) -> GTPattern:
    """
    Psi: z_{i,j} = Delta_{[i,j]}(A)/Delta_{[i+1,j]}(A) over the index set of GT_n^{<=m}.
    Raises VanishingMinor when a denominator is zero.
    """
    sf = a.semifield
    if not sf.has_subtraction:
        raise CapabilityError("Psi reads flag minors, which need subtraction")
    cache: dict[tuple[int, int], Any] = {}

    def delta(i: int, j: int) -> Any:
        if (i, j) not in cache:
            cache[(i, j)] = flag_minor(a, interval(i, j))
        return cache[(i, j)]

    entries = {}
    for i, j in gt_indices(m, a.rows):
        den = delta(i + 1, j)
        if sf.is_zero(den):
            raise VanishingMinor(f"Delta_[{i + 1},{j}] vanishes")
        entries[(i, j)] = delta(i, j) / den
    return GTPattern(m, a.rows, entries)


def gt_shape(z: GTPattern) -> tuple[Any, ...]:
    return z.shape()


def gt_maps(z: GTPattern, j: int) -> CrystalData:
    """
    gammabar = diag(Phi(z)), epsbar_j = M_{j+1,j+1}/M_{j+1,j} and phibar_j = M_{j,j}/M_{j+1,j}
    with M = Phi(z). Subtraction-free, so this runs in both carriers.
    """
    _check_index(z, j)
    mat = phi_param(z)
    gamma = tuple(mat.entry(k, k) for k in range(1, z.n + 1))
    below = mat.entry(j + 1, j)
    return CrystalData(gamma, mat.entry(j + 1, j + 1) / below, mat.entry(j, j) / below)


def gt_e(z: GTPattern, j: int, c: Any) -> GTPattern:
    """ebar_j^c(z) = Psi(x_j((c - 1) phibar_j) Phi(z) x_j((c^-1 - 1) epsbar_j))."""
    _check_index(z, j)
    sf = z.semifield
    if not sf.has_subtraction:
        raise CapabilityError("the matrix route of ebar needs subtraction; use gt_e_explicit")
    data = gt_maps(z, j)
    left = chevalley(z.n, j, (c - sf.one) * data.phi, sf)
    right = chevalley(z.n, j, (sf.one / c - sf.one) * data.eps, sf)
    return psi_param(left @ phi_param(z) @ right, z.m)


###########
# Explicit formulas (m >= n)
###########


def _require_full(z: GTPattern) -> None:
    if z.m < z.n:
        raise InputError(f"explicit GT formulas need m >= n, got m={z.m}, n={z.n}")


def diamond(z: GTPattern, i: int, j: int) -> Any:
    """phi_{i,j} = z_{i-1,j} z_{i,j} / (z_{i-1,j-1} z_{i,j+1}) for 2 <= i <= j < n."""
    return z[(i - 1, j)] * z[(i, j)] / (z[(i - 1, j - 1)] * z[(i, j + 1)])


def _diamond_row(z: GTPattern, j: int) -> list[Any]:
    """[phi_{2,j}, ..., phi_{j,j}]."""
    return [diamond(z, i, j) for i in range(2, j + 1)]


def gt_maps_explicit(z: GTPattern, j: int) -> CrystalData:
    """Closed forms for gammabar, epsbar_j and phibar_j in terms of diamond ratios."""
    _check_index(z, j)
    _require_full(z)
    sf = z.semifield
    ratios = _diamond_row(z, j)
    eps_terms = [sf.one / sf.product(ratios[: k - 1]) for k in range(1, j + 1)]
    phi_terms = [sf.product(ratios[k - 1 :]) for k in range(1, j + 1)]
    eps = z[(1, j + 1)] / z[(1, j)] * gmax(eps_terms, sf)
    phi = z[(j, j)] / z[(j + 1, j + 1)] * gmax(phi_terms, sf)
    return CrystalData(_gamma_rows(z, sf), eps, phi)


def _gamma_rows(z: GTPattern, sf: Semifield) -> tuple[Any, ...]:
    gamma = []
    for j in range(1, z.n + 1):
        above = sf.product(z.row(j - 1)) if j > 1 else sf.one
        gamma.append(sf.product(z.row(j)) / above)
    return tuple(gamma)


def gt_e_explicit(z: GTPattern, j: int, c: Any) -> GTPattern:
    """
    z'_{i,j} = z_{i,j} C_{i,j}/C_{i+1,j} with C_{i,j} = sum_{k=1}^j c^{[k >= i]} phi_{2,j} ... phi_{k,j}.
    Only row j moves.
    """
    _check_index(z, j)
    _require_full(z)
    sf = z.semifield
    ratios = _diamond_row(z, j)
    paths = [sf.product(ratios[: k - 1]) for k in range(1, j + 1)]

    def big_c(i: int) -> Any:
        return sf.sum(c * p if k >= i else p for k, p in enumerate(paths, start=1))

    cs = [big_c(i) for i in range(1, j + 2)]
    return z.with_entries({(i, j): z[(i, j)] * cs[i - 1] / cs[i] for i in range(1, j + 1)})


###########
# Decoration
###########


def gt_decoration(z: GTPattern) -> Any:
    """
    F(z) = sum z_{i,j+1}/z_{i,j} + sum_{i <= m-1} z_{i,j}/z_{i+1,j+1}, plus the corner z_{m,m}
    when m < n.
    """
    sf = z.semifield
    terms = []
    for i, j in gt_indices(z.m, z.n):
        if j < z.n:
            terms.append(z[(i, j + 1)] / z[(i, j)])
            if i < z.m:
                terms.append(z[(i, j)] / z[(i + 1, j + 1)])
    if z.m < z.n:
        terms.append(z[(z.m, z.m)])
    return sf.sum(terms)


def _ratio(mat: SfMatrix, num: MinorIndex, den: MinorIndex) -> Any:
    d = minor(mat, den)
    if mat.semifield.is_zero(d):
        raise VanishingMinor(f"minor {den} vanishes")
    return minor(mat, num) / d


def gt_decoration_minors(z: GTPattern) -> Any:
    """The same decoration written as ratios of minors of Phi(z)."""
    m, n = z.m, z.n
    mat = phi_param(z)
    sf = mat.semifield
    terms = []
    for k in range(1, min(m - 1, n - 1) + 1):
        den = MinorIndex(interval(k + 1, n), interval(1, n - k))
        first = MinorIndex((k,) + interval(k + 2, n), interval(1, n - k))
        second = MinorIndex(interval(k + 1, n), interval(1, n - k - 1) + (n - k + 1,))
        terms.append(_ratio(mat, first, den) + _ratio(mat, second, den))
    if m < n:
        den = MinorIndex(interval(m + 1, n), interval(1, n - m))
        terms.append(_ratio(mat, MinorIndex((m,) + interval(m + 2, n), interval(1, n - m)), den))
        for j in range(1, n - m + 1):
            rows = interval(m + 1, m + j)
            terms.append(_ratio(mat, MinorIndex(rows, interval(1, j - 1) + (j + 1,)), MinorIndex(rows, interval(1, j))))
    return sf.sum(terms)


def scale_pattern(z: GTPattern, omega: Sequence[Any]) -> GTPattern:
    """omega . z: every z_{i,j} is multiplied by omega_i."""
    if len(omega) != z.p:
        raise InputError(f"scaling needs {z.p} factors, got {len(omega)}")
    return GTPattern(z.m, z.n, {(i, j): v * omega[i - 1] for (i, j), v in z.entries.items()})


def gt_interlaces(a: GTPattern) -> bool:
    """a_{i,j+1} >= a_{i,j} >= a_{i+1,j+1} wherever both sides exist."""
    for (i, j), v in a.entries.items():
        if j < a.n and a[(i, j + 1)] < v:
            return False
        nxt = a.get(i + 1, j + 1)
        if nxt is not None and v < nxt:
            return False
    return True
