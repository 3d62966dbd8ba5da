"""Modulus catalog: deterministic irreducible polynomials for 2 <= n <= 512.

The tables in `_catalog_data` are produced offline by tools/gen_catalog.py
(the search is too slow for import time at n = 512) and hold, per degree,
the least irreducible polynomial plus the least irreducible trinomial and
equally spaced polynomial where those exist. Lookups are deterministic;
pinned entries take precedence for their (degree, family) slot.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _catalog_data as _data
from .errors import CatalogError, InputError
from .gf2 import BinaryPolynomial

GENERIC = "generic"
TRINOMIAL = "trinomial"
EQUALLY_SPACED = "equally_spaced"
FAMILIES = (GENERIC, TRINOMIAL, EQUALLY_SPACED)

MIN_DEGREE = 2
MAX_DEGREE = 512


@dataclass(frozen=True)
class CatalogEntry:
    n: int
    polynomial: BinaryPolynomial
    family: str
    pinned: bool = False

    def describe(self) -> str:
        pin = " (pinned)" if self.pinned else ""
        return f"n={self.n} family={self.family}{pin} poly={self.polynomial.exponent_list()}"


# The degree-7 worked modulus is kept alongside the lexicographic minimum.
_PINNED = (CatalogEntry(7, BinaryPolynomial.parse("7,5,3,1,0"), GENERIC, pinned=True),)


def _check_degree(n: int) -> None:
    if not MIN_DEGREE <= n <= MAX_DEGREE:
        raise InputError(f"catalog covers degrees {MIN_DEGREE}..{MAX_DEGREE}, got {n}")


def _generic(n: int) -> CatalogEntry:
    return CatalogEntry(n, BinaryPolynomial(_data.GENERIC[n]), GENERIC)


def _trinomial(n: int) -> CatalogEntry | None:
    k = _data.TRINOMIAL_K.get(n)
    if k is None:
        return None
    return CatalogEntry(n, BinaryPolynomial.from_exponents([n, k, 0]), TRINOMIAL)


def _equally_spaced(n: int) -> CatalogEntry | None:
    tk = _data.EQUALLY_SPACED.get(n)
    if tk is None:
        return None
    terms, k = tk
    return CatalogEntry(
        n, BinaryPolynomial.from_exponents([i * k for i in range(terms + 1)]), EQUALLY_SPACED
    )


def catalog_lookup(n: int, family: str | None = None) -> CatalogEntry:
    """Deterministic modulus for degree n, preferring the requested family.

    Raises CatalogError when the family has no irreducible member at n
    (e.g. no trinomial exists for degrees divisible by 8).
    """
    _check_degree(n)
    if family in (None, GENERIC):
        # Pinned generics are listed by catalog_entries but never shadow
        # the lexicographic minimum here.
        return _generic(n)
    if family == TRINOMIAL:
        entry = _trinomial(n)
    elif family == EQUALLY_SPACED:
        entry = _equally_spaced(n)
    else:
        raise InputError(f"unknown family {family!r}")
    if entry is None:
        raise CatalogError(f"no irreducible {family} polynomial of degree {n}")
    return entry


def catalog_entries(n: int | None = None, family: str | None = None) -> list[CatalogEntry]:
    """All catalog rows, optionally filtered by degree and family."""
    degrees = [n] if n is not None else list(range(MIN_DEGREE, MAX_DEGREE + 1))
    rows: list[CatalogEntry] = []
    for d in degrees:
        _check_degree(d)
        candidates = [_generic(d), _trinomial(d), _equally_spaced(d)]
        candidates.extend(e for e in _PINNED if e.n == d)
        for e in candidates:
            if e is not None and (family is None or e.family == family):
                rows.append(e)
    return rows


def family_degrees(family: str) -> list[int]:
    """Degrees at which the family has a catalog member."""
    if family == GENERIC:
        return list(range(MIN_DEGREE, MAX_DEGREE + 1))
    if family == TRINOMIAL:
        return sorted(_data.TRINOMIAL_K)
    if family == EQUALLY_SPACED:
        return sorted(_data.EQUALLY_SPACED)
    raise InputError(f"unknown family {family!r}")


def search_least_irreducible(n: int) -> BinaryPolynomial:
    """Fresh search for the least irreducible polynomial of degree n.

    Used by tests to spot-check the embedded table; O(n) candidates each
    costing an irreducibility test, so keep n modest.
    """
    top = 1 << n
    for low in range(1, top, 2):
        p = top | low
        if p.bit_count() % 2 == 0:
            continue
        if BinaryPolynomial(p).is_irreducible():
            return BinaryPolynomial(p)
    raise CatalogError(f"no irreducible polynomial of degree {n}")
