"""
JSON codecs. Rationals travel as "p/q" strings (or "p"), tropical integers as JSON
integers, and a tropical structural zero as null.
"""
from __future__ import annotations

import sys
from collections.abc import Sequence
from typing import Any

import orjson

from gcrystal.datatypes import CrystalData, GTPattern, MatrixGrid, PQPair, ReductionResult, Tableau, gt_indices
from gcrystal.errors import InputError
from gcrystal.matrices import SfMatrix
from gcrystal.polynomials import LoopPoly
from gcrystal.semifield import GEOMETRIC, Semifield, format_value, parse_rational, parse_value

JSON = Any


def loads(data: bytes | str) -> JSON:
    """orjson.loads; a JSONDecodeError propagates to the caller."""
    return orjson.loads(data)


def dumps(obj: JSON) -> bytes:
    return orjson.dumps(obj, option=orjson.OPT_APPEND_NEWLINE)


def read_input(path: str | None) -> JSON:
    """Read a JSON document from {path}, or from standard input when {path} is None."""
    if path is None:
        return loads(sys.stdin.buffer.read())
    try:
        with open(path, "rb") as fp:
            return loads(fp.read())
    except FileNotFoundError as err:
        raise InputError(f"cannot find {path}") from err


###########
# Matrices
###########


def matrix_to_json(a: SfMatrix | MatrixGrid) -> JSON:
    rows = a.to_list()
    entries = [[format_value(v) for v in r] for r in rows]
    return {"rows": len(rows), "cols": len(rows[0]) if rows else 0, "entries": entries}


def _entries_of(obj: JSON) -> list[Any]:
    match obj:
        case {"entries": list(entries), **rest}:
            if "rows" in rest and rest["rows"] != len(entries):
                raise InputError(f"matrix declares {rest['rows']} rows but has {len(entries)}")
            return entries
        case list():
            return obj
        case _:
            raise InputError("a matrix is a list of rows or an object with 'entries'")


def _require_positive(values: list[Any], sf: Semifield, what: str) -> None:
    """Geometric inputs live on the positive torus; tropical integers may have any sign."""
    if sf is GEOMETRIC and any(v <= 0 for v in values):
        raise InputError(f"{what} entries must be positive rationals")


def parse_grid(obj: JSON, sf: Semifield = GEOMETRIC) -> MatrixGrid:
    """A point of Mat_{m x n}. Entries are nonzero; geometric entries are positive."""
    rows = _entries_of(obj)
    if not all(isinstance(r, list) for r in rows):
        raise InputError("matrix rows must be lists")
    values = [[parse_value(v, sf) for v in r] for r in rows]
    grid = MatrixGrid.from_rows(values)
    _require_positive(list(grid.values()), sf, "grid")
    return grid


def parse_int_matrix(obj: JSON) -> list[list[int]]:
    rows = _entries_of(obj)
    out = []
    for r in rows:
        if not isinstance(r, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in r):
            raise InputError("integer matrices hold JSON integers only")
        out.append(list(r))
    if not out or not out[0] or any(len(r) != len(out[0]) for r in out):
        raise InputError("integer matrix must be a nonempty rectangle")
    return out


def parse_sf_matrix(obj: JSON, sf: Semifield = GEOMETRIC) -> SfMatrix:
    rows = _entries_of(obj)
    entries = tuple(tuple(parse_value(v, sf) for v in r) for r in rows)
    if not entries or any(len(r) != len(entries) for r in entries):
        raise InputError("expected a nonempty square matrix")
    return SfMatrix(entries, sf)


###########
# Patterns and pairs
###########


def pattern_to_json(z: GTPattern) -> JSON:
    return {
        "m": z.m,
        "n": z.n,
        "entries": {f"{i},{j}": format_value(z[(i, j)]) for i, j in gt_indices(z.m, z.n)},
    }


def _parse_key(key: str) -> tuple[int, int]:
    try:
        i, j = key.split(",")
        return int(i), int(j)
    except ValueError as err:
        raise InputError(f"bad index key {key!r}, expected 'i,j'") from err


def parse_pattern(obj: JSON, sf: Semifield = GEOMETRIC) -> GTPattern:
    match obj:
        case {"m": int(m), "n": int(n), "entries": dict(entries)}:
            z = GTPattern(m, n, {_parse_key(k): parse_value(v, sf) for k, v in entries.items()})
            _require_positive([z[k] for k in gt_indices(m, n)], sf, "pattern")
            return z
        case _:
            raise InputError("a pattern is an object with integer 'm', 'n' and an 'entries' object")


def pq_to_json(pq: PQPair, glued: MatrixGrid) -> JSON:
    return {
        "P": pattern_to_json(pq.P),
        "Q": pattern_to_json(pq.Q),
        "glued": matrix_to_json(glued),
        "shape": [format_value(v) for v in pq.shape],
    }


def parse_pq(obj: JSON, sf: Semifield = GEOMETRIC) -> PQPair:
    match obj:
        case {"P": p, "Q": q}:
            return PQPair(parse_pattern(p, sf), parse_pattern(q, sf))
        case _:
            raise InputError("a PQ pair is an object with 'P' and 'Q'")


def crystal_data_to_json(data: CrystalData) -> JSON:
    gamma = [format_value(v) for v in data.gamma]
    return {"gamma": gamma, "eps": format_value(data.eps), "phi": format_value(data.phi)}


###########
# Polynomials
###########


def poly_to_json(f: LoopPoly) -> JSON:
    return [
        {"coeff": format_value(c), "exps": {f"{a},{b}": e for (a, b), e in mono}}
        for mono, c in sorted(f.monomials(), key=lambda t: t[0])
    ]


def parse_poly(obj: JSON) -> LoopPoly:
    if not isinstance(obj, list):
        raise InputError("a polynomial is a list of {'coeff', 'exps'} terms")
    total = LoopPoly.zero()
    for term in obj:
        match term:
            case {"coeff": coeff, "exps": dict(exps)}:
                mono = tuple(sorted((_parse_key(k), int(e)) for k, e in exps.items()))
                if any(e < 0 for _, e in mono):
                    raise InputError("exponents must be nonnegative")
                total = total + LoopPoly({mono: parse_rational(coeff)})
            case _:
                raise InputError(f"bad polynomial term {term!r}")
    return total


def reduction_to_json(result: ReductionResult) -> JSON:
    if result.succeeded:
        terms = [{"coeff": format_value(c), "e": em.to_list(), "text": str(em)} for c, em in result.terms]
        return {"representation": terms}
    return {"remainder": poly_to_json(result.remainder)}


###########
# Combinatorics
###########


def tableau_to_json(t: Tableau) -> JSON:
    return t.to_list()


def q_analogue_to_json(table: Sequence[tuple[tuple[int, ...], dict[int, int]]]) -> JSON:
    return [{"shape": list(shape), "coeffs": {str(k): v for k, v in coeffs.items()}} for shape, coeffs in table]
