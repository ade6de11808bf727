"""Ladder operators, number operator and Gram form of the capped Fock space.

Internally everything lives in the UNNORMALIZED basis |v> obtained by
applying raw creation operators to the vacuum, where all matrix elements are
rational:

    creation      a_i^+ |v> = 0 if |v| = p, else
                  Fermi:  (1 - v_i) * sign_i(v) * |v + e_i>
                  Bose:   |v + e_i>
    annihilation  a_i^- |v> = Fermi: v_i * sign_i(v) * (p-k+1)/p * |v - e_i>
                  Bose:  v_i * (p-k+1)/p * |v - e_i>,     k = |v|
    sign_i(v) = (-1)^(v_1 + ... + v_{i-1})

The squared norms of the unnormalized basis form the diagonal Gram form

    Fermi:  <v|v> = p! / (p^k (p-k)!)
    Bose:   <v|v> = p! * prod_i v_i! / (p^k (p-k)!)

Conjugating by the square roots of the Gram entries yields the orthonormal
backend, whose entries are floats; there the actions carry the familiar
square-root coefficients (see orthonormal_creation / orthonormal_annihilation,
which build them directly as an independent construction route).

Mode indices are 1-based in every public signature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .basis import AlgebraSpec, Kind, OccupationVector, enumerate_basis
from .sparse import SparseMatrix

UNNORMALIZED = "unnormalized"
ORTHONORMAL = "orthonormal"


@dataclass(frozen=True)
class BasisTag:
    spec: AlgebraSpec
    normalization: str


@dataclass(frozen=True)
class GramForm:
    """Diagonal of squared norms of the unnormalized basis, all positive."""

    values: tuple[Fraction, ...]
    tag: BasisTag


def _check_mode(spec: AlgebraSpec, i: int) -> None:
    if not isinstance(i, int) or not (1 <= i <= spec.n):
        raise ValueError(f"mode index {i!r} out of range 1..{spec.n}")


def prefix_sign(v: Sequence[int], i: int) -> int:
    """Fermionic reordering sign (-1)^(v_1+...+v_{i-1}) for 1-based mode i."""
    return -1 if sum(v[: i - 1]) % 2 else 1


def _bumped(v: OccupationVector, i: int, delta: int) -> OccupationVector:
    return v[: i - 1] + (v[i - 1] + delta,) + v[i:]


def exact_tag(spec: AlgebraSpec) -> BasisTag:
    return BasisTag(spec, UNNORMALIZED)


def float_tag(spec: AlgebraSpec) -> BasisTag:
    return BasisTag(spec, ORTHONORMAL)


def _basis_index(spec: AlgebraSpec) -> dict[OccupationVector, int]:
    return {v: r for r, v in enumerate(enumerate_basis(spec))}


def build_creation(spec: AlgebraSpec, i: int) -> SparseMatrix:
    """Exact creation operator for mode i on the unnormalized basis."""
    _check_mode(spec, i)
    index = _basis_index(spec)
    dim = len(index)
    data: dict[tuple[int, int], Fraction] = {}
    for v, col in index.items():
        if sum(v) == spec.p:
            continue
        if spec.kind is Kind.FERMI:
            if v[i - 1] == 1:
                continue
            coeff = Fraction(prefix_sign(v, i))
        else:
            coeff = Fraction(1)
        data[(index[_bumped(v, i, +1)], col)] = coeff
    return SparseMatrix(dim, dim, data, exact_tag(spec))


def build_annihilation(spec: AlgebraSpec, i: int) -> SparseMatrix:
    """Exact annihilation operator for mode i; carries (p-k+1)/p on grade k."""
    _check_mode(spec, i)
    index = _basis_index(spec)
    dim = len(index)
    p = spec.p
    data: dict[tuple[int, int], Fraction] = {}
    for v, col in index.items():
        if v[i - 1] == 0:
            continue
        k = sum(v)
        coeff = Fraction(v[i - 1] * (p - k + 1), p)
        if spec.kind is Kind.FERMI:
            coeff *= prefix_sign(v, i)
        data[(index[_bumped(v, i, -1)], col)] = coeff
    return SparseMatrix(dim, dim, data, exact_tag(spec))


def build_number(spec: AlgebraSpec) -> SparseMatrix:
    """Total number operator: diagonal with entry |v| at each basis vector."""
    values = [Fraction(sum(v)) for v in enumerate_basis(spec)]
    return SparseMatrix.diagonal(values, exact_tag(spec))


def gram_value(spec: AlgebraSpec, v: Sequence[int]) -> Fraction:
    """Squared norm of an unnormalized basis vector."""
    k = sum(v)
    g = Fraction(factorial(spec.p), spec.p ** k * factorial(spec.p - k))
    if spec.kind is Kind.BOSE:
        for x in v:
            g *= factorial(x)
    return g


def build_gram(spec: AlgebraSpec) -> GramForm:
    values = tuple(gram_value(spec, v) for v in enumerate_basis(spec))
    return GramForm(values, exact_tag(spec))


def normalize(op: SparseMatrix, gram: GramForm) -> SparseMatrix:
    """Conjugate an exact operator into the orthonormal basis (float entries).

    entry'(r, c) = entry(r, c) * sqrt(g_r / g_c), the transformation induced
    by |v>> = |v> / sqrt(g_v).
    """
    if op.tag != gram.tag:
        raise ValueError(f"basis tag mismatch: {op.tag!r} vs {gram.tag!r}")
    spec = gram.tag.spec
    g = gram.values
    data = {
        (r, c): float(val) * math.sqrt(float(g[r] / g[c]))
        for (r, c), val in op.data.items()
    }
    return SparseMatrix(op.rows, op.cols, data, float_tag(spec))


def adjoint_wrt_gram(op: SparseMatrix, gram: GramForm) -> SparseMatrix:
    """Exact adjoint G^-1 op^T G for the diagonal Gram form G."""
    if op.tag != gram.tag:
        raise ValueError(f"basis tag mismatch: {op.tag!r} vs {gram.tag!r}")
    if op.rows != op.cols:
        raise ValueError("adjoint requires a square operator")
    g = gram.values
    data = {(c, r): val * g[r] / g[c] for (r, c), val in op.data.items()}
    return SparseMatrix(op.rows, op.cols, data, op.tag)


def orthonormal_creation(spec: AlgebraSpec, i: int) -> SparseMatrix:
    """Creation operator built directly on the orthonormal basis.

    Coefficients come straight from the action on orthonormal vectors:
    Fermi (1-v_i)*sign*sqrt((p-k)/p), Bose sqrt((v_i+1)(p-k)/p); this route
    never touches the Gram form, so it cross-checks normalize().
    """
    _check_mode(spec, i)
    index = _basis_index(spec)
    dim = len(index)
    p = spec.p
    data: dict[tuple[int, int], float] = {}
    for v, col in index.items():
        k = sum(v)
        if k == p:
            continue
        if spec.kind is Kind.FERMI:
            if v[i - 1] == 1:
                continue
            coeff = prefix_sign(v, i) * math.sqrt((p - k) / p)
        else:
            coeff = math.sqrt((v[i - 1] + 1) * (p - k) / p)
        data[(index[_bumped(v, i, +1)], col)] = coeff
    return SparseMatrix(dim, dim, data, float_tag(spec))


def orthonormal_annihilation(spec: AlgebraSpec, i: int) -> SparseMatrix:
    """Annihilation operator built directly on the orthonormal basis.

    Fermi v_i*sign*sqrt((p-k+1)/p), Bose sqrt(v_i(p-k+1)/p) at grade k.
    """
    _check_mode(spec, i)
    index = _basis_index(spec)
    dim = len(index)
    p = spec.p
    data: dict[tuple[int, int], float] = {}
    for v, col in index.items():
        if v[i - 1] == 0:
            continue
        k = sum(v)
        if spec.kind is Kind.FERMI:
            coeff = prefix_sign(v, i) * math.sqrt((p - k + 1) / p)
        else:
            coeff = math.sqrt(v[i - 1] * (p - k + 1) / p)
        data[(index[_bumped(v, i, -1)], col)] = coeff
    return SparseMatrix(dim, dim, data, float_tag(spec))


def orthonormal_number(spec: AlgebraSpec) -> SparseMatrix:
    values = [float(sum(v)) for v in enumerate_basis(spec)]
    return SparseMatrix.diagonal(values, float_tag(spec))


def grade_diagonal(spec: AlgebraSpec, func, *, normalization: str = UNNORMALIZED) -> SparseMatrix:
    """Diagonal operator whose entry at v is func(|v|); used for scalar
    polynomials in the number operator."""
    tag = BasisTag(spec, normalization)
    values = [func(sum(v)) for v in enumerate_basis(spec)]
    return SparseMatrix.diagonal(values, tag)


def operator_json_payload(spec: AlgebraSpec, op: SparseMatrix) -> dict:
    """JSON-ready export of an operator, entries row-major ascending."""
    normalization = op.tag.normalization if isinstance(op.tag, BasisTag) else UNNORMALIZED
    if normalization == UNNORMALIZED:
        entries = [[r, c, v.numerator, v.denominator] for r, c, v in op.entries()]
    else:
        entries = [[r, c, float(v)] for r, c, v in op.entries()]
    return {
        "spec": {"kind": spec.kind.value, "n": spec.n, "p": spec.p},
        "basis": "graded-lex",
        "normalization": normalization,
        "dims": [op.rows, op.cols],
        "entries": entries,
    }
