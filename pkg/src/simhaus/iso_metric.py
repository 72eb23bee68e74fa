"""Distances between isomorphism classes of simplicial complexes.

Two complexes are isomorphic when an injective vertex relabeling maps
one face family onto the other. The class distance is the minimum of
the labeled distance over all vertex bijections (1 outright when the
vertex counts differ). Everything here is brute force over vertex
permutations, which is the point: the supported scale is at most
``MAX_CLASS_VERTICES`` vertices.

``class_distance_matrix`` batches all pairs of a canonical class list.
Per class it tabulates the exact face distance of every vertex subset
once, interns the rational values as order-preserving integer codes and
runs the min-over-relabelings loop as an integer kernel (numba, with a
numpy fallback; see ``_kernels``). Cells are filled by index, so the
output is deterministic regardless of parallelism.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .complex_core import Complex, Face, complex_from_faces
from .errors import ParseError, TooLargeError
from .exact_minimax import ONE, Rat, ZERO, format_rational, parse_rational
from .hausdorff_metric import face_distance
from ._kernels import pairwise_min_codes

MAX_CLASS_VERTICES = 8
MAX_ENUMERATION_VERTICES = 6


@dataclass(frozen=True)
class CanonicalComplex:
    """A complex over {0..n-1} whose face list is minimal over relabelings."""

    complex: Complex
    encoding: tuple[Face, ...]

    @property
    def encoding_string(self) -> str:
        return json.dumps([list(f) for f in self.encoding], separators=(",", ":"))


@dataclass(frozen=True)
class ClassDistanceResult:
    """Distance value plus a vertex bijection attaining it.

    ``witness_bijection`` is None when the vertex counts differ (every
    relabeling then scores 1, so no bijection exists to report).
    """

    value: Rat
    witness_bijection: dict[int, int] | None


def _mask_decode(n: int) -> list[Face]:
    return [tuple(v for v in range(n) if mask >> v & 1) for mask in range(1 << n)]


def _perm_mask_table(n: int, perm: Sequence[int]) -> list[int]:
    table = [0] * (1 << n)
    for mask in range(1 << n):
        img = 0
        for v in range(n):
            if mask >> v & 1:
                img |= 1 << perm[v]
        table[mask] = img
    return table


def _canonical_masks(masks: Sequence[int], n: int,
                     perm_tables: Sequence[Sequence[int]],
                     rank: Sequence[int]) -> tuple[int, ...]:
    """Minimal relabeled face list, compared through lexicographic face ranks."""
    best_key: tuple[int, ...] | None = None
    best: tuple[int, ...] | None = None
    for table in perm_tables:
        imgs = sorted(table[m] for m in masks)
        key = tuple(sorted(rank[m] for m in imgs))
        if best_key is None or key < best_key:
            best_key = key
            best = tuple(sorted(imgs, key=lambda m: rank[m]))
    assert best is not None
    return best


def _lex_rank(n: int) -> list[int]:
    """Rank of each bitmask under lexicographic order of the decoded face."""
    decode = _mask_decode(n)
    order = sorted(range(1, 1 << n), key=lambda m: decode[m])
    rank = [0] * (1 << n)
    for i, m in enumerate(order):
        rank[m] = i
    return rank


def canonical_form(k: Complex, max_vertices: int = MAX_CLASS_VERTICES) -> CanonicalComplex:
    """Relabel to {0..n-1} and minimize the face list over all n! relabelings.

    Isomorphic inputs yield identical encodings. Brute force; raises
    TooLargeError above ``max_vertices`` vertices.
    """
    verts = k.vertices
    n = len(verts)
    if n > max_vertices:
        raise TooLargeError(f"canonical form capped at {max_vertices} vertices, got {n}")
    compress = {v: i for i, v in enumerate(verts)}
    masks = []
    for m in k.maximal_faces:
        mask = 0
        for v in m:
            mask |= 1 << compress[v]
        masks.append(mask)
    perm_tables = [_perm_mask_table(n, p) for p in permutations(range(n))]
    rank = _lex_rank(n)
    best = _canonical_masks(masks, n, perm_tables, rank)
    decode = _mask_decode(n)
    faces = tuple(decode[m] for m in best)
    return CanonicalComplex(complex=complex_from_faces(faces), encoding=tuple(sorted(faces)))


def _antichains_covering(n: int):
    """All antichains of nonempty subsets of {0..n-1} whose union is everything."""
    full = (1 << n) - 1
    masks = list(range(1, 1 << n))
    chosen: list[int] = []

    def rec(start: int, union: int):
        if union == full and chosen:
            yield tuple(chosen)
        for i in range(start, len(masks)):
            m = masks[i]
            if any(m & c == m or m & c == c for c in chosen):
                continue
            chosen.append(m)
            yield from rec(i + 1, union | m)
            chosen.pop()

    yield from rec(0, 0)


def _closure_size(masks: Iterable[int]) -> int:
    faces: set[int] = set()
    for m in masks:
        sub = m
        while sub:
            faces.add(sub)
            sub = (sub - 1) & m
    return len(faces)


def enumerate_classes(n: int) -> list[CanonicalComplex]:
    """All isomorphism classes of complexes with vertex set exactly {0..n-1}.

    Deterministically ordered by (total face count, encoding). Counts
    grow fast (1, 2, 5, 20, 180 for n = 1..5); n = 6 works but is slow,
    larger n raises TooLargeError.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if n > MAX_ENUMERATION_VERTICES:
        raise TooLargeError(f"class enumeration capped at {MAX_ENUMERATION_VERTICES} vertices")
    perm_tables = [_perm_mask_table(n, p) for p in permutations(range(n))]
    rank = _lex_rank(n)
    decode = _mask_decode(n)
    seen: dict[tuple[int, ...], int] = {}
    for antichain in _antichains_covering(n):
        canon = _canonical_masks(antichain, n, perm_tables, rank)
        if canon not in seen:
            seen[canon] = _closure_size(canon)
    ordered = sorted(seen, key=lambda canon: (seen[canon], tuple(sorted(decode[m] for m in canon))))
    out = []
    for canon in ordered:
        faces = tuple(sorted(decode[m] for m in canon))
        out.append(CanonicalComplex(complex=complex_from_faces(faces), encoding=faces))
    return out


def class_distance(k1: Complex, k2: Complex,
                   max_vertices: int = MAX_CLASS_VERTICES) -> ClassDistanceResult:
    """Minimum labeled distance over all vertex bijections between k1 and k2.

    A running minimum prunes each bijection's face scan (face distances
    only push the maximum up), and the scan stops at an exact zero.
    """
    v1, v2 = k1.vertices, k2.vertices
    if max(len(v1), len(v2)) > max_vertices:
        raise TooLargeError(f"class distance capped at {max_vertices} vertices")
    if len(v1) != len(v2):
        return ClassDistanceResult(ONE, None)

    faces1 = sorted(k1.maximal_faces, key=len, reverse=True)
    faces2 = sorted(k2.maximal_faces, key=len, reverse=True)
    best: Rat | None = None
    best_map: dict[int, int] | None = None
    for target in permutations(v2):
        mapping = dict(zip(v1, target))
        inverse = {b: a for a, b in mapping.items()}
        cur = ZERO
        for f in faces1:
            d = face_distance(tuple(sorted(mapping[v] for v in f)), k2)
            if d > cur:
                cur = d
            if best is not None and cur >= best:
                break
        else:
            for g in faces2:
                d = face_distance(tuple(sorted(inverse[v] for v in g)), k1)
                if d > cur:
                    cur = d
                if best is not None and cur >= best:
                    break
        if best is None or cur < best:
            best = cur
            best_map = mapping
            if best == ZERO:
                break
    assert best is not None and best_map is not None
    return ClassDistanceResult(best, best_map)


# ---------------------------------------------------------------------------
# all-pairs matrix


@dataclass
class DistanceMatrix:
    """Symmetric matrix of exact class distances, indexed like ``classes``."""

    classes: list[CanonicalComplex]
    values: list[list[Rat]]

    def to_tsv(self) -> str:
        header = "\t".join(c.encoding_string for c in self.classes)
        lines = [header]
        for row in self.values:
            lines.append("\t".join(format_rational(v) for v in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_tsv(cls, text: str) -> "DistanceMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ParseError("empty matrix")
        classes = []
        for cell in lines[0].split("\t"):
            try:
                faces = json.loads(cell)
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad encoding cell {cell!r}: {exc.msg}") from exc
            faces = tuple(sorted(tuple(f) for f in faces))
            classes.append(CanonicalComplex(complex=complex_from_faces(faces), encoding=faces))
        values = []
        for ln in lines[1:]:
            values.append([parse_rational(cell) for cell in ln.split("\t")])
        if len(values) != len(classes) or any(len(r) != len(classes) for r in values):
            raise ParseError("matrix is not square")
        return cls(classes, values)


def _face_table(args: tuple[tuple[Face, ...], int]) -> list[Rat]:
    """Distance from every nonempty vertex subset (as a bitmask) to one class."""
    maximal, n = args
    k = complex_from_faces(maximal)
    decode = _mask_decode(n)
    table: list[Rat] = [ZERO] * (1 << n)
    for mask in range(1, 1 << n):
        table[mask] = face_distance(decode[mask], k)
    return table


def class_distance_matrix(classes: Sequence[CanonicalComplex], jobs: int = 1,
                          backend: str | None = None) -> DistanceMatrix:
    """All pairwise class distances; zero diagonal, deterministic layout.

    Classes with different vertex counts are at distance 1. Within a
    vertex count, per-class distance tables may be built in parallel
    (``jobs`` processes); the relabeling minimization runs in the
    integer kernel. Results are merged by index.
    """
    count = len(classes)
    values: list[list[Rat]] = [[ONE] * count for _ in range(count)]
    for i in range(count):
        values[i][i] = ZERO

    by_size: dict[int, list[int]] = {}
    for i, c in enumerate(classes):
        by_size.setdefault(len(c.complex.vertices), []).append(i)

    for n in sorted(by_size):
        group = by_size[n]
        if len(group) < 2:
            continue
        work = [(tuple(sorted(classes[i].complex.maximal_faces)), n) for i in group]
        if jobs > 1:
            import multiprocessing

            with multiprocessing.Pool(jobs) as pool:
                tables = pool.map(_face_table, work)
        else:
            tables = [_face_table(w) for w in work]

        distinct = sorted({v for t in tables for v in t} | {ZERO})
        code_of = {v: i for i, v in enumerate(distinct)}
        code_arr = np.array([[code_of[v] for v in t] for t in tables], dtype=np.int16)

        maxlen = max(len(classes[i].complex.maximal_faces) for i in group)
        mask_rows = np.zeros((len(group), maxlen), dtype=np.int32)
        lens = np.zeros(len(group), dtype=np.int32)
        for gi, i in enumerate(group):
            masks = sorted(sum(1 << v for v in f) for f in classes[i].complex.maximal_faces)
            lens[gi] = len(masks)
            mask_rows[gi, : len(masks)] = masks

        perms = list(permutations(range(n)))
        fwd = np.array([_perm_mask_table(n, p) for p in perms], dtype=np.int32)
        inv_perms = [tuple(p.index(v) for v in range(n)) for p in perms]
        inv = np.array([_perm_mask_table(n, p) for p in inv_perms], dtype=np.int32)

        codes = pairwise_min_codes(code_arr, mask_rows, lens, fwd, inv, backend=backend)
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                v = distinct[int(codes[a, b])]
                values[group[a]][group[b]] = v
                values[group[b]][group[a]] = v
    return DistanceMatrix(list(classes), values)
