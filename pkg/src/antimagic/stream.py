"""Closed-form edge labels and bounded-memory verification for huge grids and prisms.

Everything the materialized labelers compute by dealing out lists has an
O(1)-per-edge closed form under the skip namings.  This module exposes those
forms (``closed_form_label``), an edge iterator that never materializes the
graph, and ``stream_verify``, which recomputes every vertex sum in a column
sweep and checks bijectivity and sum distinctness exactly, spilling sorted
value buckets to disk so live state stays proportional to one column plus a
fixed chunk.
"""

from __future__ import annotations

import os
import tempfile
import time
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import InvalidParameterError, SizeRefusalError
from .families import (
    CONSECUTIVE_PATH,
    LATTICE,
    PRISM,
    SKIP_CYCLE,
    SKIP_PATH,
    FamilySpec,
)
from .labelings import (
    even_block_label,
    layer_link_label,
    ring_label,
    thin_row_label,
    thin_rung_label,
    two_layer_ring_label,
    two_layer_rung_label,
)
from .verification import Verdict

DEFAULT_CHUNK_TARGET = 1 << 16
MAX_STREAM_DIMENSION = 1 << 30
MAX_STREAM_EDGES = 1 << 60  # keeps every vertex sum below 2**62

ROW = "row"
COL = "col"


def skip_path_edge_is_usual(size, k):
    """U/R color of skip-path edge ``k``: U iff its walk position is odd.

    Walk positions in O(1): odd indices sit in the first leg at (k+1)/2, the
    turnaround edge (index size-1) in the middle, even indices in the
    descending leg.
    """
    if not 1 <= k <= size - 1:
        raise InvalidParameterError(f"skip-path of size {size} has no edge {k}")
    if k == size - 1:
        pos = (size + 1) // 2
    elif k % 2 == 1:
        pos = (k + 1) // 2
    else:
        evens_start = size if size % 2 == 0 else size - 1
        pos = (size + 1) // 2 + (evens_start - k) // 2
    return pos % 2 == 1


def merge_value(m, n, p):
    """The p-th element (1-based) of the grid merge sequence, in O(1).

    The first s-t entries are the odds 2p-1; after that positions alternate
    between the tail evens and the remaining odds.
    """
    s = m * n + (m + n + 1) // 2
    t = (n - m) // 2
    head = s - t
    if not 1 <= p <= s + t:
        raise InvalidParameterError(f"merge sequence for {m}x{n} has no position {p}")
    if p <= head:
        return 2 * p - 1
    q = p - head
    if q % 2 == 1:
        return 2 * m * n + 2 * m + q + 1
    return 2 * head + q - 1


def _merge_value_vec(m, n, p):
    s = m * n + (m + n + 1) // 2
    head = s - (n - m) // 2
    q = p - head
    tail = np.where(q % 2 == 1, 2 * m * n + 2 * m + q + 1, 2 * head + q - 1)
    return np.where(p <= head, 2 * p - 1, tail)


def _skip_incident(size, j):
    """Listing indices of skip-path edges meeting vertex j."""
    out = []
    if j - 2 >= 1:
        out.append(j - 2)
    if j <= size - 2:
        out.append(j)
    if j >= size - 1:
        out.append(size - 1)
    return out


def _ring_incident(m, i):
    """Listing indices of skip-cycle edges meeting vertex i (always two)."""
    out = []
    if i <= 2:
        out.append(1)
    if 3 <= i <= m:
        out.append(i - 1)
    if i <= m - 2:
        out.append(i + 1)
    if i >= m - 1:
        out.append(m)
    return sorted(out)


def _factor_kinds(spec):
    """Arrangement kinds and sizes of both factors, in spec's own orientation."""
    if spec.family == PRISM:
        col_kind = SKIP_PATH if spec.n >= 2 else CONSECUTIVE_PATH
        return SKIP_CYCLE, col_kind, spec.m, spec.n + 1
    m, n = spec.m, spec.n
    if m == 1 and n == 1:
        return CONSECUTIVE_PATH, CONSECUTIVE_PATH, 2, 2
    if m == 1:
        return CONSECUTIVE_PATH, SKIP_PATH, 2, n + 1
    if n == 1:
        return SKIP_PATH, CONSECUTIVE_PATH, m + 1, 2
    if m <= n:
        return SKIP_PATH, CONSECUTIVE_PATH, m + 1, n + 1
    return CONSECUTIVE_PATH, SKIP_PATH, m + 1, n + 1


def _factor_edge_endpoints(kind, size, k):
    if kind == CONSECUTIVE_PATH:
        if 1 <= k <= size - 1:
            return k, k + 1
    elif kind == SKIP_PATH:
        if k == size - 1:
            return size - 1, size
        if 1 <= k <= size - 2:
            return k, k + 2
    else:
        if k == 1:
            return 1, 2
        if k == size:
            return size - 1, size
        if 2 <= k <= size - 1:
            return k - 1, k + 1
    raise InvalidParameterError(f"{kind} of size {size} has no edge {k}")


def _factor_edge_index(kind, size, a, b):
    if kind == CONSECUTIVE_PATH:
        if b == a + 1 and 1 <= a <= size - 1:
            return a
    elif kind == SKIP_PATH:
        if b == a + 2 and 1 <= a <= size - 2:
            return a
        if (a, b) == (size - 1, size):
            return size - 1
    else:
        if (a, b) == (1, 2):
            return 1
        if b == a + 2 and 1 <= a <= size - 2:
            return a + 1
        if (a, b) == (size - 1, size):
            return size
    raise InvalidParameterError(f"{kind} of size {size} has no edge ({a}, {b})")


def _factor_edges_with_lower(kind, size, x):
    """(listing index, upper endpoint) of factor edges whose lower endpoint is x."""
    out = []
    if kind == CONSECUTIVE_PATH:
        if 1 <= x <= size - 1:
            out.append((x, x + 1))
    elif kind == SKIP_PATH:
        if 1 <= x <= size - 2:
            out.append((x, x + 2))
        elif x == size - 1:
            out.append((size - 1, size))
    else:
        if x == 1:
            out.append((1, 2))
        if 1 <= x <= size - 2:
            out.append((x + 1, x + 2))
        if x == size - 1:
            out.append((size, size))
        out.sort(key=lambda pair: pair[1])
    return out


class _GridForms:
    """Closed forms for the general grid construction (2 <= m <= n)."""

    def __init__(self, m, n):
        self.m, self.n = m, n
        self.rows, self.cols = m + 1, n + 1

    def first_label(self, k, j):
        if not (1 <= k <= self.m and 1 <= j <= self.n + 1):
            raise InvalidParameterError(f"no row edge (k={k}, j={j}) in {self.m}x{self.n} grid")
        return even_block_label(self.m, self.n, k, j, skip_path_edge_is_usual(self.m + 1, k))

    def second_label(self, i, k):
        if not (1 <= i <= self.m + 1 and 1 <= k <= self.n):
            raise InvalidParameterError(f"no column edge (i={i}, k={k}) in {self.m}x{self.n} grid")
        return merge_value(self.m, self.n, (i - 1) * self.n + k)

    @cached_property
    def _row_aggregates(self):
        m, n = self.m, self.n
        base = np.zeros(m + 1, dtype=np.int64)
        usual_count = np.zeros(m + 1, dtype=np.int64)
        mirrored_count = np.zeros(m + 1, dtype=np.int64)
        for i in range(1, m + 2):
            for k in _skip_incident(m + 1, i):
                base[i - 1] += 2 * (k - 1) * (n + 1)
                if skip_path_edge_is_usual(m + 1, k):
                    usual_count[i - 1] += 1
                else:
                    mirrored_count[i - 1] += 1
        usual_edges = np.array(
            [skip_path_edge_is_usual(m + 1, k) for k in range(1, m + 1)], dtype=bool
        )
        ivec = np.arange(1, m + 2, dtype=np.int64)
        kvec = np.arange(1, m + 1, dtype=np.int64)
        return base, usual_count, mirrored_count, usual_edges, ivec, kvec

    def live_size(self):
        return sum(a.size for a in self._row_aggregates)

    def column_sums(self, j):
        m, n = self.m, self.n
        base, cu, cr, _, ivec, _ = self._row_aggregates
        sums = base + 2 * j * cu + 2 * (n + 2 - j) * cr
        if j >= 2:
            sums = sums + _merge_value_vec(m, n, (ivec - 1) * n + (j - 1))
        if j <= n:
            sums = sums + _merge_value_vec(m, n, (ivec - 1) * n + j)
        return sums

    def column_label_arrays(self, j):
        m, n = self.m, self.n
        _, _, _, usual, ivec, kvec = self._row_aggregates
        row_labels = 2 * (kvec - 1) * (n + 1) + np.where(usual, 2 * j, 2 * (n + 2 - j))
        out = [row_labels]
        if j <= n:
            out.append(_merge_value_vec(m, n, (ivec - 1) * n + j))
        return out

    def invert(self, lab):
        m, n = self.m, self.n
        if lab % 2 == 0 and lab <= 2 * m * n + 2 * m:
            k = (lab - 2) // (2 * (n + 1)) + 1
            offset = (lab - 2 * (k - 1) * (n + 1)) // 2
            j = offset if skip_path_edge_is_usual(m + 1, k) else n + 2 - offset
            return ROW, k, j
        s = m * n + (m + n + 1) // 2
        head = s - (n - m) // 2
        if lab % 2 == 1:
            p = (lab + 1) // 2
            if p > head:
                p = lab + 1 - head
        else:
            p = head + (lab - 2 * m * n - 2 * m - 1)
        return COL, (p - 1) % n + 1, (p - 1) // n + 1


class _ThinForms:
    """Closed forms for the two-row grid construction (m = 1, n >= 2)."""

    def __init__(self, n):
        self.n = n
        self.rows, self.cols = 2, n + 1

    def first_label(self, k, j):
        if not (k == 1 and 1 <= j <= self.n + 1):
            raise InvalidParameterError(f"no rung (k={k}, j={j}) in thin grid n={self.n}")
        return thin_rung_label(self.n, j)

    def second_label(self, i, k):
        if not (i in (1, 2) and 1 <= k <= self.n):
            raise InvalidParameterError(f"no row edge (i={i}, k={k}) in thin grid n={self.n}")
        return thin_row_label(k, i)

    def live_size(self):
        return 0

    def column_sums(self, j):
        incident = _skip_incident(self.n + 1, j)
        rung = thin_rung_label(self.n, j)
        odd = sum(2 * k - 1 for k in incident)
        even = sum(2 * k for k in incident)
        return np.array([rung + odd, rung + even], dtype=np.int64)

    def column_label_arrays(self, j):
        out = [np.array([thin_rung_label(self.n, j)], dtype=np.int64)]
        if j <= self.n:
            out.append(np.array([2 * j - 1, 2 * j], dtype=np.int64))
        return out

    def invert(self, lab):
        if lab <= 2 * self.n:
            return COL, (lab + 1) // 2, 1 if lab % 2 == 1 else 2
        return ROW, 1, lab - 2 * self.n


class _UnitForms:
    """The 1 x 1 grid: a labeled square with sums 3, 4, 6, 7."""

    rows = 2
    cols = 2
    _first = {1: 1, 2: 4}    # column j -> label of the rung in column j
    _second = {1: 2, 2: 3}   # row i -> label of the row edge in row i

    def first_label(self, k, j):
        if k != 1 or j not in (1, 2):
            raise InvalidParameterError(f"no rung (k={k}, j={j}) in the unit grid")
        return self._first[j]

    def second_label(self, i, k):
        if k != 1 or i not in (1, 2):
            raise InvalidParameterError(f"no row edge (i={i}, k={k}) in the unit grid")
        return self._second[i]

    def live_size(self):
        return 0

    def column_sums(self, j):
        return np.array([3, 4], dtype=np.int64) if j == 1 else np.array([6, 7], dtype=np.int64)

    def column_label_arrays(self, j):
        if j == 1:
            return [np.array([1], dtype=np.int64), np.array([2, 3], dtype=np.int64)]
        return [np.array([4], dtype=np.int64)]

    def invert(self, lab):
        return {1: (ROW, 1, 1), 4: (ROW, 1, 2), 2: (COL, 1, 1), 3: (COL, 1, 2)}[lab]


class _PrismForms:
    """Closed forms for the general prism construction (m >= 3, n >= 2)."""

    def __init__(self, m, n):
        self.m, self.n = m, n
        self.rows, self.cols = m, n + 1
        self.reversed_second = n % 2 == 0

    def first_label(self, k, j):
        if not (1 <= k <= self.m and 1 <= j <= self.n + 1):
            raise InvalidParameterError(f"no ring edge (k={k}, j={j}) in prism {self.m}x{self.n}")
        return ring_label(self.m, k, j, self.reversed_second)

    def second_label(self, i, k):
        if not (1 <= i <= self.m and 1 <= k <= self.n):
            raise InvalidParameterError(f"no link edge (i={i}, k={k}) in prism {self.m}x{self.n}")
        usual = skip_path_edge_is_usual(self.n + 1, k)
        return layer_link_label(self.m, self.n, k, i, usual)

    @cached_property
    def _ring_aggregates(self):
        m = self.m
        ksum = np.array([sum(_ring_incident(m, i)) for i in range(1, m + 1)], dtype=np.int64)
        ivec = np.arange(1, m + 1, dtype=np.int64)
        kvec = np.arange(1, m + 1, dtype=np.int64)
        return ksum, ivec, kvec

    def live_size(self):
        return sum(a.size for a in self._ring_aggregates)

    def column_sums(self, j):
        m, n = self.m, self.n
        ksum, ivec, _ = self._ring_aggregates
        if self.reversed_second and j == 2:
            sums = (4 * m + 2) - ksum
        else:
            sums = 2 * (j - 1) * m + ksum
        for k in _skip_incident(n + 1, j):
            if skip_path_edge_is_usual(n + 1, k):
                sums = sums + (m * n + k * m + ivec)
            else:
                sums = sums + (m * n + k * m + m + 1 - ivec)
        return sums

    def column_label_arrays(self, j):
        m, n = self.m, self.n
        _, _, kvec = self._ring_aggregates
        ring = (j - 1) * m + kvec
        if self.reversed_second and j == 2:
            ring = 3 * m + 1 - ring
        out = [ring]
        if j <= n:
            # the k = j block; U/R only permutes it across ring positions
            out.append(m * n + j * m + kvec)
        return out

    def invert(self, lab):
        m, n = self.m, self.n
        if lab <= m * (n + 1):
            j = (lab - 1) // m + 1
            k = (2 * m + 1 - lab) if (self.reversed_second and j == 2) else lab - (j - 1) * m
            return ROW, k, j
        k = (lab - m * n - 1) // m
        offset = lab - m * n - k * m
        i = offset if skip_path_edge_is_usual(n + 1, k) else m + 1 - offset
        return COL, k, i


class _TwoLayerForms:
    """Closed forms for the two-layer prism construction (n = 1)."""

    def __init__(self, m):
        self.m = m
        self.rows, self.cols = m, 2

    def first_label(self, k, j):
        if not (1 <= k <= self.m and j in (1, 2)):
            raise InvalidParameterError(f"no ring edge (k={k}, j={j}) in two-layer prism m={self.m}")
        return two_layer_ring_label(k, j)

    def second_label(self, i, k):
        if not (1 <= i <= self.m and k == 1):
            raise InvalidParameterError(f"no rung (i={i}, k={k}) in two-layer prism m={self.m}")
        return two_layer_rung_label(self.m, i)

    @cached_property
    def _ring_aggregates(self):
        m = self.m
        ksum = np.array([sum(_ring_incident(m, i)) for i in range(1, m + 1)], dtype=np.int64)
        ivec = np.arange(1, m + 1, dtype=np.int64)
        kvec = np.arange(1, m + 1, dtype=np.int64)
        return ksum, ivec, kvec

    def live_size(self):
        return sum(a.size for a in self._ring_aggregates)

    def column_sums(self, j):
        m = self.m
        ksum, ivec, _ = self._ring_aggregates
        ring_part = 2 * ksum - 2 if j == 1 else 2 * ksum
        return ring_part + 2 * m + ivec

    def column_label_arrays(self, j):
        m = self.m
        _, ivec, kvec = self._ring_aggregates
        if j == 1:
            return [2 * kvec - 1, 2 * m + ivec]
        return [2 * kvec]

    def invert(self, lab):
        if lab <= 2 * self.m:
            return ROW, (lab + 1) // 2, 1 if lab % 2 == 1 else 2
        return COL, 1, lab - 2 * self.m


def _normalize(spec):
    if spec.family == LATTICE and spec.m > spec.n:
        return FamilySpec(LATTICE, spec.n, spec.m), True
    return spec, False


@lru_cache(maxsize=256)
def _forms_cached(family, m, n):
    if family == PRISM:
        return _PrismForms(m, n) if n >= 2 else _TwoLayerForms(m)
    if m == 1 and n == 1:
        return _UnitForms()
    if m == 1:
        return _ThinForms(n)
    return _GridForms(m, n)


def _forms(spec):
    norm, transposed = _normalize(spec)
    return _forms_cached(norm.family, norm.m, norm.n), transposed


def _check_stream_spec(spec):
    spec.validate()
    if spec.family not in (LATTICE, PRISM):
        raise InvalidParameterError("streaming covers lattice and prism specs only")
    if max(spec.m, spec.n) > MAX_STREAM_DIMENSION:
        raise SizeRefusalError(f"streaming supports dimensions up to {MAX_STREAM_DIMENSION}")
    if spec.edge_count() > MAX_STREAM_EDGES:
        raise SizeRefusalError(f"streaming supports up to {MAX_STREAM_EDGES} edges")


@dataclass(frozen=True)
class EdgeKey:
    """One edge of a lattice or prism, named without materializing the graph.

    ``orientation`` is "row" for first-factor copies (endpoints share a
    column) and "col" for second-factor copies; ``k`` is the factor edge's
    listing index and ``pos`` the cross coordinate (the column for row edges,
    the row for column edges).  Coordinates are in ``spec``'s own
    orientation, including for grid shapes labeled through their transpose.
    """

    spec: FamilySpec
    orientation: str
    k: int
    pos: int

    def endpoints(self):
        row_kind, col_kind, rows, cols = _factor_kinds(self.spec)
        if self.orientation == ROW:
            a, b = _factor_edge_endpoints(row_kind, rows, self.k)
            return ((a, self.pos), (b, self.pos))
        a, b = _factor_edge_endpoints(col_kind, cols, self.k)
        return ((self.pos, a), (self.pos, b))


def edge_key(spec, edge):
    """Classify a canonical edge of ``spec``'s graph as an :class:`EdgeKey`."""
    _check_stream_spec(spec)
    (r1, c1), (r2, c2) = edge
    row_kind, col_kind, rows, cols = _factor_kinds(spec)
    if c1 == c2:
        if not 1 <= c1 <= cols:
            raise InvalidParameterError(f"column {c1} out of range")
        return EdgeKey(spec, ROW, _factor_edge_index(row_kind, rows, r1, r2), c1)
    if r1 == r2:
        if not 1 <= r1 <= rows:
            raise InvalidParameterError(f"row {r1} out of range")
        return EdgeKey(spec, COL, _factor_edge_index(col_kind, cols, c1, c2), r1)
    raise InvalidParameterError(f"{edge} is not an edge of {spec}")


def _oriented_label(forms, transposed, orientation, k, pos):
    if transposed:
        orientation = COL if orientation == ROW else ROW
    if orientation == ROW:
        return forms.first_label(k, pos)
    return forms.second_label(pos, k)


def closed_form_label(key):
    """Label of the edge named by ``key``, in O(1), matching the labelers."""
    _check_stream_spec(key.spec)
    forms, transposed = _forms(key.spec)
    return _oriented_label(forms, transposed, key.orientation, key.k, key.pos)


def iter_labeled_edges(spec, by_label=False):
    """Yield ``(r1, c1, r2, c2, label)`` for every edge, without materializing.

    Default order is canonical (sorted endpoint pairs); ``by_label`` walks
    labels 1..|E| instead, inverting the closed forms.  Validation happens
    up front, not at the first yield.
    """
    _check_stream_spec(spec)
    forms, transposed = _forms(spec)
    row_kind, col_kind, rows, cols = _factor_kinds(spec)

    def generate():
        if by_label:
            for lab in range(1, spec.edge_count() + 1):
                orientation, k, pos = forms.invert(lab)
                if transposed:
                    flipped = COL if orientation == ROW else ROW
                else:
                    flipped = orientation
                key = EdgeKey(spec, flipped, k, pos)
                (a1, a2), (b1, b2) = key.endpoints()
                yield (a1, a2, b1, b2, lab)
            return
        for r in range(1, rows + 1):
            for c in range(1, cols + 1):
                for k, upper in _factor_edges_with_lower(col_kind, cols, c):
                    yield (r, c, r, upper, _oriented_label(forms, transposed, COL, k, r))
                for k, upper in _factor_edges_with_lower(row_kind, rows, r):
                    yield (r, c, upper, c, _oriented_label(forms, transposed, ROW, k, c))

    return generate()


@dataclass
class StreamStats:
    """Work and live-state accounting for one ``stream_verify`` run."""

    edges_labeled: int = 0
    sums_checked: int = 0
    peak_live_values: int = 0
    spill_files: int = 0
    elapsed_seconds: float = 0.0


class _Meter:
    def __init__(self):
        self.current = 0
        self.peak = 0

    def grab(self, nvalues):
        self.current += nvalues
        if self.current > self.peak:
            self.peak = self.current

    def drop(self, nvalues):
        self.current -= nvalues


class _BucketStore:
    """Routes int64 values into ascending value-range buckets.

    Small streams stay in memory; larger ones spill each bucket to its own
    temp file.  Iterating yields each bucket sorted, so the whole multiset
    comes back in ascending order while only one bucket is ever live.
    """

    def __init__(self, expected, upper, chunk_target, meter, tmpdir, tag):
        self.meter = meter
        self.count = 0
        self.spills = 0
        if expected <= chunk_target:
            self.files = None
            self.parts = []
        else:
            self.nbuckets = min(512, -(-expected // chunk_target))
            self.width = max(1, -(-upper // self.nbuckets))
            self.files = [None] * self.nbuckets
            self.tmpdir = tmpdir
            self.tag = tag

    def add(self, arr):
        self.count += int(arr.size)
        if self.files is None:
            self.parts.append(arr)
            self.meter.grab(arr.size)
            return
        idx = np.clip(arr // self.width, 0, self.nbuckets - 1)
        order = np.argsort(idx, kind="stable")
        values = arr[order]
        idx = idx[order]
        cuts = np.flatnonzero(np.diff(idx)) + 1
        starts = np.concatenate(([0], cuts)) if values.size else []
        chunks = np.split(values, cuts)
        for start, chunk in zip(starts, chunks):
            b = int(idx[start])
            handle = self.files[b]
            if handle is None:
                path = os.path.join(self.tmpdir, f"{self.tag}-{b:04d}.bin")
                handle = open(path, "w+b")
                self.files[b] = handle
                self.spills += 1
            handle.write(chunk.tobytes())

    def bucket_range(self, index):
        if self.files is None:
            return None
        return index * self.width, (index + 1) * self.width

    def iter_sorted(self):
        """Yield (bucket_index, sorted ndarray); ascending value ranges."""
        if self.files is None:
            if not self.parts:
                return
            merged = np.concatenate(self.parts)
            for p in self.parts:
                self.meter.drop(p.size)
            self.parts = []
            self.meter.grab(merged.size)
            merged.sort()
            yield None, merged
            self.meter.drop(merged.size)
            return
        for b, handle in enumerate(self.files):
            if handle is None:
                continue
            handle.seek(0)
            data = np.fromfile(handle, dtype=np.int64)
            handle.close()
            self.files[b] = None
            self.meter.grab(data.size)
            data.sort()
            yield b, data
            self.meter.drop(data.size)


def _check_permutation(store, n):
    """(bijection_ok, missing/repeated/out-of-range sample) for a streamed multiset."""
    issues = set()
    ok = store.count == n
    for b, chunk in store.iter_sorted():
        if b is None:
            lo, hi = 1, n
        else:
            lo, hi = store.bucket_range(b)
            lo, hi = max(lo, 1), min(hi - 1, n)
        expected = np.arange(lo, hi + 1, dtype=np.int64)
        if chunk.size == expected.size and np.array_equal(chunk, expected):
            continue
        ok = False
        repeated = chunk[1:][chunk[1:] == chunk[:-1]]
        outside = chunk[(chunk < 1) | (chunk > n)]
        missing = np.setdiff1d(expected, chunk, assume_unique=False)
        for part in (repeated, outside, missing):
            for v in part[:32]:
                issues.add(int(v))
    if store.count != n:
        ok = False
    return ok, sorted(issues)


def _collect_duplicates(store):
    dups = set()
    for _, chunk in store.iter_sorted():
        if chunk.size < 2:
            continue
        repeated = chunk[1:][chunk[1:] == chunk[:-1]]
        for v in np.unique(repeated):
            dups.add(int(v))
    return sorted(dups)


def _locate_duplicate_pair(forms, dup_values, transposed):
    targets = np.array(dup_values, dtype=np.int64)
    hits = {}
    for j in range(1, forms.cols + 1):
        column = forms.column_sums(j)
        for idx in np.flatnonzero(np.isin(column, targets)):
            i = int(idx) + 1
            vertex = (j, i) if transposed else (i, j)
            hits.setdefault(int(column[idx]), []).append(vertex)
    pairs = [tuple(sorted(vertices)[:2]) for vertices in hits.values() if len(vertices) >= 2]
    return min(pairs) if pairs else None


def stream_verify(spec, *, chunk_target=DEFAULT_CHUNK_TARGET, stats=None):
    """Antimagic check without materializing the graph or the labeling.

    Sweeps columns, computing each column's vertex sums in closed form, and
    checks exactly (no sampling, no hashing tricks) that the labels are a
    bijection onto 1..|E| and the sums are pairwise distinct.  Live state is
    one column of the normalized orientation plus fixed-size chunk buffers;
    sorted spill buckets on disk carry the rest.
    """
    start = time.perf_counter()
    _check_stream_spec(spec)
    forms, transposed = _forms(spec)
    nv, ne = spec.vertex_count(), spec.edge_count()
    meter = _Meter()
    meter.grab(forms.live_size())
    with tempfile.TemporaryDirectory(prefix="antimagic-stream-") as tmpdir:
        label_store = _BucketStore(ne, ne + 1, chunk_target, meter, tmpdir, "labels")
        sum_store = _BucketStore(nv, 4 * ne + 1, chunk_target, meter, tmpdir, "sums")
        for j in range(1, forms.cols + 1):
            column = forms.column_sums(j)
            meter.grab(column.size)
            sum_store.add(column)
            meter.drop(column.size)
            for arr in forms.column_label_arrays(j):
                meter.grab(arr.size)
                label_store.add(arr)
                meter.drop(arr.size)
        if label_store.count != ne or sum_store.count != nv:
            raise AssertionError(f"stream enumeration miscounted for {spec}")
        bijection_ok, label_issues = _check_permutation(label_store, ne)
        dup_values = _collect_duplicates(sum_store)
    duplicate = None
    if bijection_ok and dup_values:
        duplicate = _locate_duplicate_pair(forms, dup_values, transposed)
    antimagic = bijection_ok and not dup_values
    if stats is not None:
        stats.edges_labeled = ne
        stats.sums_checked = nv
        stats.peak_live_values = meter.peak
        stats.spill_files = label_store.spills + sum_store.spills
        stats.elapsed_seconds = time.perf_counter() - start
    return Verdict(antimagic, bijection_ok, duplicate, label_issues)
