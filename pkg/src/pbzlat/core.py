"""Finite bounded involution lattices with a Brouwer complement.

Carrier objects plus the order machinery everything else builds on:
validation of raw tables, meets and joins, the modal operators derived
from the two unary maps, isomorphism testing and canonical forms.

Elements are plain integer indices 0..n-1.  The full "less or equal"
table is the source of truth; covers, meets and joins are derived.
Labels are presentation only and never carry semantics.
"""

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ValidationReport",
    "ValidationError",
    "validate_tables",
    "BoundedLattice",
    "FiniteAlgebra",
    "is_isomorphic",
    "is_order_isomorphic",
    "canonical_form",
    "chain_lattice",
    "boolean_lattice",
]


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validating raw tables.

    ``violations`` holds one ``(rule, witness)`` pair per violated rule,
    where the witness is the lexicographically least offending element
    tuple.  Format problems (wrong shapes, out-of-range maps) use rules
    prefixed ``format:`` and suppress the semantic checks that would be
    meaningless on malformed data.
    """

    ok: bool
    violations: tuple

    def rules(self):
        return [rule for rule, _ in self.violations]


class ValidationError(ValueError):
    """Raised when constructing an algebra from invalid tables."""

    def __init__(self, report):
        self.report = report
        lines = ", ".join(f"{r} at {w}" for r, w in report.violations)
        super().__init__(f"invalid algebra tables: {lines}")


def _bits(mask):
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _masks_from_leq(leq):
    n = len(leq)
    up = [0] * n
    down = [0] * n
    for a in range(n):
        row = leq[a]
        m = 0
        for b in range(n):
            if row[b]:
                m |= 1 << b
                down[b] |= 1 << a
        up[a] = m
    return up, down


def _least_of(mask, up):
    """Least element of the set ``mask``, or -1 if there is none."""
    for d in _bits(mask):
        if mask & ~up[d] == 0:
            return d
    return -1


def _greatest_of(mask, down):
    for d in _bits(mask):
        if mask & ~down[d] == 0:
            return d
    return -1


class _Order:
    """Validated bounded-lattice order with precomputed op tables."""

    __slots__ = ("n", "leq", "up", "down", "meet", "join", "zero", "one")

    def __init__(self, n, leq, up, down, meet, join, zero, one):
        self.n = n
        self.leq = leq
        self.up = up
        self.down = down
        self.meet = meet
        self.join = join
        self.zero = zero
        self.one = one


def _check_order(leq_arr):
    """Check partial order + lattice axioms on an n x n boolean array.

    Returns ``(order_or_None, violations)``.  The order object is built
    only when every check passes.
    """
    n = leq_arr.shape[0]
    violations = []
    leq = [[bool(leq_arr[a, b]) for b in range(n)] for a in range(n)]

    refl = next(((a,) for a in range(n) if not leq[a][a]), None)
    if refl:
        violations.append(("order:reflexive", refl))
    anti = next(
        ((a, b) for a in range(n) for b in range(n)
         if a != b and leq[a][b] and leq[b][a]),
        None,
    )
    if anti:
        violations.append(("order:antisymmetric", anti))
    trans = next(
        ((a, b, c) for a in range(n) for b in range(n) for c in range(n)
         if leq[a][b] and leq[b][c] and not leq[a][c]),
        None,
    )
    if trans:
        violations.append(("order:transitive", trans))
    if violations:
        return None, violations

    up, down = _masks_from_leq(leq)
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    no_meet = no_join = None
    for a in range(n):
        for b in range(a, n):
            g = _greatest_of(down[a] & down[b], down)
            if g < 0 and no_meet is None:
                no_meet = (a, b)
            l = _least_of(up[a] & up[b], up)
            if l < 0 and no_join is None:
                no_join = (a, b)
            meet[a][b] = meet[b][a] = g
            join[a][b] = join[b][a] = l
    if no_meet:
        violations.append(("lattice:meet", no_meet))
    if no_join:
        violations.append(("lattice:join", no_join))
    if violations:
        return None, violations
    full = (1 << n) - 1
    zero = _least_of(full, up)
    one = _greatest_of(full, down)
    if zero < 0:
        violations.append(("bounds:zero", ()))
    if one < 0:
        violations.append(("bounds:one", ()))
    if violations:
        return None, violations
    order = _Order(n, leq_arr, tuple(up), tuple(down),
                   tuple(tuple(r) for r in meet),
                   tuple(tuple(r) for r in join), zero, one)
    return order, []


def validate_tables(leq, kleene, brouwer, labels=None, zero=None, one=None):
    """Validate raw tables for a bounded involution lattice with ~.

    Reports every violated rule with a minimal witness instead of
    stopping at the first problem.  ``zero``/``one``, when given, are
    checked against the computed bounds.
    """
    violations = []
    try:
        arr = np.asarray(leq, dtype=bool)
    except Exception:
        violations.append(("format:leq-shape", ()))
        return ValidationReport(False, tuple(violations))
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        violations.append(("format:leq-shape", arr.shape))
        return ValidationReport(False, tuple(violations))
    n = arr.shape[0]
    kleene = list(kleene)
    brouwer = list(brouwer)
    if len(kleene) != n or len(brouwer) != n:
        violations.append(("format:map-length", (len(kleene), len(brouwer))))
    else:
        bad = next(
            ((a,) for a in range(n)
             if not (0 <= kleene[a] < n) or not (0 <= brouwer[a] < n)),
            None,
        )
        if bad:
            violations.append(("format:map-range", bad))
    if labels is not None:
        labels = list(labels)
        if len(labels) != n or len(set(labels)) != n:
            violations.append(("format:labels", (len(labels),)))
    if violations:
        return ValidationReport(False, tuple(violations))

    order, order_violations = _check_order(arr)
    violations.extend(order_violations)
    if order is None:
        return ValidationReport(False, tuple(violations))

    if zero is not None and zero != order.zero:
        violations.append(("bounds:zero", (zero,)))
    if one is not None and one != order.one:
        violations.append(("bounds:one", (one,)))

    inv = next(((a,) for a in range(n) if kleene[kleene[a]] != a), None)
    if inv:
        violations.append(("kleene:involution", inv))
    antitone = next(
        ((a, b) for a in range(n) for b in range(n)
         if arr[a, b] and not arr[kleene[b], kleene[a]]),
        None,
    )
    if antitone:
        violations.append(("kleene:antitone", antitone))
    return ValidationReport(not violations, tuple(violations))


def _default_labels(n, zero, one):
    names = []
    letters = "abcdefghijklmnopqrstuvwxyz"
    k = 0
    for a in range(n):
        if a == zero:
            names.append("0")
        elif a == one:
            names.append("1")
        else:
            names.append(letters[k % 26] + ("" if k < 26 else str(k // 26)))
            k += 1
    return tuple(names)


class BoundedLattice:
    """A finite bounded lattice, no unary maps.

    Input and output carrier for the twist and sum constructions, and
    the thing the lattice enumerator emits.
    """

    __slots__ = ("_ord", "labels", "name")

    def __init__(self, leq, labels=None, name=None):
        arr = np.asarray(leq, dtype=bool).copy()
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValidationError(
                ValidationReport(False, (("format:leq-shape", arr.shape),)))
        order, violations = _check_order(arr)
        if order is None:
            raise ValidationError(ValidationReport(False, tuple(violations)))
        arr.setflags(write=False)
        self._ord = order
        if labels is None:
            labels = _default_labels(order.n, order.zero, order.one)
        else:
            labels = tuple(str(x) for x in labels)
            if len(labels) != order.n or len(set(labels)) != order.n:
                raise ValidationError(
                    ValidationReport(False, (("format:labels", (len(labels),)),)))
        self.labels = labels
        self.name = name

    @classmethod
    def _from_order(cls, order, labels=None, name=None):
        obj = object.__new__(cls)
        obj._ord = order
        obj.labels = labels or _default_labels(order.n, order.zero, order.one)
        obj.name = name
        return obj

    @classmethod
    def from_covers(cls, n, covers, labels=None, name=None):
        """Build from a list of cover pairs ``(a, b)`` meaning a < b."""
        leq = _closure_from_covers(n, covers)
        return cls(leq, labels=labels, name=name)

    @property
    def n(self):
        return self._ord.n

    @property
    def leq(self):
        return self._ord.leq

    @property
    def zero(self):
        return self._ord.zero

    @property
    def one(self):
        return self._ord.one

    def le(self, a, b):
        return bool(self._ord.leq[a, b])

    def meet(self, a, b):
        return self._ord.meet[a][b]

    def join(self, a, b):
        return self._ord.join[a][b]

    def covers(self):
        return _covers_of(self._ord)

    def __repr__(self):
        tag = self.name or "lattice"
        return f"<BoundedLattice {tag} n={self.n}>"


def _closure_from_covers(n, covers):
    leq = [[a == b for b in range(n)] for a in range(n)]
    for a, b in covers:
        leq[a][b] = True
    changed = True
    while changed:
        changed = False
        for a in range(n):
            ra = leq[a]
            for b in range(n):
                if ra[b]:
                    rb = leq[b]
                    for c in range(n):
                        if rb[c] and not ra[c]:
                            ra[c] = True
                            changed = True
    return leq


def _covers_of(order):
    """Hasse cover pairs (a, b) with a covered by b, lex sorted."""
    n = order.n
    out = []
    for a in range(n):
        above = order.up[a] & ~(1 << a)
        for b in _bits(above):
            between = order.up[a] & order.down[b] & ~(1 << a) & ~(1 << b)
            if between == 0:
                out.append((a, b))
    return out


class FiniteAlgebra:
    """Bounded involution lattice with a Brouwer complement.

    ``kleene`` is the involution ', ``brouwer`` the map ~.  Both are
    stored as tuples of image indices.  Instances are validated at
    construction and treated as immutable afterwards.
    """

    __slots__ = ("_ord", "kleene", "brouwer", "labels", "name", "_canon")

    def __init__(self, leq, kleene, brouwer, labels=None, name=None):
        report = validate_tables(leq, kleene, brouwer, labels=labels)
        if not report.ok:
            raise ValidationError(report)
        arr = np.asarray(leq, dtype=bool).copy()
        order, _ = _check_order(arr)
        arr.setflags(write=False)
        self._ord = order
        self.kleene = tuple(int(x) for x in kleene)
        self.brouwer = tuple(int(x) for x in brouwer)
        self.labels = (tuple(str(x) for x in labels) if labels is not None
                       else _default_labels(order.n, order.zero, order.one))
        self.name = name
        self._canon = None

    @classmethod
    def _from_order(cls, order, kleene, brouwer, labels=None, name=None):
        # internal fast path: order comes from an already validated source
        obj = object.__new__(cls)
        obj._ord = order
        obj.kleene = tuple(kleene)
        obj.brouwer = tuple(brouwer)
        obj.labels = labels or _default_labels(order.n, order.zero, order.one)
        obj.name = name
        obj._canon = None
        return obj

    @classmethod
    def from_lattice(cls, lattice, kleene, brouwer, labels=None, name=None):
        """Decorate a BoundedLattice with ' and ~ (with validation)."""
        report = validate_tables(lattice.leq, kleene, brouwer,
                                 labels=labels or lattice.labels)
        if not report.ok:
            raise ValidationError(report)
        return cls._from_order(lattice._ord, tuple(kleene), tuple(brouwer),
                               labels=tuple(labels or lattice.labels),
                               name=name)

    @classmethod
    def from_covers(cls, n, covers, kleene, brouwer, labels=None, name=None):
        leq = _closure_from_covers(n, covers)
        return cls(leq, kleene, brouwer, labels=labels, name=name)

    @property
    def n(self):
        return self._ord.n

    @property
    def leq(self):
        return self._ord.leq

    @property
    def zero(self):
        return self._ord.zero

    @property
    def one(self):
        return self._ord.one

    def le(self, a, b):
        return bool(self._ord.leq[a, b])

    def meet(self, a, b):
        return self._ord.meet[a][b]

    def join(self, a, b):
        return self._ord.join[a][b]

    def box(self, a):
        """box a = (a')~"""
        return self.brouwer[self.kleene[a]]

    def diamond(self, a):
        """diamond a = (a~)~"""
        return self.brouwer[self.brouwer[a]]

    def covers(self):
        return _covers_of(self._ord)

    def lattice_reduct(self):
        return BoundedLattice._from_order(self._ord, labels=self.labels,
                                          name=self.name)

    def relabel(self, labels, name=None):
        """Same algebra, new presentation labels."""
        labels = tuple(str(x) for x in labels)
        if len(labels) != self.n or len(set(labels)) != self.n:
            raise ValueError("need %d distinct labels" % self.n)
        return FiniteAlgebra._from_order(self._ord, self.kleene, self.brouwer,
                                         labels=labels, name=name or self.name)

    def tables_equal(self, other):
        """Element-wise identity of order and maps (labels ignored)."""
        return (self.n == other.n
                and bool(np.array_equal(self.leq, other.leq))
                and self.kleene == other.kleene
                and self.brouwer == other.brouwer)

    def __repr__(self):
        tag = self.name or "algebra"
        return f"<FiniteAlgebra {tag} n={self.n}>"


# ---------------------------------------------------------------------------
# isomorphism and canonical forms
#
# Both work on the raw data (up-set bitmasks plus a tuple of unary maps)
# so the lattice enumerator can use them without building carrier objects.


def _refine_colors(n, up, down, unaries):
    """Iterated invariant refinement; returns a color per element.

    Colors are ranks of structural signatures, so they are deterministic
    across processes and comparable between structures refined jointly.
    """
    col = [0] * n
    classes = 1
    while True:
        sigs = []
        for a in range(n):
            below = tuple(sorted(col[b] for b in _bits(down[a] & ~(1 << a))))
            above = tuple(sorted(col[b] for b in _bits(up[a] & ~(1 << a))))
            imgs = tuple(col[f[a]] for f in unaries)
            pres = tuple(
                tuple(sorted(col[x] for x in range(n) if f[x] == a))
                for f in unaries)
            sigs.append((col[a], below, above, imgs, pres))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        new_classes = len(ranking)
        if new_classes == classes:
            return new
        col, classes = new, new_classes


def _canonical_search(n, up, unaries):
    """Minimal prefix-incremental encoding over color-sorted orderings.

    Returns ``(ordering, encoding)`` where the encoding is a flat tuple
    of small ints that fully determines the structure.  Equal encodings
    mean isomorphic structures and vice versa.
    """
    down = [0] * n
    for a in range(n):
        for b in _bits(up[a]):
            down[b] |= 1 << a
    col = _refine_colors(n, up, down, unaries)

    best = None
    best_order = None
    SENT = n  # placeholder for "image not placed yet"

    def increment(e, placed, pos_of):
        inc = [col[e]]
        for j in placed:
            inc.append(1 if up[j] >> e & 1 else 0)
        for j in placed:
            inc.append(1 if up[e] >> j & 1 else 0)
        for f in unaries:
            img = f[e]
            # a self-image gets the slot being filled; SENT means the
            # image comes later (recorded then via the preimage bits)
            inc.append(len(placed) if img == e else pos_of.get(img, SENT))
            for j in placed:
                inc.append(1 if f[j] == e else 0)
        return inc

    placed = []
    pos_of = {}
    enc = []

    def search(remaining):
        nonlocal best, best_order
        if not remaining:
            if best is None or enc < best:
                best = list(enc)
                best_order = list(placed)
            return
        mincol = min(col[e] for e in remaining)
        start = len(enc)
        for e in sorted(e for e in remaining if col[e] == mincol):
            inc = increment(e, placed, pos_of)
            # pruning against best is only sound while the built prefix
            # still matches best's prefix; once it is strictly smaller,
            # every completion wins and must be explored
            if best is not None and enc == best[:start]:
                seg = best[start:start + len(inc)]
                if inc > seg:
                    continue
            placed.append(e)
            pos_of[e] = len(placed) - 1
            enc.extend(inc)
            search(remaining - {e})
            del enc[start:]
            del pos_of[e]
            placed.pop()

    search(frozenset(range(n)))
    return tuple(best_order), tuple(best)


def _canon_bytes(n, up, unaries):
    order, enc = _canonical_search(n, up, unaries)
    return bytes([n, len(unaries)]) + bytes(enc)


def canonical_form(algebra):
    """Canonical byte string: equal exactly for isomorphic algebras."""
    if isinstance(algebra, BoundedLattice):
        return _canon_bytes(algebra.n, algebra._ord.up, ())
    if algebra._canon is None:
        algebra._canon = _canon_bytes(
            algebra.n, algebra._ord.up, (algebra.kleene, algebra.brouwer))
    return algebra._canon


def _iso_search(n, upA, unA, upB, unB):
    """Backtracking bijection search; returns image tuple or None."""
    # joint refinement makes the colors of the two sides comparable
    N = 2 * n
    up = list(upA) + [m << n for m in upB]
    down = [0] * N
    for a in range(N):
        for b in _bits(up[a]):
            down[b] |= 1 << a
    unaries = tuple(
        tuple(list(fA) + [fB[i] + n for i in range(n)])
        for fA, fB in zip(unA, unB))
    col = _refine_colors(N, up, down, unaries)
    colA, colB = col[:n], col[n:]
    if sorted(colA) != sorted(colB):
        return None

    order = sorted(range(n), key=lambda a: (colA[a], a))
    img = [-1] * n
    used = [False] * n

    def ok(a, b, placed):
        if colA[a] != colB[b]:
            return False
        for x in placed:
            y = img[x]
            if (upA[x] >> a & 1) != (upB[y] >> b & 1):
                return False
            if (upA[a] >> x & 1) != (upB[b] >> y & 1):
                return False
        for fA, fB in zip(unA, unB):
            ia = fA[a]
            if ia == a:
                if fB[b] != b:
                    return False
            elif img[ia] != -1 and fB[b] != img[ia]:
                return False
            for x in placed:
                if fA[x] == a and fB[img[x]] != b:
                    return False
                if fA[a] == x and fB[b] != img[x]:
                    return False
        return True

    def bt(i, placed):
        if i == n:
            return True
        a = order[i]
        for b in range(n):
            if not used[b] and ok(a, b, placed):
                img[a] = b
                used[b] = True
                if bt(i + 1, placed + [a]):
                    return True
                img[a] = -1
                used[b] = False
        return False

    if not bt(0, []):
        return None
    # full verification, cheap insurance against pruning slips
    for a in range(n):
        for b in range(n):
            if (upA[a] >> b & 1) != (upB[img[a]] >> img[b] & 1):
                return None
    for fA, fB in zip(unA, unB):
        for a in range(n):
            if img[fA[a]] != fB[img[a]]:
                return None
    return tuple(img)


def is_isomorphic(A, B):
    """Isomorphism A -> B as an image tuple, or None.

    Works for two FiniteAlgebras (order + both maps preserved) and for
    two BoundedLattices (order only).
    """
    if isinstance(A, BoundedLattice) != isinstance(B, BoundedLattice):
        raise TypeError("cannot compare a bare lattice with an algebra")
    if A.n != B.n:
        return None
    if isinstance(A, BoundedLattice):
        return _iso_search(A.n, A._ord.up, (), B._ord.up, ())
    return _iso_search(A.n, A._ord.up, (A.kleene, A.brouwer),
                       B._ord.up, (B.kleene, B.brouwer))


def is_order_isomorphic(A, B):
    """Lattice-reduct isomorphism, ignoring unary maps."""
    if A.n != B.n:
        return None
    return _iso_search(A.n, A._ord.up, (), B._ord.up, ())


# ---------------------------------------------------------------------------
# stock bare lattices


def chain_lattice(n, name=None):
    """The n-element chain 0 < 1 < ... < n-1."""
    if n < 1:
        raise ValueError("chain needs at least one element")
    leq = [[a <= b for b in range(n)] for a in range(n)]
    return BoundedLattice(leq, name=name or f"chain{n}")


def boolean_lattice(size, name=None):
    """Boolean lattice with ``size`` elements; size must be a power of two."""
    k = size.bit_length() - 1
    if size < 1 or 1 << k != size:
        raise ValueError("boolean lattice size must be a power of two")
    leq = [[(a & b) == a for b in range(size)] for a in range(size)]
    return BoundedLattice(leq, name=name or f"bool{size}")
