"""Sparse Betti diagrams with exact rational entries.

A diagram is a finitely supported map (i, j) -> Q with i >= 0 and j any
integer.  Zero entries are never stored, so equality is structural.  All
arithmetic is exact; no floats appear anywhere.
"""

from fractions import Fraction

from .errors import BettiFormatError

__all__ = [
    "Diagram",
    "ZERO",
    "format_betti",
    "parse_betti",
    "render_grid",
]


def _as_fraction(value):
    if isinstance(value, float):
        raise TypeError("floating-point entries are not allowed")
    return Fraction(value)


class Diagram:
    """Immutable sparse diagram over the rationals.

    Construct from a mapping or an iterable of ((i, j), value) pairs;
    repeated keys are summed and zero results dropped.
    """

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries=()):
        if isinstance(entries, Diagram):
            items = entries._entries.items()
        elif isinstance(entries, dict):
            items = entries.items()
        else:
            items = entries
        acc = {}
        for (i, j), value in items:
            i = int(i)
            j = int(j)
            if i < 0:
                raise ValueError(f"homological index must be >= 0, got {i}")
            value = _as_fraction(value)
            if value == 0:
                continue
            key = (i, j)
            total = acc.get(key, 0) + value
            if total == 0:
                acc.pop(key, None)
            else:
                acc[key] = total
        self._entries = acc
        self._hash = None

    # -- access ---------------------------------------------------------

    def __getitem__(self, key):
        return self._entries.get(key, Fraction(0))

    def __contains__(self, key):
        return key in self._entries

    def items(self):
        """Entries sorted by (i, j)."""
        return sorted(self._entries.items())

    @property
    def support(self):
        return frozenset(self._entries)

    def is_zero(self):
        return not self._entries

    def __bool__(self):
        return bool(self._entries)

    def __len__(self):
        return len(self._entries)

    @property
    def width(self):
        """Largest stored homological index."""
        if not self._entries:
            raise ValueError("empty diagram has no width")
        return max(i for i, _ in self._entries)

    @property
    def regularity(self):
        """Largest j - i over stored entries."""
        if not self._entries:
            raise ValueError("empty diagram has no regularity")
        return max(j - i for i, j in self._entries)

    def column(self, i):
        """Map j -> value for column i (possibly empty)."""
        return {j: v for (k, j), v in self._entries.items() if k == i}

    def min_shift(self, i):
        col = self.column(i)
        if not col:
            return None
        return min(col)

    def max_shift(self, i):
        col = self.column(i)
        if not col:
            return None
        return max(col)

    # -- algebra --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        acc = dict(self._entries)
        for key, value in other._entries.items():
            total = acc.get(key, 0) + value
            if total == 0:
                acc.pop(key, None)
            else:
                acc[key] = total
        result = Diagram.__new__(Diagram)
        result._entries = acc
        result._hash = None
        return result

    def __sub__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def scale(self, q):
        q = _as_fraction(q)
        if q == 0:
            return ZERO
        result = Diagram.__new__(Diagram)
        result._entries = {k: q * v for k, v in self._entries.items()}
        result._hash = None
        return result

    def __mul__(self, q):
        return self.scale(q)

    __rmul__ = __mul__

    def dual(self, n):
        """Entry (i, j) of the result is entry (n - i, -j) of self."""
        if self._entries and n < self.width:
            raise ValueError(f"n = {n} is smaller than width {self.width}")
        return Diagram(((n - i, -j), v) for (i, j), v in self._entries.items())

    def twist(self, r):
        """Entry (i, j) of the result is entry (i, r + j) of self."""
        return Diagram(((i, j - r), v) for (i, j), v in self._entries.items())

    # -- identity -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._entries.items()))
        return self._hash

    def __repr__(self):
        return f"Diagram({dict(self.items())!r})"

    def __str__(self):
        if self.is_zero():
            return "(zero diagram)"
        cells = {key: _fraction_str(v) for key, v in self._entries.items()}
        return render_grid(cells)


ZERO = Diagram()


def _fraction_str(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def render_grid(cells, blank="."):
    """Render sparse cells {(i, j): str} in the conventional grid layout.

    Grid row r holds the cells (i, r + i): rows are indexed by j - i,
    columns by i.  Columns are right-aligned and space-separated.
    """
    if not cells:
        return blank
    rows = [j - i for i, j in cells]
    cols = [i for i, _ in cells]
    lo, hi = min(rows), max(rows)
    ncols = max(cols) + 1
    grid = [
        [cells.get((i, r + i), blank) for i in range(ncols)]
        for r in range(lo, hi + 1)
    ]
    widths = [max(len(line[i]) for line in grid) for i in range(ncols)]
    return "\n".join(
        " ".join(cell.rjust(widths[i]) for i, cell in enumerate(line)).rstrip()
        for line in grid
    )


# -- BETTI/1 text format ------------------------------------------------

BETTI_HEADER = "BETTI 1"


def format_betti(diagram):
    """Serialize a diagram in the BETTI/1 format."""
    lines = [BETTI_HEADER]
    for (i, j), value in diagram.items():
        lines.append(f"{i}\t{j}\t{_fraction_str(value)}")
    return "\n".join(lines) + "\n"


def _parse_rational(text, lineno):
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise BettiFormatError(f"bad rational {text!r}", lineno) from None
    if q <= 0:
        raise BettiFormatError(f"denominator must be positive in {text!r}", lineno)
    value = Fraction(p, q)
    if sep and (value.numerator != p or value.denominator != q):
        raise BettiFormatError(f"fraction {text!r} is not in lowest terms", lineno)
    return value


def parse_betti(text):
    """Parse a BETTI/1 document, rejecting malformed input."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != BETTI_HEADER:
        raise BettiFormatError(f"expected header {BETTI_HEADER!r}", 1)
    entries = {}
    previous = None
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise BettiFormatError("expected i<TAB>j<TAB>value", lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise BettiFormatError("bad integer index", lineno) from None
        if i < 0:
            raise BettiFormatError("homological index must be >= 0", lineno)
        value = _parse_rational(parts[2], lineno)
        if value == 0:
            raise BettiFormatError("zero entries may not be stored", lineno)
        if (i, j) in entries:
            raise BettiFormatError(f"duplicate entry ({i},{j})", lineno)
        if previous is not None and (i, j) <= previous:
            raise BettiFormatError("entries must be sorted by (i, j)", lineno)
        previous = (i, j)
        entries[(i, j)] = value
    return Diagram(entries)
