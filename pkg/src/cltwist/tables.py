"""Twist tables: the full 2**n by 2**n matrix of blade sign factors.

Entries are symbolic in the generator square mu, so they live in the
four-element set {1, -1, m, -m} ("m" spells mu in machine output).
That set is a Klein four-group under multiplication, which lets a
whole table sit in a numpy int8 array of two-bit codes:

    bit 0   negation flag
    bit 1   power of mu (mu**2 = 1)

and entry products become XOR.  Two independent constructions are
provided and cross-checked by the test suite:

* :func:`table_direct` evaluates the closed form for every cell;
* :func:`table_blocks` grows the table by block substitution, doubling
  the resolution per round starting from a single 2x2 seed.

:func:`render_block_letters` shows the half-resolution view in which
each cell is a signed letter such as ``-mB``: the letter records the
row's grade parity and the coefficient is the twist of the halved
indices.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "MAX_DIM",
    "SymbolicSign",
    "TwistTable",
    "render_block_letters",
    "render_table",
    "table_blocks",
    "table_direct",
    "twist_symbolic",
]

#: Largest table dimension; 4**12 entries is the in-memory ceiling.
MAX_DIM = 12

_SPELL = ("1", "-1", "m", "-m")


class SymbolicSign:
    """One of {1, -1, m, -m}: a sign times an optional factor of mu."""

    __slots__ = ("_code",)

    def __init__(self, sign: int = 1, mu_power: int = 0):
        if sign != 1 and sign != -1:
            raise ValueError(f"sign must be +1 or -1, got {sign!r}")
        if mu_power not in (0, 1):
            raise ValueError(f"mu_power must be 0 or 1, got {mu_power!r}")
        object.__setattr__(self, "_code", (sign < 0) | (mu_power << 1))

    def __setattr__(self, name, value):
        raise AttributeError("SymbolicSign is immutable")

    @classmethod
    def from_code(cls, code: int) -> "SymbolicSign":
        if not 0 <= code <= 3:
            raise ValueError(f"code must be in 0..3, got {code!r}")
        return cls(-1 if code & 1 else 1, (code >> 1) & 1)

    @property
    def sign(self) -> int:
        return -1 if self._code & 1 else 1

    @property
    def mu_power(self) -> int:
        return (self._code >> 1) & 1

    @property
    def code(self) -> int:
        return self._code

    def __mul__(self, other):
        if not isinstance(other, SymbolicSign):
            return NotImplemented
        return SymbolicSign.from_code(self._code ^ other._code)

    def __neg__(self):
        return SymbolicSign.from_code(self._code ^ 1)

    def substitute(self, mu: int) -> int:
        """Numeric value once mu is fixed to +1 or -1."""
        if mu != 1 and mu != -1:
            raise ValueError(f"mu must be +1 or -1, got {mu!r}")
        value = self.sign
        if self.mu_power:
            value *= mu
        return value

    def __eq__(self, other):
        if isinstance(other, SymbolicSign):
            return self._code == other._code
        return NotImplemented

    def __hash__(self):
        return hash((SymbolicSign, self._code))

    def __str__(self):
        return _SPELL[self._code]

    def __repr__(self):
        return f"SymbolicSign(sign={self.sign:+d}, mu_power={self.mu_power})"


def twist_symbolic(p: int, q: int) -> SymbolicSign:
    """Symbolic twist of a blade pair, exact for any 64-bit masks."""
    if p < 0 or q < 0:
        raise ValueError("blade masks must be non-negative")
    mu_power = (p & q).bit_count() & 1
    swaps = 0
    t = p >> 1
    while t:
        swaps += (t & q).bit_count()
        t >>= 1
    return SymbolicSign(-1 if swaps & 1 else 1, mu_power)


def _check_dim(n: int, low: int = 1):
    if not isinstance(n, int) or not low <= n <= MAX_DIM:
        raise ValueError(
            f"dimension must be an integer in {low}..{MAX_DIM}, got {n!r}"
        )


class TwistTable:
    """Dense table of symbolic twists for all blade pairs below 2**n."""

    __slots__ = ("n", "codes")

    def __init__(self, n: int, codes: np.ndarray):
        _check_dim(n)
        size = 1 << n
        if codes.shape != (size, size) or codes.dtype != np.int8:
            raise ValueError("codes must be a 2**n square int8 array")
        codes = codes.copy()
        codes.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "codes", codes)

    def __setattr__(self, name, value):
        raise AttributeError("TwistTable is immutable")

    def entry(self, p: int, q: int) -> SymbolicSign:
        return SymbolicSign.from_code(int(self.codes[p, q]))

    def __getitem__(self, pq) -> SymbolicSign:
        p, q = pq
        return self.entry(p, q)

    def substitute(self, mu: int) -> np.ndarray:
        """int8 matrix of +-1 with mu fixed."""
        if mu != 1 and mu != -1:
            raise ValueError(f"mu must be +1 or -1, got {mu!r}")
        neg = self.codes & 1
        if mu == 1:
            return (1 - 2 * neg).astype(np.int8)
        mup = self.codes >> 1
        return (1 - 2 * (neg ^ mup)).astype(np.int8)

    def __eq__(self, other):
        if isinstance(other, TwistTable):
            return self.n == other.n and np.array_equal(
                self.codes, other.codes
            )
        return NotImplemented

    def __repr__(self):
        return f"<TwistTable n={self.n} ({self.codes.shape[0]}x{self.codes.shape[1]})>"


def _direct_codes(n: int) -> np.ndarray:
    size = 1 << n
    p = np.arange(size, dtype=np.uint32).reshape(-1, 1)
    q = np.arange(size, dtype=np.uint32).reshape(1, -1)
    mu_power = (np.bitwise_count(p & q) & 1).astype(np.int8)
    inv = np.zeros((size, size), dtype=np.int8)
    t = p >> 1
    while t.any():
        inv ^= (np.bitwise_count(t & q) & 1).astype(np.int8)
        t = t >> 1
    return inv | (mu_power << 1)


def table_direct(n: int) -> TwistTable:
    """Twist table built cell-by-cell from the closed form."""
    _check_dim(n)
    return TwistTable(n, _direct_codes(n))


def _block_step(codes, letters):
    """One substitution round: every cell becomes a 2x2 block.

    Letters: 0 is A, 1 is B.  A coefficiented letter c*A becomes
    [[c, c], [c, mc]] with letters [[A, A], [B, B]], and c*B becomes
    [[c, -c], [c, -mc]] with letters [[B, B], [A, A]]; both collapse
    to the same code arithmetic because the sign flips occur exactly
    on B cells.  The final numeric expansion of A and B uses the same
    formulas with the letters thrown away.
    """
    m = codes.shape[0]
    nc = np.empty((2 * m, 2 * m), dtype=np.int8)
    nc[0::2, 0::2] = codes
    nc[0::2, 1::2] = codes ^ letters
    nc[1::2, 0::2] = codes
    nc[1::2, 1::2] = codes ^ letters ^ 2
    nl = np.empty((2 * m, 2 * m), dtype=np.int8)
    nl[0::2, 0::2] = letters
    nl[0::2, 1::2] = letters
    nl[1::2, 0::2] = letters ^ 1
    nl[1::2, 1::2] = letters ^ 1
    return nc, nl


def _grown_blocks(rounds: int):
    """(codes, letters) after the given number of rounds from seed A."""
    codes = np.zeros((1, 1), dtype=np.int8)
    letters = np.zeros((1, 1), dtype=np.int8)
    for _ in range(rounds):
        codes, letters = _block_step(codes, letters)
    return codes, letters


def table_blocks(n: int) -> TwistTable:
    """Twist table grown by block substitution from the letter A.

    n - 1 substitution rounds produce the half-resolution letter grid;
    expanding each letter to its 2x2 seed matrix (which reuses the
    same code arithmetic) yields the full table.
    """
    _check_dim(n)
    codes, letters = _grown_blocks(n - 1)
    final, _ = _block_step(codes, letters)
    return TwistTable(n, final)


# --- rendering -------------------------------------------------------------

def _entry_strings(codes: np.ndarray, mu) -> np.ndarray:
    if mu is None:
        lut = np.array(_SPELL)
    elif mu == 1:
        lut = np.array(["1", "-1", "1", "-1"])
    elif mu == -1:
        lut = np.array(["1", "-1", "-1", "1"])
    else:
        raise ValueError(f"mu must be +1, -1 or None, got {mu!r}")
    return lut[codes]


def render_table(table: TwistTable, format: str = "text", mu=None) -> str:
    """Whole table as text, one row per line.

    format "text" separates entries with single spaces, "csv" with
    commas; both use LF line endings, no header, entries spelled from
    {1, -1, m, -m}.  mu None keeps entries symbolic, +1 or -1
    substitutes numbers.
    """
    if format not in ("text", "csv"):
        raise ValueError(f"format must be 'text' or 'csv', got {format!r}")
    sep = " " if format == "text" else ","
    cells = _entry_strings(table.codes, mu)
    return "".join(sep.join(row) + "\n" for row in cells)


_LETTER_SPELL = ("A", "-A", "mA", "-mA", "B", "-B", "mB", "-mB")


def block_letter_grid(n: int):
    """Codes and letters of the half-resolution block view.

    Cell (p, q) of the 2**(n-1) grid carries the twist of (p, q) as
    its coefficient and letter A or B by the grade parity of p.
    """
    _check_dim(n, low=2)
    codes = _direct_codes(n - 1)
    size = 1 << (n - 1)
    row_par = (np.bitwise_count(np.arange(size, dtype=np.uint32)) & 1)
    letters = np.broadcast_to(
        row_par.astype(np.int8).reshape(-1, 1), codes.shape
    )
    return codes, letters


def render_block_letters(n: int, format: str = "text") -> str:
    """Half-resolution table of coefficiented letters, e.g. "-mB"."""
    if format not in ("text", "csv"):
        raise ValueError(f"format must be 'text' or 'csv', got {format!r}")
    sep = " " if format == "text" else ","
    codes, letters = block_letter_grid(n)
    lut = np.array(_LETTER_SPELL)
    cells = lut[codes | (letters << 2)]
    return "".join(sep.join(row) + "\n" for row in cells)
