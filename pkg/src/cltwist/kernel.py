"""Sign kernel for products of Clifford basis blades.

Basis blades are encoded as integer bitmasks: bit k-1 set means the
generator e_k is a factor, so the scalar blade is 0, e_1 is 1 and
e_{134} is 0b1101 = 13.  Blade masks form a group under XOR, and the
product of two basis blades is

    i_p * i_q = twist(p, q, mu) * i_(p XOR q)

where mu (+1 or -1) is the common square of the generators and the
twist is a sign.  Four independent algorithms compute that sign:

* :func:`twist_oracle`    brute force over generator lists (ground truth)
* :func:`twist_recursive` strips one low bit pair per step
* :func:`twist_tree`      4-state automaton over bit pairs, high bit first
* :func:`twist_closed`    popcount formula; the fastest, and the default

They are checked against each other exhaustively by the self-test and
acceptance suites.  Everything here is a pure function; blades are
plain non-negative ints, 64-bit masks by convention (generators e_1
through e_64).
"""

from __future__ import annotations

from typing import Callable, Dict, List, NamedTuple, Tuple

__all__ = [
    "ALGORITHMS",
    "TraceStep",
    "blade_product",
    "grade",
    "grade_sign",
    "tree_trace",
    "twist",
    "twist_closed",
    "twist_oracle",
    "twist_recursive",
    "twist_tree",
]


def _check_mu(mu: int) -> None:
    if mu != 1 and mu != -1:
        raise ValueError(f"mu must be +1 or -1, got {mu!r}")


def grade(p: int) -> int:
    """Number of generator factors of blade ``p``, i.e. its popcount."""
    return p.bit_count()


def grade_sign(p: int) -> int:
    """+1 for even-grade blades, -1 for odd.

    This is the sign picked up when one generator anticommutes past
    every factor of ``p``.
    """
    return -1 if p.bit_count() & 1 else 1


def _generators(p: int) -> List[int]:
    """Ascending 0-based generator positions of a blade mask."""
    return [k for k in range(p.bit_length()) if (p >> k) & 1]


def twist_oracle(p: int, q: int, mu: int) -> int:
    """Product sign computed the long way, straight from the axioms.

    Factors both blades into ascending generator lists, concatenates
    them, bubble-sorts back to ascending order (each adjacent swap is
    one anticommutation and flips the sign), then cancels equal
    neighbours (each cancellation is one generator square, a factor of
    mu).  Quadratic in the grades; this is the reference the fast
    kernels are validated against, not something to call in a loop.
    """
    _check_mu(mu)
    seq = _generators(p) + _generators(q)
    sign = 1
    n = len(seq)
    swapped = True
    while swapped:
        swapped = False
        for i in range(n - 1):
            if seq[i] > seq[i + 1]:
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                sign = -sign
                swapped = True
    i = 0
    while i + 1 < len(seq):
        if seq[i] == seq[i + 1]:  # e_k * e_k = mu
            sign *= mu
            i += 2
        else:
            i += 1
    return sign


def twist_recursive(p: int, q: int, mu: int) -> int:
    """Product sign by stripping one low bit pair per step.

    One step maps (2u+a, 2v+b) down to (u, v); the step factor is 1
    when b = 0, grade_sign(u) when b = 1, times mu when additionally
    a = 1.  Terminates when both masks reach zero.
    """
    _check_mu(mu)
    sign = 1
    while p | q:
        a = p & 1
        b = q & 1
        p >>= 1
        q >>= 1
        if b:
            if p.bit_count() & 1:
                sign = -sign
            if a and mu < 0:
                sign = -sign
    return sign


# The twist tree consists of four components, one per signed letter,
# repeating indefinitely; walking it is a 4-state automaton on states
# {A, -A, B, -B}.  Consuming the bit pair (p-bit, q-bit) moves
# p-bit-th branch then q-bit-th leaf.  A negated state behaves like
# the positive one with the running sign flipped, so the tables below
# carry (next letter, sign factor).  Letter A means an even number of
# p-bits consumed so far, B odd.  The component shape depends on mu,
# so both automata ship and are picked at call time.
_TREE_MU_POS = {
    "A": {(0, 0): ("A", 1), (0, 1): ("A", 1), (1, 0): ("B", 1), (1, 1): ("B", 1)},
    "B": {(0, 0): ("B", 1), (0, 1): ("B", -1), (1, 0): ("A", 1), (1, 1): ("A", -1)},
}
_TREE_MU_NEG = {
    "A": {(0, 0): ("A", 1), (0, 1): ("A", 1), (1, 0): ("B", 1), (1, 1): ("B", -1)},
    "B": {(0, 0): ("B", 1), (0, 1): ("B", -1), (1, 0): ("A", 1), (1, 1): ("A", 1)},
}

TREES: Dict[int, dict] = {1: _TREE_MU_POS, -1: _TREE_MU_NEG}


def _flatten(tree: dict) -> tuple:
    # Index: letter << 2 | p_bit << 1 | q_bit, letter A = 0, B = 1.
    flat = [None] * 8
    for letter, moves in tree.items():
        lbit = 0 if letter == "A" else 1
        for (a, b), (nxt, s) in moves.items():
            flat[lbit << 2 | a << 1 | b] = (0 if nxt == "A" else 1, s)
    return tuple(flat)


_FLAT_TREES = {mu: _flatten(t) for mu, t in TREES.items()}


class TraceStep(NamedTuple):
    """One automaton transition: the state reached after consuming the
    bit pair (bit_p, bit_q)."""

    letter: str  # "A" or "B"
    sign: int  # cumulative sign at this node, +1 or -1
    bit_p: int
    bit_q: int

    @property
    def state(self) -> str:
        """The signed node name, e.g. ``"-B"``."""
        return ("-" if self.sign < 0 else "") + self.letter


def twist_tree(p: int, q: int, mu: int) -> int:
    """Product sign by walking the twist tree, highest bit pair first.

    The shorter mask is zero padded on the left so both bit strings
    have equal length.  The walk starts at +A; only the sign of the
    final state matters.
    """
    _check_mu(mu)
    flat = _FLAT_TREES[mu]
    letter = 0
    sign = 1
    for k in range(max(p.bit_length(), q.bit_length()) - 1, -1, -1):
        letter, s = flat[letter << 2 | ((p >> k) & 1) << 1 | ((q >> k) & 1)]
        sign *= s
    return sign


def tree_trace(p: int, q: int, mu: int) -> List[TraceStep]:
    """Full tree walk for ``twist_tree``, one step per bit pair.

    Returns the empty list for p = q = 0 (nothing to consume; the sign
    is +1).  The last step's state decides the sign.
    """
    _check_mu(mu)
    flat = _FLAT_TREES[mu]
    letter = 0
    sign = 1
    steps: List[TraceStep] = []
    for k in range(max(p.bit_length(), q.bit_length()) - 1, -1, -1):
        a = (p >> k) & 1
        b = (q >> k) & 1
        letter, s = flat[letter << 2 | a << 1 | b]
        sign *= s
        steps.append(TraceStep("AB"[letter], sign, a, b))
    return steps


def twist_closed(p: int, q: int, mu: int) -> int:
    """Product sign in closed form.

    The reordering sign is (-1)**inversions, an inversion being a
    generator pair (i in p, k in q) with i above k; the cancellation
    factor is mu**popcount(p & q).  Inversions are counted popcount by
    popcount on shifted masks, so the loop runs once per bit of p
    rather than once per generator pair.
    """
    _check_mu(mu)
    swaps = 0
    t = p >> 1
    while t:
        swaps += (t & q).bit_count()
        t >>= 1
    if mu < 0 and (p & q).bit_count() & 1:
        swaps += 1
    return -1 if swaps & 1 else 1


#: Default sign kernel (the fastest validated one).
twist = twist_closed


def blade_product(p: int, q: int, mu: int) -> Tuple[int, int]:
    """Product of two basis blades: (sign, p XOR q).

    ``i_p * i_q == sign * i_(p XOR q)``.
    """
    return twist_closed(p, q, mu), p ^ q


#: The four sign algorithms keyed by their CLI names, in canonical order.
ALGORITHMS: Dict[str, Callable[[int, int, int], int]] = {
    "oracle": twist_oracle,
    "recursive": twist_recursive,
    "tree": twist_tree,
    "closed": twist_closed,
}
