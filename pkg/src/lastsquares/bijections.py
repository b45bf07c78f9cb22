"""Executable bijections connecting the tiling families.

Three constructions, each invertible on its stated domain:

1. Marked colored boards to plus-class family D. Choosing an even number
   of cells on a length-m board induces an alternating coloring (black
   first, color flips after every chosen cell). Marking some of the
   white-to-black boundaries and laying a domino across each marked
   boundary produces a plus-class family-D arrangement, and the map is a
   bijection.

2. Plus-class family D to plus-class family B. Reading a family-D board
   as black and white intervals (a domino being a white cell followed by
   a black cell), mark each interval's first cell, turn marked squares
   into decorated ones and unmarked squares white, then delete the first
   cell and every domino's left half, turning each domino's right half
   black. The result lives on m - 1 - r cells with r black cells, in the
   plus class, and the map is a bijection.

3. Conjugation, a weight-parity-flipping and sign-flipping involution on
   the union of the odd-weight plus class and the even-weight minus
   class, undefined on exactly one arrangement (epsilon plus for odd r,
   epsilon minus for even r).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterator, Optional

from .arrangements import (
    DominoArrangement,
    SignClass,
    SquareArrangement,
    _plus_b,
    _plus_d,
    _weight_b,
    decode_domino,
    decode_square,
    encode,
)
from .errors import (
    InternalInvariantViolation,
    NotPlusClass,
    ParityMismatch,
    ParseError,
    RangeError,
)


@dataclass(frozen=True)
class MarkedColoredBoard:
    """A length-m board with 2i chosen cells and r marked boundaries.

    chosen must be strictly increasing 1-based cell indexes, of even
    count at least 2. Mark slot t stands for the boundary after chosen
    cell number 2t (the t-th white-to-black color change); slots run
    from 1 to i - 1, the final slot being excluded uniformly. That one
    rule covers both boundary situations: with the last cell chosen the
    i-th change sits off the board, and with it unchosen the i-th change
    is the forbidden one.
    """

    m: int
    chosen: tuple[int, ...]
    marks: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "chosen", tuple(self.chosen))
        object.__setattr__(self, "marks", frozenset(self.marks))
        if self.m < 1:
            raise ValueError(f"board length must be positive, got {self.m}")
        ch = self.chosen
        if len(ch) < 2 or len(ch) % 2 != 0:
            raise ValueError("chosen cells must come in even count, at least 2")
        if any(b <= a for a, b in zip(ch, ch[1:])):
            raise ValueError("chosen cells must be strictly increasing")
        if ch[0] < 1 or ch[-1] > self.m:
            raise ValueError(f"chosen cells must lie in 1..{self.m}")
        i = len(ch) // 2
        bad = [t for t in self.marks if not 1 <= t <= i - 1]
        if bad:
            raise ValueError(f"mark slots must lie in 1..{i - 1}, got {sorted(bad)}")

    @property
    def i(self) -> int:
        """Half the number of chosen cells."""
        return len(self.chosen) // 2

    @property
    def r(self) -> int:
        """Number of marked boundaries."""
        return len(self.marks)

    def serialize(self) -> str:
        """Canonical one-line record, parse() round-trips it exactly."""
        chosen = ",".join(map(str, self.chosen))
        marks = ",".join(map(str, sorted(self.marks)))
        return f"m={self.m};chosen={chosen};marks={marks}"

    @classmethod
    def parse(cls, text: str) -> "MarkedColoredBoard":
        """Parse the record format m=..;chosen=..,..;marks=..,..

        Raises ParseError with the byte offset of the first offending
        character; structurally valid records that violate the board
        invariants raise ValueError.
        """
        parts = text.split(";")
        if len(parts) != 3:
            raise ParseError("expected three ';'-separated fields", 0)
        offset = 0
        fields = []
        for part in parts:
            if "=" not in part:
                raise ParseError("expected key=value", offset)
            key, value = part.split("=", 1)
            fields.append((key, value, offset + len(key) + 1))
            offset += len(part) + 1
        (k1, v1, o1), (k2, v2, o2), (k3, v3, o3) = fields
        if k1 != "m":
            raise ParseError("first field must be 'm'", 0)
        if k2 != "chosen":
            raise ParseError("second field must be 'chosen'", o1 + len(v1) + 1)
        if k3 != "marks":
            raise ParseError("third field must be 'marks'", o2 + len(v2) + 1)
        m = _parse_int(v1, o1)
        chosen = _parse_int_list(v2, o2)
        if not chosen:
            raise ParseError("chosen list must not be empty", o2)
        marks = _parse_int_list(v3, o3)
        return cls(m, tuple(chosen), frozenset(marks))


def _parse_int(text: str, offset: int) -> int:
    if not text or not text.isdigit():
        raise ParseError(f"expected an unsigned integer, got {text!r}", offset)
    return int(text)


def _parse_int_list(text: str, offset: int) -> list[int]:
    if text == "":
        return []
    out = []
    pos = offset
    for piece in text.split(","):
        out.append(_parse_int(piece, pos))
        pos += len(piece) + 1
    return out


class ConjugationKind(Enum):
    CONJUGATE = "conjugate"
    EXCEPTIONAL = "exceptional"
    OUTSIDE_DOMAIN = "outside-domain"


@dataclass(frozen=True)
class ConjugationOutcome:
    """Result of conjugate(). Exactly one of the payloads is meaningful.

    kind CONJUGATE carries the conjugate arrangement in result; kind
    EXCEPTIONAL carries which epsilon the input was (PLUS or MINUS) in
    epsilon; kind OUTSIDE_DOMAIN carries nothing.
    """

    kind: ConjugationKind
    result: Optional[SquareArrangement] = None
    epsilon: Optional[SignClass] = None


# ---------------------------------------------------------------------------
# Encoding-level transforms. The object API below wraps these; the
# verification sweeps call them directly to avoid per-item object churn.
# ---------------------------------------------------------------------------


def _expand_d(enc: str) -> tuple[str, list[int]]:
    """Cell colors of a family-D encoding plus 0-based domino left cells."""
    col: list[str] = []
    lefts: list[int] = []
    for ch in enc:
        if ch == "d":
            lefts.append(len(col))
            col.append("w")
            col.append("b")
        else:
            col.append(ch)
    return "".join(col), lefts


def _coloring_of(m: int, chosen: tuple[int, ...]) -> str:
    col = []
    cur = "b"
    chosen_set = set(chosen)
    for cell in range(1, m + 1):
        col.append(cur)
        if cell in chosen_set:
            cur = "w" if cur == "b" else "b"
    return "".join(col)


def _d_enc_of_board(m: int, chosen: tuple[int, ...], marks: frozenset[int]) -> str:
    col = _coloring_of(m, chosen)
    starts = set()
    for t in sorted(marks):
        q = chosen[2 * t - 1]  # chosen cell number 2t, 1-based
        if q >= m or col[q - 1] != "w" or col[q] != "b":
            raise InternalInvariantViolation(
                f"mark slot {t} does not sit on a white-to-black boundary"
            )
        starts.add(q)
    tiles = []
    cell = 1
    while cell <= m:
        if cell in starts:
            tiles.append("d")
            cell += 2
        else:
            tiles.append(col[cell - 1])
            cell += 1
    enc = "".join(tiles)
    if not _plus_d(enc):
        raise InternalInvariantViolation(
            f"marked board mapped outside the plus class: {enc}"
        )
    return enc


def _board_of_d_enc(enc: str) -> tuple[int, tuple[int, ...], frozenset[int]]:
    if not _plus_d(enc):
        raise NotPlusClass(f"{enc!r} is not a plus-class family-D arrangement")
    col, lefts = _expand_d(enc)
    m = len(col)
    chosen = [c for c in range(1, m) if col[c - 1] != col[c]]
    if len(chosen) % 2 == 1:
        # A chosen last cell flips off the board and stays invisible, so
        # parity of the visible changes decides whether cell m was chosen.
        chosen.append(m)
    marks = []
    for left in lefts:
        q = left + 1  # 1-based white half of the domino
        idx = chosen.index(q) + 1
        if idx % 2 != 0:
            raise InternalInvariantViolation(
                f"domino middle of {enc!r} at cell {q} is not a white-to-black change"
            )
        marks.append(idx // 2)
    i = len(chosen) // 2
    if any(not 1 <= t <= i - 1 for t in marks):
        raise InternalInvariantViolation(
            f"recovered mark outside 1..{i - 1} for {enc!r}"
        )
    return m, tuple(chosen), frozenset(marks)


def _transfer_d_to_b(enc: str) -> str:
    if not _plus_d(enc):
        raise NotPlusClass(f"{enc!r} is not a plus-class family-D arrangement")
    col, lefts = _expand_d(enc)
    left_set = set(lefts)
    right_set = {c + 1 for c in lefts}
    out = []
    for c in range(1, len(col)):  # cell 0 is dropped
        if c in left_set:
            continue
        if c in right_set:
            out.append("b")
        elif col[c] != col[c - 1]:
            out.append("t")  # first cell of its monochrome interval
        else:
            out.append("w")
    result = "".join(out)
    if not _plus_b(result):
        raise InternalInvariantViolation(
            f"transfer of {enc!r} left the plus class: {result!r}"
        )
    return result


def _transfer_b_to_d(enc: str) -> str:
    if not _plus_b(enc):
        raise NotPlusClass(f"{enc!r} is not a plus-class family-B arrangement")
    tiles = ["b"]  # new black square on the left end
    cur = "b"
    for ch in enc:
        if ch == "b":
            tiles.append("d")
            cur = "b"  # a domino ends on its black half
        elif ch == "t":
            cur = "w" if cur == "b" else "b"
            tiles.append(cur)  # the decorated cell takes the new color
        else:
            tiles.append(cur)
    result = "".join(tiles)
    if not _plus_d(result):
        raise InternalInvariantViolation(
            f"transfer of {enc!r} left the plus class: {result!r}"
        )
    return result


def _epsilon_enc(n: int, r: int, plus: bool) -> str:
    return "w" * (n - 1 - r) + "b" * r + ("t" if plus else "w")


def _conjugate_enc(enc: str) -> tuple[str, Optional[str]]:
    """Conjugate an encoding.

    Returns ("conjugate", new_encoding), ("exceptional", "+" or "-") or
    ("outside", None).
    """
    n = len(enc)
    k = _weight_b(enc)
    plus = _plus_b(enc)
    if not ((plus and k % 2 == 1) or (not plus and k % 2 == 0)):
        return "outside", None
    b0 = n - k - 1 if k >= 1 else n - 1  # 0-based cell B
    a0 = -1
    for i in range(b0 - 1, -1, -1):
        if enc[i] != "w":
            a0 = i
            break
    r = enc.count("b")
    if a0 < 0:
        expected = _epsilon_enc(n, r, plus)
        if enc != expected:
            raise InternalInvariantViolation(
                f"no square A in {enc!r} yet it is not {expected!r}"
            )
        return "exceptional", "+" if r % 2 == 1 else "-"
    cells = list(enc)
    if enc[a0] == "t":
        if k < 1:
            # In the minus class every cell right of the last black one is
            # white, so A can only be decorated when B is a black cell.
            raise InternalInvariantViolation(f"decorated A at weight 0 in {enc!r}")
        cells[a0] = "b"
        cells[b0] = "w"
    else:
        if b0 < 1 or enc[b0 - 1] != "w":
            raise InternalInvariantViolation(
                f"cell before B in {enc!r} should be white"
            )
        cells[a0] = "t"
        cells[b0 - 1] = "b"
    cells[-1] = "w" if cells[-1] == "t" else "t"
    out = "".join(cells)
    if out.count("b") != r:
        raise InternalInvariantViolation(f"conjugation changed r: {enc!r} -> {out!r}")
    if _weight_b(out) % 2 == k % 2:
        raise InternalInvariantViolation(
            f"conjugation kept the weight parity: {enc!r} -> {out!r}"
        )
    if _plus_b(out) == plus:
        raise InternalInvariantViolation(
            f"conjugation kept the sign class: {enc!r} -> {out!r}"
        )
    return "conjugate", out


# ---------------------------------------------------------------------------
# Object API
# ---------------------------------------------------------------------------


def coloring_of(board: MarkedColoredBoard) -> str:
    """Cell colors induced by the chosen cells, as a 'b'/'w' string.

    The first cell is black and the color flips between cells c and c+1
    exactly when c is chosen; a flip after the last cell falls off the
    board and is ignored.
    """
    return _coloring_of(board.m, board.chosen)


def board_to_domino(board: MarkedColoredBoard) -> DominoArrangement:
    """Lay a domino across each marked boundary; other cells keep their color.

    The result is always a plus-class family-D arrangement with r equal
    to the number of marks.
    """
    return decode_domino(_d_enc_of_board(board.m, board.chosen, board.marks))


def domino_to_board(arr: DominoArrangement) -> MarkedColoredBoard:
    """Inverse of board_to_domino; requires a plus-class arrangement.

    Expanding dominoes into white and black cells recovers the coloring;
    the chosen cells are the visible color changes, completed with the
    last cell when their count is odd, and each domino middle recovers
    its mark slot.
    """
    m, chosen, marks = _board_of_d_enc(encode(arr))
    return MarkedColoredBoard(m, chosen, marks)


def domino_to_square(arr: DominoArrangement) -> SquareArrangement:
    """Interval transfer from plus-class family D to plus-class family B.

    The image has m - 1 - r cells and r black cells, one per domino.
    """
    return decode_square(_transfer_d_to_b(encode(arr)))


def square_to_domino(arr: SquareArrangement) -> DominoArrangement:
    """Inverse interval transfer; requires a plus-class arrangement.

    Each black cell becomes a domino, a black square is prepended, and
    colors are rebuilt left to right, flipping at each decorated cell.
    The image has n + 1 + r cells.
    """
    return decode_domino(_transfer_b_to_d(encode(arr)))


def conjugate(arr: SquareArrangement) -> ConjugationOutcome:
    """Conjugation on odd-weight plus and even-weight minus arrangements.

    Locates B, the first cell of the black run defining the weight (the
    last cell when the weight is 0), and A, the nearest non-white cell
    left of B. A decorated A turns black while B turns white; a black A
    turns decorated while the white cell before B turns black. The last
    cell then swaps white and decorated. The outcome has the same n and
    r, flipped weight parity and flipped sign class.

    Inputs outside the stated domain yield OUTSIDE_DOMAIN; the single
    arrangement per (n, r) with no square A yields EXCEPTIONAL.
    """
    kind, payload = _conjugate_enc(encode(arr))
    if kind == "outside":
        return ConjugationOutcome(ConjugationKind.OUTSIDE_DOMAIN)
    if kind == "exceptional":
        sign = SignClass.PLUS if payload == "+" else SignClass.MINUS
        return ConjugationOutcome(ConjugationKind.EXCEPTIONAL, epsilon=sign)
    return ConjugationOutcome(ConjugationKind.CONJUGATE, result=decode_square(payload))


def epsilon_plus(n: int, r: int) -> SquareArrangement:
    """The unique conjugation-exceptional arrangement for odd r.

    White cells, then a black run of length r ending at the second-to-last
    cell, then a decorated last cell.
    """
    if not 0 <= r <= n - 1:
        raise RangeError(f"need 0 <= r <= n-1, got n={n} r={r}")
    if r % 2 != 1:
        raise ParityMismatch(f"epsilon_plus needs odd r, got {r}")
    return decode_square(_epsilon_enc(n, r, plus=True))


def epsilon_minus(n: int, r: int) -> SquareArrangement:
    """The unique conjugation-exceptional arrangement for even r.

    White cells, then a black run of length r ending at the second-to-last
    cell, then a white last cell; all white when r = 0.
    """
    if not 0 <= r <= n - 1:
        raise RangeError(f"need 0 <= r <= n-1, got n={n} r={r}")
    if r % 2 != 0:
        raise ParityMismatch(f"epsilon_minus needs even r, got {r}")
    return decode_square(_epsilon_enc(n, r, plus=False))


def enumerate_marked_boards(m: int, r: int) -> Iterator[MarkedColoredBoard]:
    """All marked colored boards on m cells with r marks.

    Their number equals the plus-class family-D count on m cells with r
    dominoes, stratum by stratum in the number of chosen cells.
    """
    if m < 1 or r < 0:
        raise RangeError(f"need m >= 1 and r >= 0, got m={m} r={r}")
    for i in range(1, m // 2 + 1):
        for chosen in combinations(range(1, m + 1), 2 * i):
            for marks in combinations(range(1, i), r):
                yield MarkedColoredBoard(m, chosen, frozenset(marks))


__all__ = [
    "MarkedColoredBoard",
    "ConjugationKind",
    "ConjugationOutcome",
    "coloring_of",
    "board_to_domino",
    "domino_to_board",
    "domino_to_square",
    "square_to_domino",
    "conjugate",
    "epsilon_plus",
    "epsilon_minus",
    "enumerate_marked_boards",
]
