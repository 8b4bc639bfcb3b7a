"""Eventually periodic sequences over {0, 1, 2} that parametrise the groups.

A sequence is written ``preperiod:period`` in text form, so ``:012`` is
(012)(012)... and ``2:01`` is 2(01)(01)...  Each of the generator letters
b, c, d owns one symbol: the letter is inactive on the left subtree at a
level exactly when the sequence carries its symbol there.
"""

from __future__ import annotations

from dataclasses import dataclass

ALPHABET = "012"

LETTER_SYMBOL = {"b": "2", "c": "1", "d": "0"}
SYMBOL_LETTER = {symbol: letter for letter, symbol in LETTER_SYMBOL.items()}


class OmegaParseError(ValueError):
    """Raised for malformed sequence descriptions."""


def _primitive_root(period: str) -> str:
    for d in range(1, len(period)):
        if len(period) % d == 0 and period == period[:d] * (len(period) // d):
            return period[:d]
    return period


@dataclass(frozen=True)
class OmegaSequence:
    """An eventually periodic sequence ``preperiod + period * infinity``.

    Instances normalise themselves on construction: the period is made
    primitive and any preperiod tail that already matches the period is
    absorbed into a rotation, so two descriptions of the same sequence
    compare equal (``0:120`` becomes ``:012``).
    """

    preperiod: str
    period: str

    def __post_init__(self) -> None:
        if not self.period:
            raise OmegaParseError("period must be non-empty")
        for ch in self.preperiod + self.period:
            if ch not in ALPHABET:
                raise OmegaParseError(f"invalid symbol {ch!r}, expected one of 0, 1, 2")
        period = _primitive_root(self.period)
        preperiod = self.preperiod
        while preperiod and preperiod[-1] == period[-1]:
            preperiod = preperiod[:-1]
            period = period[-1] + period[:-1]
        object.__setattr__(self, "preperiod", preperiod)
        object.__setattr__(self, "period", period)

    @classmethod
    def parse(cls, text: str) -> "OmegaSequence":
        if ":" not in text:
            raise OmegaParseError(f"expected 'preperiod:period', got {text!r}")
        preperiod, _, period = text.partition(":")
        return cls(preperiod, period)

    def __str__(self) -> str:
        return f"{self.preperiod}:{self.period}"

    def at(self, i: int) -> str:
        """Symbol at 1-based position i."""
        if i < 1:
            raise IndexError("sequence positions are 1-based")
        if i <= len(self.preperiod):
            return self.preperiod[i - 1]
        return self.period[(i - len(self.preperiod) - 1) % len(self.period)]

    def shift(self) -> "OmegaSequence":
        """The sequence with its first symbol dropped."""
        if self.preperiod:
            return OmegaSequence(self.preperiod[1:], self.period)
        return OmegaSequence("", self.period[1:] + self.period[0])

    def is_repetition_free(self) -> bool:
        """True when no symbol appears twice in a row."""
        horizon = len(self.preperiod) + 2 * len(self.period)
        return all(self.at(i) != self.at(i + 1) for i in range(1, horizon + 1))


def passive_letter(omega: OmegaSequence, letter: str) -> str:
    """First-level action of b, c or d on the left subtree: "a" or "1".

    The letter acts as the identity there exactly when the first symbol
    of the sequence is the letter's own symbol.
    """
    if letter not in LETTER_SYMBOL:
        raise ValueError(f"expected one of b, c, d, got {letter!r}")
    return "1" if omega.at(1) == LETTER_SYMBOL[letter] else "a"


def fixing_letter(omega: OmegaSequence, n: int) -> str:
    """The unique letter among b, c, d that fixes the ray 1^n 0^inf."""
    return SYMBOL_LETTER[omega.at(n)]
