"""
Desired performance orders over the solver portfolio
"""
from typing import Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from shared.config.constants import PORTFOLIO, SolverId
from shared.utils.errors import ConfigurationError


def _parse_solver(token: str, portfolio: Sequence[SolverId]) -> int:
    name = token.strip().upper()
    for position, solver in enumerate(portfolio, start=1):
        if solver.value == name:
            return position
    raise ConfigurationError(f"Unknown solver '{token.strip()}' in ranking string")


class RankingSpec(BaseModel):
    """Permutation pi of 1-based solver indices; p[pi(1)] >= ... >= p[pi(N)] is desired"""
    model_config = ConfigDict(frozen=True)

    pi: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_bijection(self) -> "RankingSpec":
        if sorted(self.pi) != list(range(1, len(self.pi) + 1)):
            raise ValueError(f"Ranking {self.pi} is not a permutation of 1..{len(self.pi)}")
        return self

    @property
    def size(self) -> int:
        return len(self.pi)

    @property
    def indices(self) -> Tuple[int, ...]:
        """0-based solver positions in desired order"""
        return tuple(i - 1 for i in self.pi)

    @classmethod
    def parse(cls, text: str, portfolio: Sequence[SolverId] = PORTFOLIO) -> "RankingSpec":
        """Parse a string such as 'C2>S4>S2'"""
        tokens = text.split(">")
        if len(tokens) != len(portfolio):
            raise ConfigurationError(
                f"Ranking '{text}' must name all {len(portfolio)} solvers"
            )
        pi = tuple(_parse_solver(token, portfolio) for token in tokens)
        if len(set(pi)) != len(pi):
            raise ConfigurationError(f"Ranking '{text}' repeats a solver")
        return cls(pi=pi)

    def format(self, portfolio: Sequence[SolverId] = PORTFOLIO) -> str:
        return ">".join(portfolio[i - 1].value for i in self.pi)

    def __str__(self) -> str:
        return self.format()


class PairSpec(BaseModel):
    """Ordered pair for the pairwise approach: instance easy for one solver, hard for another"""
    model_config = ConfigDict(frozen=True)

    easy: int
    hard: int

    @model_validator(mode="after")
    def _check_distinct(self) -> "PairSpec":
        if self.easy == self.hard:
            raise ValueError("Pairwise fitness needs two distinct solvers")
        if self.easy < 1 or self.hard < 1:
            raise ValueError("Solver indices are 1-based")
        return self

    @classmethod
    def parse(cls, text: str, portfolio: Sequence[SolverId] = PORTFOLIO) -> "PairSpec":
        """Parse a string such as 'C2>S2' (C2 easy, S2 hard)"""
        tokens = text.split(">")
        if len(tokens) != 2:
            raise ConfigurationError(f"Pair '{text}' must name exactly two solvers")
        easy, hard = (_parse_solver(token, portfolio) for token in tokens)
        if easy == hard:
            raise ConfigurationError(f"Pair '{text}' names the same solver twice")
        return cls(easy=easy, hard=hard)

    def format(self, portfolio: Sequence[SolverId] = PORTFOLIO) -> str:
        return f"{portfolio[self.easy - 1].value}>{portfolio[self.hard - 1].value}"

    def __str__(self) -> str:
        return self.format()
