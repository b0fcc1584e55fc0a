"""Pass/fail records for verification suites."""
import logging
from dataclasses import dataclass, field
from typing import List

from segre_puzzles import config
from segre_puzzles.symcore import format_rational


@dataclass
class EquationResult:
    """Outcome of one checked identity.

    Attributes:
        name (str): identity name, stable across runs.
        passed (bool): whether it held.
        detail (str): first differing entry or recorded value.
        asserted (bool): recorded-only results never fail a suite.
    """

    name: str
    passed: bool
    detail: str = ''
    asserted: bool = True

    def as_dict(self) -> dict:
        return {'name': self.name, 'passed': self.passed, 'detail': self.detail, 'asserted': self.asserted}


@dataclass
class SuiteReport:
    """All results of one suite, in a deterministic order."""

    name: str
    results: List[EquationResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results if result.asserted)

    @property
    def failures(self) -> List[EquationResult]:
        return [result for result in self.results if result.asserted and not result.passed]

    def extend(self, results) -> None:
        for result in results:
            self.results.append(result)

    def as_dict(self) -> dict:
        return {
            'suite': self.name,
            'passed': self.passed,
            'total': len([result for result in self.results if result.asserted]),
            'results': [result.as_dict() for result in self.results],
        }


def check(name: str, passed: bool, detail: str = '', asserted: bool = True) -> EquationResult:
    """Build a result and log it."""
    result = EquationResult(name=name, passed=bool(passed), detail=detail, asserted=asserted)
    status = config.MESSAGE_PASS if result.passed else config.MESSAGE_FAIL
    if not asserted:
        logging.info(config.MESSAGE_RECORDED.format(name=name, value=detail or status))
    elif result.passed:
        logging.info(config.MESSAGE_EQUATION.format(name, status, detail))
    else:
        logging.warning(config.MESSAGE_EQUATION.format(name, status, detail))
    return result


def matrix_check(name: str, left, right, asserted: bool = True) -> EquationResult:
    """Compare two SymbolicMatrix values and report the first differing entry."""
    difference = left.first_difference(right)
    if difference is None:
        return check(name, True, asserted=asserted)
    i, j, mine, theirs = difference
    detail = '({0},{1}): {2} != {3}'.format(
        i, j, format_rational(mine, left.table), format_rational(theirs, right.table),
    )
    return check(name, False, detail, asserted=asserted)
