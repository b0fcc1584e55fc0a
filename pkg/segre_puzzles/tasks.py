"""Tasks for celery."""
import logging
from typing import List, Sequence

from segre_puzzles import config, suites
from segre_puzzles.celery import app
from segre_puzzles.reports import EquationResult, SuiteReport


@app.task
def run_suite_item(name: str, index: int, n: int, shapes: List[str]) -> List[dict]:
    """Celery task running one item of a verification suite.

    Args:
        name (str): suite name.
        index (int): position of the item in suites.suite_items(name).
        n (int): largest size of the shape-wide suites.
        shapes (list): shapes of the gkm suite.

    Returns:
        list: EquationResult dicts in item order.
    """
    _, item = suites.suite_items(name, n, shapes)[index]
    return [result.as_dict() for result in item()]


def run_suite(
    name: str,
    workers: int = None,
    n: int = config.SUITE_MAX_N,
    shapes: Sequence[str] = config.DEFAULT_GKM_SHAPES,
) -> SuiteReport:
    """Run a suite in-process, or fan its items out to Celery when workers > 1.

    Args:
        name (str): suite name or 'all'.
        workers (int): fan-out width, defaults to SEGRE_WORKERS.
        n (int): largest size of the shape-wide suites.
        shapes (Sequence): shapes of the gkm suite.

    Returns:
        SuiteReport: results in item order, whatever the width.
    """
    workers = config.WORKERS if workers is None else workers
    items = suites.suite_items(name, n, shapes)
    report = SuiteReport(name)
    if workers > 1:
        pending = [run_suite_item.delay(name, index, n, list(shapes)) for index in range(len(items))]
        for outcome in pending:
            report.extend(EquationResult(**payload) for payload in outcome.get())
    else:
        for _, item in items:
            report.extend(item())
    logging.info(config.MESSAGE_SUITE.format(
        name=name, passed=len(report.results) - len(report.failures), total=len(report.results),
    ))
    return report
