"""Verification suites as ordered lists of independent items."""
from functools import partial
from typing import Callable, List, Sequence, Tuple

from segre_puzzles import classes, config, gkm, lattice, puzzles, qgroup, rmatrices
from segre_puzzles.reports import EquationResult, check
from segre_puzzles.symcore import SegreError, rf_equals
from segre_puzzles.weyl import LARGEST, ThetaShape, all_strings, grassmannian, parse_shape

Item = Tuple[str, Callable[[], List[EquationResult]]]


def _single(function: Callable[[], EquationResult]) -> Callable[[], List[EquationResult]]:
    return lambda: [function()]


def operator_shapes(n: int) -> List[ThetaShape]:
    shapes = [grassmannian(k, size) for size in range(2, n + 1) for k in range(1, size)]
    shapes.append(parse_shape('1+1+1'))
    return shapes


def operator_results(shape: ThetaShape) -> List[EquationResult]:
    """Operator relations, exchange relations, diagonal entries and path independence for one shape."""
    results = classes.operator_suite(shape)
    basis = classes.build_basis(shape)
    table = next(iter(basis.values())).table
    for string in all_strings(shape):
        results.append(check(
            '{0} diagonal {1}'.format(shape, string),
            rf_equals(basis[string][string], classes.diagonal_entry(string, table)),
        ))
        for point in all_strings(shape):
            for i in range(1, shape.n):
                results.append(check(
                    '{0} exchange {1}|{2} r{3}'.format(shape, string, point, i),
                    classes.exchange_relation_holds(basis, string, point, i),
                ))
    other = classes.build_basis(shape, LARGEST)
    results.append(check(
        '{0} path independence'.format(shape),
        all(other[string].equals(cls) for string, cls in basis.items()),
    ))
    return results


def _rmatrix_items(name: str) -> List[Item]:
    if name == config.SUITE_YBE:
        return [
            ('ybe {0}'.format(index + 1), _single(partial(rmatrices.ybe_equation, index)))
            for index in range(len(rmatrices.YBE_TRIPLES))
        ]
    if name == config.SUITE_BOOTSTRAP:
        return [
            (rmatrices.BOOTSTRAP[index][0], _single(partial(rmatrices.bootstrap_equation, index)))
            for index in range(len(rmatrices.BOOTSTRAP))
        ]
    if name == config.SUITE_UNITARITY:
        return [
            ('unitarity {0}'.format(index + 1), _single(partial(rmatrices.unitarity_equation, index)))
            for index in range(len(rmatrices.UNITARITY))
        ]
    if name == config.SUITE_EQUAL:
        return [
            ('equal {0}'.format(pair), _single(partial(rmatrices.equal_equation, index)))
            for index, pair in enumerate(rmatrices.EQUAL)
        ]
    if name == config.SUITE_FACTORIZATION:
        return [
            ('factorization', rmatrices.verify_factorization),
            ('determinants', rmatrices.determinant_report),
        ]
    return [
        ('single numbers', rmatrices.verify_single_number_props),
        ('rhat block', rmatrices.verify_rhat_block),
    ]


def suite_items(
    name: str,
    n: int = config.SUITE_MAX_N,
    shapes: Sequence[str] = config.DEFAULT_GKM_SHAPES,
) -> List[Item]:
    """The items of a suite in their fixed order.

    Args:
        name (str): one of config.SUITES, or 'all'.
        n (int): largest size of the shape-wide suites.
        shapes (Sequence): shapes of the gkm suite.

    Raises:
        SegreError: unknown suite.

    Returns:
        list: (label, zero-argument callable returning EquationResults).
    """
    if name == config.SUITE_ALL:
        return [item for suite in config.SUITES for item in suite_items(suite, n, shapes)]
    if name == config.SUITE_LATTICE:
        items = [('rhat', lattice.verify_single_suite)]
        items.extend(
            ('restrictions n={0}'.format(size), partial(lattice.verify_restriction_suite, size))
            for size in range(2, n + 1)
        )
        return items
    if name == config.SUITE_OPERATORS:
        return [(str(shape), partial(operator_results, shape)) for shape in operator_shapes(n)]
    if name == config.SUITE_ORACLE:
        return [('oracle n={0}'.format(size), partial(puzzles.oracle_suite, size)) for size in range(1, n + 1)]
    if name == config.SUITE_POSITIVITY:
        return [('positivity n={0}'.format(n), partial(puzzles.positivity_suite, n))]
    if name in {
        config.SUITE_YBE, config.SUITE_BOOTSTRAP, config.SUITE_UNITARITY,
        config.SUITE_EQUAL, config.SUITE_FACTORIZATION, config.SUITE_SINGLE_NUMBER,
    }:
        return _rmatrix_items(name)
    if name == config.SUITE_QGROUP:
        return [('qgroup', qgroup.qgroup_suite)]
    if name == config.SUITE_INTERTWINERS:
        return [('intertwiners', qgroup.check_intertwiners)]
    if name == config.SUITE_GKM:
        items = [('hand check', gkm.hand_check_results)]
        items.extend((text, partial(gkm.shape_results, text)) for text in shapes)
        items.extend(
            ('solve localization {0}'.format(text), partial(gkm.constant_localization_results, text))
            for text in shapes
        )
        items.extend(
            ('piece localization n={0}'.format(size), partial(gkm.piece_localization_results, size))
            for size in range(2, n + 1)
        )
        items.extend(
            ('puzzle localization n={0}'.format(size), partial(gkm.puzzle_localization_results, size))
            for size in range(1, n + 1)
        )
        return items
    raise SegreError(config.ERROR_SUITE.format(name=name))
