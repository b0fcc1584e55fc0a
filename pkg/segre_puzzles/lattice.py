"""The two-label solvable lattice model and its partition functions."""
import logging
from typing import Dict, List, Sequence, Tuple

from segre_puzzles import config
from segre_puzzles.classes import build_basis
from segre_puzzles.reports import EquationResult, check, matrix_check
from segre_puzzles.symcore import (
    RationalFunction,
    SymbolicMatrix,
    VariableTable,
    VerificationError,
    format_rational,
    kpicture,
    q_poly,
    rf_equals,
    swap_symbols,
)
from segre_puzzles.weyl import ThetaShape, all_strings, grassmannian, string_to_permutation

## rows are outgoing (SW, SE), columns incoming (NW, NE)
RHAT_ORDER = ((1, 1), (1, 0), (0, 1), (0, 0))

Pair = Tuple[int, int]


def rhat_entries(spectral: RationalFunction, table: VariableTable) -> Dict[Tuple[Pair, Pair], RationalFunction]:
    """Nonzero entries of R-hat keyed by ((SW, SE), (NW, NE))."""
    beta = table.gen(config.SYMBOL_BETA)
    q = table.gen(config.SYMBOL_Q)
    big_q = q_poly(table)
    denominator = big_q - q ** 2 * spectral
    return {
        ((1, 1), (1, 1)): table.one,
        ((1, 0), (1, 0)): beta * (1 - q ** 2) * spectral / denominator,
        ((1, 0), (0, 1)): q * big_q * (1 - spectral) / denominator,
        ((0, 1), (1, 0)): q * (1 - spectral) / denominator,
        ((0, 1), (0, 1)): beta * (1 - q ** 2) / denominator,
        ((0, 0), (0, 0)): table.one,
    }


def rhat(spectral: RationalFunction, table: VariableTable) -> SymbolicMatrix:
    """The 4x4 R-hat matrix at the given spectral ratio."""
    position = {pair: index for index, pair in enumerate(RHAT_ORDER)}
    return SymbolicMatrix.from_entries(table, 4, 4, {
        (position[out], position[inc]): value
        for (out, inc), value in rhat_entries(spectral, table).items()
        if value
    })


def omega(shape: ThetaShape) -> str:
    """The string 0^{n-k} 1^k entering on the left."""
    return '0' * (shape.n - shape.k) + '1' * shape.k


def _require_grassmannian(shape: ThetaShape) -> None:
    if not shape.is_grassmannian:
        raise VerificationError(config.ERROR_GRASSMANNIAN.format(shape=shape))


def _z(table: VariableTable, j: int) -> RationalFunction:
    return table.gen('{0}{1}'.format(config.PREFIX_Z, j))


def _x(table: VariableTable, i: int) -> RationalFunction:
    return table.gen('{0}{1}'.format(config.PREFIX_X, i))


def contract_grid(string: str, row_values: Sequence[RationalFunction], table: VariableTable) -> RationalFunction:
    """Sum over states of the n x n grid with rows carrying row_values[i].

    Row i enters on the right with 1 and leaves on the left with omega_i;
    column j enters on top with string_j and leaves at the bottom with 1.

    Args:
        string (str): top boundary lambda.
        row_values (Sequence): spectral value of each row (x_i or a specialization).
        table (VariableTable): table of the weights.

    Returns:
        RationalFunction: the partition function.
    """
    n = len(string)
    k = string.count('1')
    left = [0] * (n - k) + [1] * k
    weights = {
        (i, j): rhat_entries(row_values[i] / _z(table, j + 1), table)
        for i in range(n)
        for j in range(n)
    }
    states: Dict[Tuple[int, ...], RationalFunction] = {tuple(int(letter) for letter in string): table.one}
    for i in range(n):
        partial = {(vertical, 1): weight for vertical, weight in states.items()}
        for j in reversed(range(n)):
            following: Dict[Tuple[Tuple[int, ...], int], RationalFunction] = {}
            for (vertical, horizontal), weight in sorted(partial.items(), key=lambda item: item[0]):
                incoming = (vertical[j], horizontal)
                for outgoing in RHAT_ORDER:
                    entry = weights[i, j].get((outgoing, incoming))
                    if not entry:
                        continue
                    southwest, southeast = outgoing
                    key = (vertical[:j] + (southeast,) + vertical[j + 1:], southwest)
                    following[key] = following.get(key, table.zero) + weight * entry
            partial = following
        states = {}
        for (vertical, horizontal), weight in sorted(partial.items(), key=lambda item: item[0]):
            if horizontal == left[i] and weight:
                states[vertical] = states.get(vertical, table.zero) + weight
    return states.get((1,) * n, table.zero)


def partition_function(string: str, shape: ThetaShape) -> RationalFunction:
    """S-bar_lambda in x_1..x_n, z_1..z_n, b, q."""
    _require_grassmannian(shape)
    table = kpicture(shape.n)
    return contract_grid(string, [_x(table, i + 1) for i in range(shape.n)], table)


def restrict_by_substitution(string: str, point: str) -> RationalFunction:
    """x_i = z_{pi(i)} substituted into the vertex weights before contracting."""
    table = kpicture(len(string))
    rows = [_z(table, position) for position in string_to_permutation(point)]
    return contract_grid(string, rows, table)


def restrict_by_wiring(string: str, point: str) -> RationalFunction:
    """Contract the reduced wiring of point: strands sorted by crossings, lambda on top, omega below."""
    n = len(string)
    table = kpicture(n)
    target = string_to_permutation(point)
    rank = {strand: index for index, strand in enumerate(target)}
    finals = tuple(int(letter) for letter in '0' * string.count('0') + '1' * string.count('1'))
    strands = list(range(1, n + 1))
    states: Dict[Tuple[int, ...], RationalFunction] = {tuple(int(letter) for letter in string): table.one}
    swapped = True
    while swapped:
        swapped = False
        for position in range(n - 1):
            first, second = strands[position], strands[position + 1]
            if rank[first] < rank[second]:
                continue
            entries = rhat_entries(_z(table, second) / _z(table, first), table)
            following: Dict[Tuple[int, ...], RationalFunction] = {}
            for labels, weight in sorted(states.items()):
                incoming = (labels[position], labels[position + 1])
                for outgoing in RHAT_ORDER:
                    entry = entries.get((outgoing, incoming))
                    if entry:
                        key = labels[:position] + outgoing + labels[position + 2:]
                        following[key] = following.get(key, table.zero) + weight * entry
            states = following
            strands[position], strands[position + 1] = second, first
            swapped = True
    return states.get(finals, table.zero)


def restrict(string: str, point: str) -> RationalFunction:
    """S-bar_lambda at the fixed point, computed two ways.

    Args:
        string (str): lambda.
        point (str): sigma.

    Raises:
        VerificationError: the two contractions disagree.

    Returns:
        RationalFunction: the restriction.
    """
    by_substitution = restrict_by_substitution(string, point)
    by_wiring = restrict_by_wiring(string, point)
    if not rf_equals(by_substitution, by_wiring):
        table = kpicture(len(string))
        raise VerificationError(config.ERROR_LATTICE_MISMATCH.format(
            string=string, point=point,
            left=format_rational(by_substitution, table), right=format_rational(by_wiring, table),
        ))
    return by_wiring


def _ratio(table: VariableTable, top: int, bottom: int) -> RationalFunction:
    return _z(table, top) / _z(table, bottom)


def verify_single_suite() -> List[EquationResult]:
    """Yang-Baxter, unitarity, equal parameters and 1-label conservation of R-hat."""
    table = kpicture(3)
    identity = SymbolicMatrix.identity(table, 2)

    def left_slot(matrix):
        return matrix.kron(identity)

    def right_slot(matrix):
        return identity.kron(matrix)

    lhs = (
        left_slot(rhat(_ratio(table, 2, 1), table))
        @ right_slot(rhat(_ratio(table, 3, 1), table))
        @ left_slot(rhat(_ratio(table, 3, 2), table))
    )
    rhs = (
        right_slot(rhat(_ratio(table, 3, 2), table))
        @ left_slot(rhat(_ratio(table, 3, 1), table))
        @ right_slot(rhat(_ratio(table, 2, 1), table))
    )
    spectral = _ratio(table, 2, 1)
    results = [
        matrix_check('rhat yang-baxter', lhs, rhs),
        matrix_check(
            'rhat unitarity',
            rhat(spectral, table) @ rhat(1 / spectral, table),
            SymbolicMatrix.identity(table, 4),
        ),
        matrix_check('rhat equal parameters', rhat(table.one, table), SymbolicMatrix.identity(table, 4)),
    ]
    conserved = all(
        sum(outgoing) == sum(incoming)
        for outgoing, incoming in rhat_entries(spectral, table)
    )
    results.append(check('rhat conserves 1-labels', conserved))
    return results


def verify_restriction_suite(n: int, symmetry: bool = True) -> List[EquationResult]:
    """Restrictions against the classes module, plus x-variable symmetry of S-bar."""
    results = []
    table = kpicture(n)
    for k in range(n + 1):
        shape = grassmannian(k, n)
        basis = build_basis(shape)
        for string in all_strings(shape):
            for point in all_strings(shape):
                try:
                    value = restrict(string, point)
                except VerificationError as exc:
                    results.append(check('restrict {0}|{1}'.format(string, point), False, str(exc)))
                    continue
                results.append(check(
                    'restrict {0}|{1} matches class'.format(string, point),
                    rf_equals(value, basis[string][point]),
                ))
            if symmetry:
                results.extend(_symmetry_results(string, shape, table))
    logging.info(config.MESSAGE_SUITE.format(
        name='lattice n={0}'.format(n), passed=sum(result.passed for result in results), total=len(results),
    ))
    return results


def _symmetry_results(string: str, shape: ThetaShape, table: VariableTable) -> List[EquationResult]:
    results = []
    function = partition_function(string, shape)
    left = omega(shape)
    full = True
    for i in range(1, shape.n):
        first = '{0}{1}'.format(config.PREFIX_X, i)
        second = '{0}{1}'.format(config.PREFIX_X, i + 1)
        invariant = rf_equals(function, swap_symbols(function, table, first, second))
        if left[i - 1] == left[i]:
            results.append(check('{0} symmetric in {1},{2}'.format(string, first, second), invariant))
        full = full and invariant
    results.append(check('{0} symmetric in all x'.format(string), full, str(full), asserted=False))
    return results
