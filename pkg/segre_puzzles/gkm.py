"""Connective K-theory: formal group law, Demazure-Lusztig operators, localization and GKM checks."""
import logging
import random
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from segre_puzzles import config
from segre_puzzles.classes import (
    FixedPointClass,
    build_basis,
    chern_basis,
    descend,
    pointwise_operator,
    structure_constants,
    supported_at_top,
    unhomogenize,
    unhomogenized,
)
from segre_puzzles.puzzles import RHOMBI, enumerate_puzzles, placed, puzzle_constant
from segre_puzzles.reports import EquationResult, check
from segre_puzzles.symcore import (
    RationalFunction,
    VariableTable,
    connective,
    divides,
    format_rational,
    is_zero,
    kpicture,
    random_laurent,
    rf_equals,
    substitute,
)
from segre_puzzles.weyl import ThetaShape, all_strings, grassmannian, length, parse_shape, positive_roots


def _t(table: VariableTable, i: int) -> RationalFunction:
    return table.gen('{0}{1}'.format(config.PREFIX_T, i))


def x_of_weight(table: VariableTable, j: int, k: int) -> RationalFunction:
    """x_{y_j - y_k} = (t_j - t_k) / (1 - b t_k)."""
    beta = table.gen(config.SYMBOL_BETA)
    return (_t(table, j) - _t(table, k)) / (1 - beta * _t(table, k))


def formal_add(left: RationalFunction, right: RationalFunction, table: VariableTable) -> RationalFunction:
    """F(u, v) = u + v - b u v."""
    return left + right - table.gen(config.SYMBOL_BETA) * left * right


def formal_inverse(value: RationalFunction, table: VariableTable) -> RationalFunction:
    return -value / (1 - table.gen(config.SYMBOL_BETA) * value)


def x_of_coefficients(table: VariableTable, coefficients: Sequence[int]) -> RationalFunction:
    """x_lambda for lambda = sum c_i y_i, iterating the formal sum from x_{y_i} = t_i.

    Args:
        table (VariableTable): a connective table with at least len(coefficients) t variables.
        coefficients (Sequence): integer c_1, c_2, ...

    Returns:
        RationalFunction: x_lambda, zero for the zero weight.
    """
    value = table.zero
    for i, count in enumerate(coefficients, start=1):
        step = _t(table, i) if count >= 0 else formal_inverse(_t(table, i), table)
        for _ in range(abs(count)):
            value = formal_add(value, step, table)
    return value


def kappa(table: VariableTable, i: int) -> RationalFunction:
    """kappa_i = 1/x_{alpha_i} + 1/x_{-alpha_i}."""
    return 1 / x_of_weight(table, i, i + 1) + 1 / x_of_weight(table, i + 1, i)


def kappa_pair(table: VariableTable, i: int) -> RationalFunction:
    """kappa_{i,i+1} built from alpha_i, alpha_{i+1} and their sum."""
    total = x_of_weight(table, i, i + 2)
    second = x_of_weight(table, i + 1, i + 2)
    return (
        1 / (total * second)
        - 1 / (total * x_of_weight(table, i + 1, i))
        - 1 / (x_of_weight(table, i, i + 1) * second)
    )


@lru_cache(maxsize=None)
def _coefficients(n: int, i: int) -> Tuple[RationalFunction, RationalFunction]:
    table = connective(n)
    xq = table.gen(config.SYMBOL_XQ)
    local = (1 - xq ** 2) / x_of_weight(table, i + 1, i)
    swapped = (1 - xq ** 2) / x_of_weight(table, i, i + 1) + xq ** 2
    return local, swapped


def apply_connective_partial(i: int, cls: FixedPointClass) -> FixedPointClass:
    """The connective Demazure-Lusztig operator, unfolded pointwise."""
    local, swapped = _coefficients(cls.shape.n, i)
    return pointwise_operator(i, cls, local, swapped, config.PREFIX_T)


@lru_cache(maxsize=None)
def connective_basis(shape: ThetaShape) -> Dict[str, FixedPointClass]:
    """S_lambda: prod x_{y_j - y_i} / (1 - xq^2 (1 - x_{y_j - y_i})) at w0, then S_{r_i l} = d_i S_l."""
    table = connective(shape.n)
    xq = table.gen(config.SYMBOL_XQ)
    top = table.one
    for i, j in positive_roots(shape):
        weight = x_of_weight(table, j, i)
        top *= weight / (1 - xq ** 2 * (1 - weight))
    return descend(supported_at_top(shape, table, top), apply_connective_partial)


@lru_cache(maxsize=None)
def connective_chern(shape: ThetaShape) -> Dict[str, FixedPointClass]:
    """St_lambda: prod x_{-alpha} at w0, then St_{r_i l} = d_i St_l."""
    table = connective(shape.n)
    top = table.one
    for i, j in positive_roots(shape):
        top *= x_of_weight(table, j, i)
    return descend(supported_at_top(shape, table, top), apply_connective_partial)


def localization_bindings(n: int) -> Dict[str, RationalFunction]:
    """t_i -> (1 - z_i)/b and xq -> q, as values over kpicture(n)."""
    target = kpicture(n)
    beta = target.gen(config.SYMBOL_BETA)
    bindings = {config.SYMBOL_XQ: target.gen(config.SYMBOL_Q)}
    for i in range(1, n + 1):
        bindings['{0}{1}'.format(config.PREFIX_T, i)] = (1 - target.gen('{0}{1}'.format(config.PREFIX_Z, i))) / beta
    return bindings


def localize_value(value: RationalFunction, n: int) -> RationalFunction:
    target = kpicture(n)
    if not value:
        return target.zero
    return substitute(value, localization_bindings(n), connective(n), target)


def localize(cls: FixedPointClass) -> FixedPointClass:
    """A connective class read in the K-picture."""
    n = cls.shape.n
    return FixedPointClass(cls.shape, kpicture(n), {
        string: localize_value(value, n) for string, value in cls.restrictions.items()
    })


def _at_beta_zero(value: RationalFunction, table: VariableTable) -> RationalFunction:
    return substitute(value, {config.SYMBOL_BETA: 0}, table) if value else value


@lru_cache(maxsize=None)
def ssm_basis(shape: ThetaShape) -> Dict[str, FixedPointClass]:
    """Cohomological classes: prod alpha/(alpha + hbar-bar) at w0, then the additive operator."""
    table = connective(shape.n)
    hbar = table.gen(config.SYMBOL_XQ)
    shifted = (hbar ** 2 - 1) / hbar ** 2
    top = table.one
    for i, j in positive_roots(shape):
        root = _t(table, i) - _t(table, j)
        top *= root / (root + shifted)

    def step(index, cls):
        root = _t(table, index) - _t(table, index + 1)
        return pointwise_operator(index, cls, shifted / root, (root - shifted) / root, config.PREFIX_T)

    return descend(supported_at_top(shape, table, top), step)


def gkm_failures(cls: FixedPointClass) -> List[Tuple[str, int, int]]:
    """(mu, j, k) where t_j - t_k does not divide cls|_mu - cls|_{(jk) mu}."""
    table = cls.table
    failures = []
    for point, value in cls.restrictions.items():
        for j in range(1, len(point) + 1):
            for k in range(j + 1, len(point) + 1):
                if point[j - 1] == point[k - 1]:
                    continue
                partner = point[:j - 1] + point[k - 1] + point[j:k - 1] + point[j - 1] + point[k:]
                difference = value - cls.restrictions[partner]
                if not difference:
                    continue
                weight = (_t(table, j) - _t(table, k)).numer
                divisible, _ = divides(weight, difference.numer)
                if not divisible:
                    failures.append((point, j, k))
    return failures


def unexpected_denominators(cls: FixedPointClass) -> Dict[str, str]:
    """Restrictions whose denominator is not a product of (b t_i - 1) factors."""
    table = cls.table
    beta = table.gen(config.SYMBOL_BETA)
    unexpected = {}
    for point, value in cls.restrictions.items():
        denominator = value.denom
        for i in range(1, cls.shape.n + 1):
            factor = (beta * _t(table, i) - 1).numer
            divisible, quotient = divides(factor, denominator)
            while divisible:
                denominator = quotient
                divisible, quotient = divides(factor, denominator)
        if not denominator.is_ground:
            unexpected[point] = format_rational(table.field.new(denominator), table)
    return unexpected


def _random_class(shape: ThetaShape, rng: random.Random) -> FixedPointClass:
    table = connective(shape.n)
    names = [config.SYMBOL_XQ] + ['{0}{1}'.format(config.PREFIX_T, i) for i in range(1, shape.n + 1)]
    return FixedPointClass(shape, table, {
        string: random_laurent(table, rng, names) for string in all_strings(shape)
    })


def formal_group_results(n: int) -> List[EquationResult]:
    """x_{y_j-y_k} is additive under F and inverted by its formal inverse; kappa values."""
    table = connective(n)
    beta = table.gen(config.SYMBOL_BETA)
    results = []
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            if j == k:
                continue
            results.append(check(
                'formal inverse x{0}{1}'.format(j, k),
                rf_equals(formal_inverse(x_of_weight(table, j, k), table), x_of_weight(table, k, j)),
            ))
            for m in range(1, n + 1):
                if m in {j, k}:
                    continue
                results.append(check(
                    'formal sum x{0}{1}+x{1}{2}'.format(j, k, m),
                    rf_equals(
                        formal_add(x_of_weight(table, j, k), x_of_weight(table, k, m), table),
                        x_of_weight(table, j, m),
                    ),
                ))
    for j, k in ((1, n), (n, 1)):
        value = x_of_weight(table, j, k)
        opposite = x_of_weight(table, k, j)
        results.append(check(
            'x{0}{1} = x{1}{0}(b x{0}{1} - 1)'.format(j, k),
            rf_equals(value, opposite * (beta * value - 1)),
        ))
        results.append(check(
            '(b x{0}{1} - 1)(b x{1}{0} - 1) = 1'.format(j, k),
            rf_equals((beta * value - 1) * (beta * opposite - 1), table.one),
        ))
    rng = random.Random(config.RANDOM_SEED)
    for trial in range(config.RANDOM_TRIALS):
        weight = [rng.randint(-2, 2) for _ in range(n)]
        negated = [-count for count in weight]
        results.append(check(
            'F(x_l, x_-l) = 0 #{0} {1}'.format(trial, weight),
            is_zero(formal_add(x_of_coefficients(table, weight), x_of_coefficients(table, negated), table)),
        ))
    for i in range(1, n):
        results.append(check('kappa_{0} = b'.format(i), rf_equals(kappa(table, i), beta)))
    for i in range(1, n - 1):
        results.append(check('kappa_{0},{1} = 0'.format(i, i + 1), is_zero(kappa_pair(table, i))))
    return results


def connective_operator_suite(shape: ThetaShape, trials: int = None, seed: int = None) -> List[EquationResult]:
    """Quadratic relation (d + xq^2)(d + xq^2 kappa - xq^2 - kappa) = 0 and braid relations."""
    rng = random.Random(config.RANDOM_SEED if seed is None else seed)
    trials = config.RANDOM_TRIALS if trials is None else trials
    table = connective(shape.n)
    xq = table.gen(config.SYMBOL_XQ)
    results = []
    for trial in range(trials):
        cls = _random_class(shape, rng)
        for i in range(1, shape.n):
            shift = xq ** 2 * kappa(table, i) - xq ** 2 - kappa(table, i)
            step = apply_connective_partial(i, cls) + cls.scale(shift)
            quadratic = apply_connective_partial(i, step) + step.scale(xq ** 2)
            results.append(check('{0} connective quadratic d{1} #{2}'.format(shape, i, trial), quadratic.is_zero()))
            for j in range(i + 1, shape.n):
                if j == i + 1:
                    left = apply_connective_partial(i, apply_connective_partial(j, apply_connective_partial(i, cls)))
                    right = apply_connective_partial(j, apply_connective_partial(i, apply_connective_partial(j, cls)))
                else:
                    left = apply_connective_partial(i, apply_connective_partial(j, cls))
                    right = apply_connective_partial(j, apply_connective_partial(i, cls))
                name = '{0} connective braid d{1}d{2} #{3}'.format(shape, i, j, trial)
                results.append(check(name, left.equals(right)))
    return results


def localization_results(shape: ThetaShape) -> List[EquationResult]:
    """Connective S and St localize to the K-picture classes."""
    results = []
    k_segre = unhomogenized(build_basis(shape))
    k_chern = chern_basis(shape)
    for string, cls in connective_basis(shape).items():
        results.append(check('{0} localize S_{1}'.format(shape, string), localize(cls).equals(k_segre[string])))
    for string, cls in connective_chern(shape).items():
        results.append(check('{0} localize St_{1}'.format(shape, string), localize(cls).equals(k_chern[string])))
    return results


def ssm_results(shape: ThetaShape) -> List[EquationResult]:
    """Cohomological classes equal hbar^{2 l} S_lambda at b = 0."""
    table = connective(shape.n)
    hbar = table.gen(config.SYMBOL_XQ)
    results = []
    segre = connective_basis(shape)
    for string, cls in ssm_basis(shape).items():
        expected = segre[string].map(lambda value: _at_beta_zero(value, table)).scale(hbar ** (2 * length(string)))
        results.append(check('{0} ssm {1}'.format(shape, string), cls.equals(expected)))
    return results


def gkm_results(shape: ThetaShape) -> List[EquationResult]:
    results = []
    for name, basis in (('St', connective_chern(shape)), ('S', connective_basis(shape))):
        for string, cls in basis.items():
            failures = gkm_failures(cls)
            results.append(check(
                '{0} gkm {1}_{2}'.format(shape, name, string),
                not failures,
                ', '.join('{0}:t{1}-t{2}'.format(*failure) for failure in failures),
            ))
    for name, basis, asserted in (('St', connective_chern(shape), True), ('S', connective_basis(shape), False)):
        for string, cls in basis.items():
            unexpected = unexpected_denominators(cls)
            results.append(check(
                '{0} integrality {1}_{2}'.format(shape, name, string),
                not unexpected,
                '; '.join('{0}: {1}'.format(point, text) for point, text in unexpected.items()),
                asserted=asserted,
            ))
    return results


def hand_check_results() -> List[EquationResult]:
    """Gr(1,2): St_01|01 = (1 - xq^2) + xq^2 x_alpha and St_01|10 = 1 - xq^2."""
    table = connective(2)
    xq = table.gen(config.SYMBOL_XQ)
    chern = connective_chern(grassmannian(1, 2))['01']
    return [
        check('St_01|01', rf_equals(chern['01'], (1 - xq ** 2) + xq ** 2 * x_of_weight(table, 1, 2))),
        check('St_01|10', rf_equals(chern['10'], 1 - xq ** 2)),
    ]


def constant_localization_results(text: str) -> List[EquationResult]:
    """Triangular-solve constants in the S_lambda basis localize to the K-picture constants c."""
    shape = parse_shape(text)
    table = kpicture(shape.n)
    segre = connective_basis(shape)
    homogenized = build_basis(shape)
    strings = list(segre)
    results = []
    ## c^nu_{lam,mu} = c^nu_{mu,lam}
    for position, lam in enumerate(strings):
        for mu in strings[position:]:
            connective_constants = structure_constants(lam, mu, segre)
            k_constants = structure_constants(lam, mu, homogenized)
            for nu in strings:
                expected = unhomogenize(k_constants[nu], lam, mu, nu, table)
                localized = localize_value(connective_constants[nu], shape.n)
                results.append(check(
                    '{0} localize c^{3}_{1},{2}'.format(shape, lam, mu, nu),
                    rf_equals(localized, expected),
                    format_rational(localized, table),
                ))
    logging.info(config.MESSAGE_SUITE.format(
        name='solve localization {0}'.format(shape),
        passed=sum(result.passed for result in results),
        total=len(results),
    ))
    return results


@lru_cache(maxsize=None)
def _localized_piece(n: int, a: int, b: int, name: str) -> RationalFunction:
    return localize_value(placed(config.PICTURE_CONNECTIVE, n, a, b, name), n)


def piece_localization_results(n: int) -> List[EquationResult]:
    """Each placed connective rhombus localizes to the placed K-picture rhombus."""
    names = sorted(set(RHOMBI.values()) - {'unit'})
    return [
        check(
            'piece localization n={0} ({1},{2}) {3}'.format(n, a, b, name),
            rf_equals(_localized_piece(n, a, b, name), placed(config.PICTURE_K, n, a, b, name)),
        )
        for a in range(n - 1)
        for b in range(n - 1 - a)
        for name in names
    ]


def localized_puzzle_constant(lam: str, mu: str, nu: str) -> RationalFunction:
    """Localization of the connective puzzle sum, taken piece by piece."""
    n = len(lam)
    total = kpicture(n).zero
    for puzzle in enumerate_puzzles(lam, mu, nu):
        value = kpicture(n).one
        for a, b, key in puzzle.rhombi():
            if RHOMBI[key] != 'unit':
                value *= _localized_piece(n, a, b, RHOMBI[key])
        total += value
    return total


def _localized_constant(lam: str, mu: str, nu: str) -> RationalFunction:
    n = len(lam)
    if n <= config.DIRECT_LOCALIZATION_MAX_N:
        return localize_value(puzzle_constant(lam, mu, nu, config.PICTURE_CONNECTIVE), n)
    return localized_puzzle_constant(lam, mu, nu)


def puzzle_localization_results(n: int) -> List[EquationResult]:
    """Connective puzzle sums localize to the K-picture puzzle sums."""
    results = []
    for k in range(n + 1):
        strings = all_strings(grassmannian(k, n))
        for lam in strings:
            for mu in strings:
                for nu in strings:
                    results.append(check(
                        'puzzle localization {0}*{1}->{2}'.format(lam, mu, nu),
                        rf_equals(_localized_constant(lam, mu, nu), puzzle_constant(lam, mu, nu)),
                    ))
    return results


def shape_results(text: str, trials: int = None) -> List[EquationResult]:
    """Every connective check for one shape."""
    shape = parse_shape(text)
    results = formal_group_results(shape.n)
    results.extend(connective_operator_suite(shape, trials))
    results.extend(localization_results(shape))
    results.extend(ssm_results(shape))
    results.extend(gkm_results(shape))
    logging.info(config.MESSAGE_SUITE.format(
        name='gkm {0}'.format(shape), passed=sum(result.passed for result in results), total=len(results),
    ))
    return results
