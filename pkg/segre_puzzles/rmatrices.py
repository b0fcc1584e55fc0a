"""Colored R-matrices, the triangle matrices U and D, and their identity suites."""
import logging
import random
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from segre_puzzles import config
from segre_puzzles.lattice import RHAT_ORDER, rhat
from segre_puzzles.puzzles import RHOMBI, _k_values
from segre_puzzles.reports import EquationResult, check, matrix_check
from segre_puzzles.symcore import (
    RationalFunction,
    SegreError,
    SymbolicMatrix,
    VariableTable,
    evaluate_at,
    format_rational,
    kpicture,
    parse_rational,
    q_poly,
    random_point,
    substitute,
)

ZERO, ONE, TEN = config.LABEL_ZERO, config.LABEL_ONE, config.LABEL_TEN
SINGLE = (ONE, ZERO, TEN)
PAIRS = tuple((first, second) for first in SINGLE for second in SINGLE)
POSITION = {pair: index for index, pair in enumerate(PAIRS)}

RANK = 3 ## variables z1..z3 cover every suite

## display entries: (fugacity name, variant); variant in
## 'z' f(z), 'inv' f(1/z), 'z_inv' z*f(1/z), 'inv_inv' f(1/z)/z, 'one' 1
BR_DISPLAY = {
    ((ONE, ONE), (ONE, ONE)): ('unit', 'one'),
    ((ONE, ZERO), (ZERO, ONE)): ('unit', 'one'),
    ((ONE, TEN), (ONE, ZERO)): ('beta_z', 'inv'),
    ((ONE, TEN), (ZERO, TEN)): ('split', 'z_inv'),
    ((ONE, TEN), (TEN, ONE)): ('cross_q', 'inv'),
    ((ZERO, ONE), (ONE, ZERO)): ('cross', 'inv'),
    ((ZERO, ONE), (ZERO, TEN)): ('beta', 'inv'),
    ((ZERO, ONE), (TEN, ONE)): ('beta', 'inv'),
    ((ZERO, ZERO), (ZERO, ZERO)): ('unit', 'one'),
    ((ZERO, TEN), (TEN, ZERO)): ('unit', 'one'),
    ((TEN, ONE), (ONE, TEN)): ('unit', 'one'),
    ((TEN, ZERO), (ONE, ZERO)): ('beta_z', 'inv'),
    ((TEN, ZERO), (ZERO, TEN)): ('cross_q', 'inv'),
    ((TEN, ZERO), (TEN, ONE)): ('merge', 'inv_inv'),
    ((TEN, TEN), (TEN, TEN)): ('big_q', 'z'),
}
GB_DISPLAY = dict(BR_DISPLAY)
GB_DISPLAY[(ONE, TEN), (ZERO, TEN)] = ('merge', 'inv_inv')
GB_DISPLAY[(TEN, ZERO), (TEN, ONE)] = ('split', 'z_inv')

_A, _B, _C, _D = 'beta_z', 'cross_q', 'cross', 'beta'


def _single(rows: Dict[Tuple[str, str], Sequence[Tuple[Tuple[str, str], str]]]):
    display = {
        ((label, label), (label, label)): ('unit', 'one') for label in SINGLE
    }
    for row, entries in rows.items():
        for column, name in entries:
            display[row, column] = (name, 'inv')
    return display


GG_DISPLAY = _single({
    (ONE, ZERO): (((ONE, ZERO), _A), ((ZERO, ONE), _B)),
    (ONE, TEN): (((ONE, TEN), _A), ((TEN, ONE), _B)),
    (ZERO, ONE): (((ONE, ZERO), _C), ((ZERO, ONE), _D)),
    (ZERO, TEN): (((ZERO, TEN), _A), ((TEN, ZERO), _C)),
    (TEN, ONE): (((ONE, TEN), _C), ((TEN, ONE), _D)),
    (TEN, ZERO): (((ZERO, TEN), _B), ((TEN, ZERO), _D)),
})
BB_DISPLAY = _single({
    (ONE, ZERO): (((ONE, ZERO), _A), ((ZERO, ONE), _B)),
    (ONE, TEN): (((ONE, TEN), _A), ((TEN, ONE), _B)),
    (ZERO, ONE): (((ONE, ZERO), _C), ((ZERO, ONE), _D)),
    (ZERO, TEN): (((ZERO, TEN), _D), ((TEN, ZERO), _C)),
    (TEN, ONE): (((ONE, TEN), _C), ((TEN, ONE), _D)),
    (TEN, ZERO): (((ZERO, TEN), _B), ((TEN, ZERO), _A)),
})
RR_DISPLAY = _single({
    (ONE, ZERO): (((ONE, ZERO), _A), ((ZERO, ONE), _B)),
    (ONE, TEN): (((ONE, TEN), _D), ((TEN, ONE), _B)),
    (ZERO, ONE): (((ONE, ZERO), _C), ((ZERO, ONE), _D)),
    (ZERO, TEN): (((ZERO, TEN), _D), ((TEN, ZERO), _C)),
    (TEN, ONE): (((ONE, TEN), _C), ((TEN, ONE), _A)),
    (TEN, ZERO): (((ZERO, TEN), _B), ((TEN, ZERO), _A)),
})
GR_DISPLAY = {key: (name, 'z' if name != 'unit' else 'one') for key, name in RHOMBI.items()}

DISPLAYS = {
    'gr': GR_DISPLAY,
    'br': BR_DISPLAY,
    'gb': GB_DISPLAY,
    'gg': GG_DISPLAY,
    'rr': RR_DISPLAY,
    'bb': BB_DISPLAY,
}
## pair -> (display, argument map) with z = map(w): 'q2' q^2 w, 'q' q w, 'same' w
DIRECT = {
    'gr': ('gr', 'q2'),
    'br': ('br', 'q'),
    'gb': ('gb', 'q'),
    'gg': ('gg', 'same'),
    'rr': ('rr', 'same'),
    'bb': ('bb', 'same'),
}
## pair -> partner with R_pair(w) = R_partner(1/w)^{-1}
INVERTED = {'rg': 'gr', 'rb': 'br', 'bg': 'gb'}
COLOR_PAIRS = ('gr', 'rg', 'br', 'rb', 'gb', 'bg', 'gg', 'rr', 'bb')


def table() -> VariableTable:
    return kpicture(RANK)


def spectral(text: str) -> RationalFunction:
    """Parse a spectral argument such as 'q^2*z3/z2'."""
    return parse_rational(text, table())


def _entry_value(name: str, variant: str, values: Dict[str, RationalFunction]) -> RationalFunction:
    variables = table()
    z = variables.gen(config.SYMBOL_SPECTRAL)
    if variant == 'one':
        return variables.one
    value = values[name]
    if variant == 'z':
        return value
    flipped = substitute(value, {config.SYMBOL_SPECTRAL: 1 / z}, variables)
    if variant == 'z_inv':
        return z * flipped
    if variant == 'inv_inv':
        return flipped / z
    return flipped


@lru_cache(maxsize=None)
def display(name: str) -> SymbolicMatrix:
    """A displayed 9x9 matrix in the placeholder z; rows (bottom pair), columns (top pair)."""
    values = _k_values(table())
    entries = {
        (POSITION[row], POSITION[column]): _entry_value(fugacity, variant, values)
        for (row, column), (fugacity, variant) in DISPLAYS[name].items()
    }
    return SymbolicMatrix.from_entries(table(), 9, 9, entries)


def _display_argument(kind: str, argument: RationalFunction) -> RationalFunction:
    q = table().gen(config.SYMBOL_Q)
    if kind == 'q2':
        return q ** 2 * argument
    if kind == 'q':
        return q * argument
    return argument


@lru_cache(maxsize=None)
def _inverse_template(partner: str) -> SymbolicMatrix:
    """R_partner as a function of its argument z, inverted once."""
    kind_display, kind = DIRECT[partner]
    z = table().gen(config.SYMBOL_SPECTRAL)
    direct = display(kind_display).substitute({config.SYMBOL_SPECTRAL: _display_argument(kind, z)})
    logging.info(config.MESSAGE_INVERSE.format(pair=partner))
    return direct.inverse()


def build(pair: str, argument: RationalFunction) -> SymbolicMatrix:
    """R_pair at the given spectral argument.

    Args:
        pair (str): two colors, e.g. 'gr' for R_{g,r}.
        argument (RationalFunction): spectral argument over kpicture(3).

    Raises:
        SegreError: unknown pair.

    Returns:
        SymbolicMatrix: the 9x9 matrix.
    """
    if pair in DIRECT:
        name, kind = DIRECT[pair]
        return display(name).substitute({config.SYMBOL_SPECTRAL: _display_argument(kind, argument)})
    if pair in INVERTED:
        return _inverse_template(INVERTED[pair]).substitute({config.SYMBOL_SPECTRAL: 1 / argument})
    raise SegreError(config.ERROR_COLOR_PAIR.format(pair=pair))


def u_matrix() -> SymbolicMatrix:
    """U: 3x9, rows 1-, 0-, 10-."""
    variables = table()
    q = variables.gen(config.SYMBOL_Q)
    single = {label: index for index, label in enumerate(SINGLE)}
    return SymbolicMatrix.from_entries(variables, 3, 9, {
        (single[ONE], POSITION[ONE, ONE]): 1,
        (single[ONE], POSITION[ZERO, TEN]): 1,
        (single[ZERO], POSITION[ZERO, ZERO]): 1,
        (single[ZERO], POSITION[TEN, ONE]): 1,
        (single[TEN], POSITION[ONE, ZERO]): 1,
        (single[TEN], POSITION[TEN, TEN]): -q_poly(variables) / q,
    })


def d_matrix() -> SymbolicMatrix:
    """D: 9x3, columns 1-, 0-, 10-."""
    variables = table()
    q = variables.gen(config.SYMBOL_Q)
    single = {label: index for index, label in enumerate(SINGLE)}
    return SymbolicMatrix.from_entries(variables, 9, 3, {
        (POSITION[ONE, ONE], single[ONE]): 1,
        (POSITION[ONE, TEN], single[ZERO]): 1,
        (POSITION[ZERO, ONE], single[TEN]): 1,
        (POSITION[ZERO, ZERO], single[ZERO]): 1,
        (POSITION[TEN, ZERO], single[ONE]): 1,
        (POSITION[TEN, TEN], single[TEN]): -q,
    })


def _slot(matrix: SymbolicMatrix, slot: Optional[str]) -> SymbolicMatrix:
    identity = SymbolicMatrix.identity(matrix.table, 3)
    if slot == 'left':
        return matrix.kron(identity)
    if slot == 'right':
        return identity.kron(matrix)
    return matrix


## factor: ('R', pair, argument text, slot) or ('U'|'D', slot)
YBE_TRIPLES = (
    (('rg', 'q^2*z3/z2'), ('rg', 'q^2*z3/z1'), ('rr', 'z2/z1')),
    (('gr', 'z3/(q^2*z2)'), ('rr', 'z3/z1'), ('rg', 'q^2*z2/z1')),
    (('rr', 'z3/z2'), ('gr', 'z3/(q^2*z1)'), ('gr', 'z2/(q^2*z1)')),
    (('gr', 'z3/(q^2*z2)'), ('gr', 'z3/(q^2*z1)'), ('gg', 'z2/z1')),
    (('rg', 'q^2*z3/z2'), ('gg', 'z3/z1'), ('gr', 'z2/(q^2*z1)')),
    (('gg', 'z3/z2'), ('rg', 'q^2*z3/z1'), ('rg', 'q^2*z2/z1')),
    (('br', 'z3/(q*z2)'), ('br', 'z3/(q*z1)'), ('bb', 'z2/z1')),
    (('rb', 'q*z3/z2'), ('bb', 'z3/z1'), ('br', 'z2/(q*z1)')),
    (('bb', 'z3/z2'), ('rb', 'q*z3/z1'), ('rb', 'q*z2/z1')),
    (('rb', 'q*z3/z2'), ('rb', 'q*z3/z1'), ('rr', 'z2/z1')),
    (('br', 'z3/(q*z2)'), ('rr', 'z3/z1'), ('rb', 'q*z2/z1')),
    (('rr', 'z3/z2'), ('br', 'z3/(q*z1)'), ('br', 'z2/(q*z1)')),
    (('bb', 'z3/z2'), ('gb', 'z3/(q*z1)'), ('gb', 'z2/(q*z1)')),
    (('gb', 'z3/(q*z2)'), ('bb', 'z3/z1'), ('bg', 'q*z2/z1')),
    (('bg', 'q*z3/z2'), ('bg', 'q*z3/z1'), ('bb', 'z2/z1')),
    (('gb', 'z3/(q*z2)'), ('gb', 'z3/(q*z1)'), ('gg', 'z2/z1')),
    (('bg', 'q*z3/z2'), ('gg', 'z3/z1'), ('gb', 'z2/(q*z1)')),
    (('gg', 'z3/z2'), ('bg', 'q*z3/z1'), ('bg', 'q*z2/z1')),
    (('gb', 'z3/(q*z2)'), ('rb', 'q*z3/z1'), ('rg', 'q^2*z2/z1')),
    (('bg', 'q*z3/z2'), ('rg', 'q^2*z3/z1'), ('rb', 'q*z2/z1')),
    (('rg', 'q^2*z3/z2'), ('bg', 'q*z3/z1'), ('br', 'z2/(q*z1)')),
    (('gr', 'z3/(q^2*z2)'), ('br', 'z3/(q*z1)'), ('bg', 'q*z2/z1')),
    (('rb', 'q*z3/z2'), ('gb', 'z3/(q*z1)'), ('gr', 'z2/(q^2*z1)')),
    (('br', 'z3/(q*z2)'), ('gr', 'z3/(q^2*z1)'), ('gb', 'z2/(q*z1)')),
)

BOOTSTRAP = (
    ('U left br', (('R', 'br', 'z2/(q*z1)', None), ('U', 'left')),
     (('U', 'right'), ('R', 'gr', 'z2/(q^2*z1)', 'left'), ('R', 'rr', 'z2/z1', 'right'))),
    ('U left bg', (('R', 'bg', 'q*z2/z1', None), ('U', 'left')),
     (('U', 'right'), ('R', 'gg', 'z2/z1', 'left'), ('R', 'rg', 'q^2*z2/z1', 'right'))),
    ('U left bb', (('R', 'bb', 'z2/z1', None), ('U', 'left')),
     (('U', 'right'), ('R', 'gb', 'z2/(q*z1)', 'left'), ('R', 'rb', 'q*z2/z1', 'right'))),
    ('U right rb', (('R', 'rb', 'q*z2/z1', None), ('U', 'right')),
     (('U', 'left'), ('R', 'rr', 'z2/z1', 'right'), ('R', 'rg', 'q^2*z2/z1', 'left'))),
    ('U right gb', (('R', 'gb', 'z2/(q*z1)', None), ('U', 'right')),
     (('U', 'left'), ('R', 'gr', 'z2/(q^2*z1)', 'right'), ('R', 'gg', 'z2/z1', 'left'))),
    ('U right bb', (('R', 'bb', 'z2/z1', None), ('U', 'right')),
     (('U', 'left'), ('R', 'br', 'z2/(q*z1)', 'right'), ('R', 'bg', 'q*z2/z1', 'left'))),
    ('D right br', (('D', 'right'), ('R', 'br', 'z2/(q*z1)', None)),
     (('R', 'rr', 'z2/z1', 'left'), ('R', 'gr', 'z2/(q^2*z1)', 'right'), ('D', 'left'))),
    ('D right bg', (('D', 'right'), ('R', 'bg', 'q*z2/z1', None)),
     (('R', 'rg', 'q^2*z2/z1', 'left'), ('R', 'gg', 'z2/z1', 'right'), ('D', 'left'))),
    ('D right bb', (('D', 'right'), ('R', 'bb', 'z2/z1', None)),
     (('R', 'rb', 'q*z2/z1', 'left'), ('R', 'gb', 'z2/(q*z1)', 'right'), ('D', 'left'))),
    ('D left rb', (('D', 'left'), ('R', 'rb', 'q*z2/z1', None)),
     (('R', 'rg', 'q^2*z2/z1', 'right'), ('R', 'rr', 'z2/z1', 'left'), ('D', 'right'))),
    ('D left gb', (('D', 'left'), ('R', 'gb', 'z2/(q*z1)', None)),
     (('R', 'gg', 'z2/z1', 'right'), ('R', 'gr', 'z2/(q^2*z1)', 'left'), ('D', 'right'))),
    ('D left bb', (('D', 'left'), ('R', 'bb', 'z2/z1', None)),
     (('R', 'bg', 'q*z2/z1', 'right'), ('R', 'br', 'z2/(q*z1)', 'left'), ('D', 'right'))),
)

UNITARITY = (
    ('rr', 'z2/z1', 'rr', 'z1/z2'),
    ('gg', 'z2/z1', 'gg', 'z1/z2'),
    ('bb', 'z2/z1', 'bb', 'z1/z2'),
    ('rg', 'q^2*z2/z1', 'gr', 'z1/(q^2*z2)'),
    ('bg', 'q*z2/z1', 'gb', 'z1/(q*z2)'),
    ('rb', 'q*z2/z1', 'br', 'z1/(q*z2)'),
)

EQUAL = ('gg', 'rr', 'bb')


def _factor(term) -> SymbolicMatrix:
    if term[0] == 'U':
        return _slot(u_matrix(), term[1])
    if term[0] == 'D':
        return _slot(d_matrix(), term[1])
    _, pair, argument, slot = term
    return _slot(build(pair, spectral(argument)), slot)


def _product(factors: Sequence[SymbolicMatrix]) -> SymbolicMatrix:
    result = factors[0]
    for factor in factors[1:]:
        result = result @ factor
    return result


def _numeric(matrix: SymbolicMatrix, point) -> Optional[List[List]]:
    rows = []
    for row in matrix.rows:
        values = []
        for entry in row:
            value = evaluate_at(entry, point, matrix.table) if entry else 0
            if value is None:
                return None
            values.append(value)
        rows.append(values)
    return rows


def _numeric_product(factors: Sequence[SymbolicMatrix], point) -> Optional[List[List]]:
    result = None
    for factor in factors:
        values = _numeric(factor, point)
        if values is None:
            return None
        if result is None:
            result = values
            continue
        columns = list(zip(*values))
        result = [[sum(a * b for a, b in zip(row, column)) for column in columns] for row in result]
    return result


def _equation(name: str, left: Sequence[SymbolicMatrix], right: Sequence[SymbolicMatrix], rng) -> EquationResult:
    """Random-point pre-check, then the symbolic comparison."""
    point = random_point(left[0].table, rng)
    numeric_left = _numeric_product(left, point)
    numeric_right = _numeric_product(right, point)
    if numeric_left is not None and numeric_right is not None and numeric_left != numeric_right:
        return check(name, False, 'differs at {0}'.format(point))
    return matrix_check(name, _product(left), _product(right))


def _rng(seed: Optional[int]) -> random.Random:
    return random.Random(config.RANDOM_SEED if seed is None else seed)


def ybe_equation(index: int, seed: Optional[int] = None) -> EquationResult:
    """Yang-Baxter equation number index (0-based) of YBE_TRIPLES."""
    first, second, third = YBE_TRIPLES[index]
    lhs = [_factor(('R', *first, 'left')), _factor(('R', *second, 'right')), _factor(('R', *third, 'left'))]
    rhs = [_factor(('R', *third, 'right')), _factor(('R', *second, 'left')), _factor(('R', *first, 'right'))]
    parts = [part for term in (first, second, third) for part in term]
    name = 'ybe {0}: {1}({2}) {3}({4}) {5}({6})'.format(index + 1, *parts)
    return _equation(name, lhs, rhs, _rng(seed))


def bootstrap_equation(index: int, seed: Optional[int] = None) -> EquationResult:
    name, left, right = BOOTSTRAP[index]
    return _equation(
        'bootstrap {0}'.format(name),
        [_factor(term) for term in left],
        [_factor(term) for term in right],
        _rng(seed),
    )


def unitarity_equation(index: int) -> EquationResult:
    pair, argument, partner, partner_argument = UNITARITY[index]
    product = build(pair, spectral(argument)) @ build(partner, spectral(partner_argument))
    return matrix_check(
        'unitarity {0}({1}) {2}({3})'.format(pair, argument, partner, partner_argument),
        product,
        SymbolicMatrix.identity(table(), 9),
    )


def equal_equation(index: int) -> EquationResult:
    pair = EQUAL[index]
    return matrix_check(
        'equal parameters {0}(1)'.format(pair), build(pair, table().one), SymbolicMatrix.identity(table(), 9),
    )


def verify_appendix_suite() -> List[EquationResult]:
    """All Yang-Baxter, bootstrap, unitarity and equal-parameter identities, in order."""
    results = [ybe_equation(index) for index in range(len(YBE_TRIPLES))]
    results.extend(bootstrap_equation(index) for index in range(len(BOOTSTRAP)))
    results.extend(unitarity_equation(index) for index in range(len(UNITARITY)))
    results.extend(equal_equation(index) for index in range(len(EQUAL)))
    return results


def verify_factorization() -> List[EquationResult]:
    """D*U against R_{g,r} where its fugacities sit at z = 1, and its rank."""
    variables = table()
    q = variables.gen(config.SYMBOL_Q)
    at_one = build('gr', 1 / q ** 2)
    product = d_matrix() @ u_matrix()
    results = [
        check('factorization rank', at_one.rank() == 3, str(at_one.rank())),
        matrix_check('factorization D*U', product, at_one),
    ]
    beta_one = {config.SYMBOL_BETA: 1}
    results.append(matrix_check(
        'factorization D*U at b=1', product.substitute(beta_one), at_one.substitute(beta_one),
    ))
    at_zero = display('gr').substitute({config.SYMBOL_SPECTRAL: 0})
    results.append(check('rank at z=0', True, str(at_zero.rank()), asserted=False))
    return results


def _is_plain(pair: Tuple[str, str]) -> bool:
    return TEN not in pair


def verify_single_number_props() -> List[EquationResult]:
    """Single-color matrices keep {0,1}^2 and 10-containing pairs apart, and fix (i,i)."""
    results = []
    argument = spectral('z2/z1')
    for pair in ('gg', 'rr', 'bb'):
        matrix = build(pair, argument)
        separated = True
        forced = True
        for i, j in matrix.nonzero_entries():
            row, column = PAIRS[i], PAIRS[j]
            if _is_plain(row) != _is_plain(column):
                separated = False
            for label in (ZERO, ONE):
                diagonal = (label, label)
                if (row == diagonal) != (column == diagonal):
                    forced = False
        results.append(check('{0} preserves single numbers'.format(pair), separated))
        results.append(check('{0} fixes equal pairs'.format(pair), forced))
    return results


def verify_rhat_block() -> List[EquationResult]:
    """R-hat(1/w) is the {0,1}^2 block of each single-color R_{c,c}(w)."""
    argument = spectral('z2/z1')
    index = [POSITION[str(first), str(second)] for first, second in RHAT_ORDER]
    expected = rhat(1 / argument, table())
    results = []
    for pair in ('gg', 'rr', 'bb'):
        matrix = build(pair, argument)
        block = SymbolicMatrix(table(), [[matrix.entry(i, j) for j in index] for i in index])
        results.append(matrix_check('rhat is the {0} block'.format(pair), block, expected))
    return results


def determinant_report() -> List[EquationResult]:
    """Determinants of the displayed matrices, recorded only."""
    results = []
    argument = spectral('z2/z1')
    for pair in COLOR_PAIRS:
        det = build(pair, argument).det()
        results.append(check(
            'det {0}'.format(pair), bool(det), format_rational(det, table()), asserted=False,
        ))
    return results
