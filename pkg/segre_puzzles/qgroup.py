"""The two-parameter quantum affine algebra, its three evaluation representations and the intertwiner checks."""
from typing import Dict, Iterable, List, Optional, Tuple

from segre_puzzles import config
from segre_puzzles.reports import EquationResult, check, matrix_check
from segre_puzzles.rmatrices import build, d_matrix, table, u_matrix
from segre_puzzles.symcore import RationalFunction, SegreError, SymbolicMatrix, format_rational, q_poly

Generator = Tuple[str, int]
Word = Tuple[Generator, ...]

NODES = (0, 1, 2)
KINDS = ('E', 'F', 'K1', 'K2')
INVERSE = {'K1': 'K1inv', 'K2': 'K2inv', 'K1inv': 'K1', 'K2inv': 'K2'}
MIXED_PAIRS = ('gr', 'rg', 'br', 'rb', 'gb', 'bg')
SINGLE_PAIRS = ('gg', 'rr', 'bb')

## (i, j) -> which of the three values q_ij takes: 'diagonal' q^2/Q, 'down' 1/q, 'up' Q/q
PARAMETER_KIND = {
    (0, 0): 'diagonal', (1, 1): 'diagonal', (2, 2): 'diagonal',
    (1, 0): 'down', (2, 1): 'down', (0, 2): 'down',
    (2, 0): 'up', (0, 1): 'up', (1, 2): 'up',
}


def parameters() -> Dict[Tuple[int, int], RationalFunction]:
    """The specialized q_ij."""
    q = table().gen(config.SYMBOL_Q)
    big_q = q_poly(table())
    values = {'diagonal': q ** 2 / big_q, 'down': 1 / q, 'up': big_q / q}
    return {pair: values[kind] for pair, kind in PARAMETER_KIND.items()}


def _unit(row: int, column: int, value) -> Dict[Tuple[int, int], RationalFunction]:
    return {(row - 1, column - 1): value}


def _rep_entries(color: str, spectral: RationalFunction) -> Dict[Generator, Dict]:
    variables = table()
    q = variables.gen(config.SYMBOL_Q)
    big_q = q_poly(variables)
    z = spectral
    if color == 'g':
        return {
            ('E', 0): _unit(3, 1, (q / z) * (-q)),
            ('E', 1): _unit(1, 2, q),
            ('E', 2): _unit(2, 3, -variables.one),
            ('F', 0): _unit(1, 3, -z / q),
            ('F', 1): _unit(2, 1, 1 / big_q),
            ('F', 2): _unit(3, 2, -q),
            ('K1', 0): (big_q / q, 1, q),
            ('K1', 1): (q / big_q, 1 / q, 1 / big_q),
            ('K1', 2): (1, q, big_q / q),
            ('K2', 0): (1 / q, 1, q / big_q),
            ('K2', 1): (q, big_q / q, big_q),
            ('K2', 2): (1, q / big_q, 1 / q),
        }
    if color == 'r':
        return {
            ('E', 0): _unit(2, 3, -1 / z),
            ('E', 1): _unit(3, 1, -q ** 2),
            ('E', 2): _unit(1, 2, q / big_q),
            ('F', 0): _unit(3, 2, -q * z),
            ('F', 1): _unit(1, 3, -1 / q),
            ('F', 2): _unit(2, 1, variables.one),
            ('K1', 0): (1, q, big_q / q),
            ('K1', 1): (big_q / q, 1, q),
            ('K1', 2): (q / big_q, 1 / q, 1 / big_q),
            ('K2', 0): (1, q / big_q, 1 / q),
            ('K2', 1): (1 / q, 1, q / big_q),
            ('K2', 2): (q, big_q / q, big_q),
        }
    if color == 'b':
        return {
            ('E', 0): _unit(2, 1, -1 / (q * z)),
            ('E', 1): _unit(3, 2, q),
            ('E', 2): _unit(1, 3, q / big_q),
            ('F', 0): _unit(1, 2, -q ** 2 * z),
            ('F', 1): _unit(2, 3, 1 / big_q),
            ('F', 2): _unit(3, 1, variables.one),
            ('K1', 0): (big_q / q, q, big_q),
            ('K1', 1): (1, 1 / q, q / big_q),
            ('K1', 2): (q / big_q, 1, 1 / q),
            ('K2', 0): (1 / q, q / big_q, 1 / big_q),
            ('K2', 1): (1, big_q / q, q),
            ('K2', 2): (q, 1, big_q / q),
        }
    raise SegreError(config.ERROR_COLOR_PAIR.format(pair=color))


def rep(color: str, spectral: RationalFunction) -> Dict[Generator, SymbolicMatrix]:
    """Images of every generator (K inverses included) under rho_color at spectral parameter.

    Args:
        color (str): 'g', 'r' or 'b'.
        spectral (RationalFunction): evaluation parameter over kpicture(3).

    Returns:
        dict: generator -> 3x3 matrix in the basis 1, 0, 10.
    """
    variables = table()
    images = {}
    for generator, data in _rep_entries(color, spectral).items():
        if isinstance(data, dict):
            images[generator] = SymbolicMatrix.from_entries(variables, 3, 3, data)
            continue
        kind, node = generator
        diagonal = [value * variables.one for value in data]
        images[generator] = SymbolicMatrix.from_entries(variables, 3, 3, {(i, i): v for i, v in enumerate(diagonal)})
        images[INVERSE[kind], node] = SymbolicMatrix.from_entries(
            variables, 3, 3, {(i, i): 1 / v for i, v in enumerate(diagonal)},
        )
    return images


def coproduct(generator: Generator) -> List[Tuple[Optional[Generator], Optional[Generator]]]:
    """Delta(generator) as a sum of simple tensors; None stands for 1."""
    kind, node = generator
    if kind == 'E':
        return [(('K1', node), generator), (generator, None)]
    if kind == 'F':
        return [(None, generator), (generator, ('K2inv', node))]
    return [(generator, generator)]


def counit(generator: Generator) -> int:
    return 0 if generator[0] in {'E', 'F'} else 1


def antipode(generator: Generator) -> List[Tuple[int, Word]]:
    """S(generator) as signed words."""
    kind, node = generator
    if kind == 'E':
        return [(-1, (('K1inv', node), generator))]
    if kind == 'F':
        return [(-1, (generator, ('K2', node)))]
    return [(1, ((INVERSE[kind], node),))]


def _image(images: Dict[Generator, SymbolicMatrix], generator: Optional[Generator], size: int) -> SymbolicMatrix:
    if generator is None:
        return SymbolicMatrix.identity(table(), size)
    return images[generator]


def coproduct_image(
    generator: Generator,
    first: Dict[Generator, SymbolicMatrix],
    second: Dict[Generator, SymbolicMatrix],
) -> SymbolicMatrix:
    """(first tensor second)(Delta generator) as a 9x9 matrix."""
    result = SymbolicMatrix.zeros(table(), 9, 9)
    for left, right in coproduct(generator):
        result = result + _image(first, left, 3).kron(_image(second, right, 3))
    return result


def tensor_rep(
    first: Dict[Generator, SymbolicMatrix], second: Dict[Generator, SymbolicMatrix],
) -> Dict[Generator, SymbolicMatrix]:
    return {generator: coproduct_image(generator, first, second) for generator in first}


def _word(images: Dict[Generator, SymbolicMatrix], word: Word, size: int) -> SymbolicMatrix:
    result = SymbolicMatrix.identity(table(), size)
    for generator in word:
        result = result @ images[generator]
    return result


def _family(
    name: str, comparisons: Iterable[Tuple[str, SymbolicMatrix, SymbolicMatrix]], asserted: bool = True,
) -> EquationResult:
    """One result for a family of matrix identities, naming the first that fails."""
    for label, left, right in comparisons:
        difference = left.first_difference(right)
        if difference is not None:
            i, j, mine, theirs = difference
            detail = '{0} at ({1},{2}): {3} != {4}'.format(
                label, i, j, format_rational(mine, table()), format_rational(theirs, table()),
            )
            return check(name, False, detail, asserted=asserted)
    return check(name, True, asserted=asserted)


def _commutator(left: SymbolicMatrix, right: SymbolicMatrix) -> SymbolicMatrix:
    return left @ right - right @ left


def _conjugate(images: Dict[Generator, SymbolicMatrix], kind: str, i: int, target: str, j: int) -> SymbolicMatrix:
    return images[kind, i] @ images[target, j] @ images[INVERSE[kind], i]


def relation_families(images: Dict[Generator, SymbolicMatrix], size: int):
    """Defining relations 1-7 evaluated on images, as (number, comparisons) pairs."""
    q_ij = parameters()
    identity = SymbolicMatrix.identity(table(), size)
    zero = SymbolicMatrix.zeros(table(), size, size)
    cartan = [(kind, node) for kind in ('K1', 'K2', 'K1inv', 'K2inv') for node in NODES]
    yield 1, (
        ('{0}{1}'.format(kind, node), images[kind, node] @ images[INVERSE[kind], node], identity)
        for kind in ('K1', 'K2') for node in NODES
    )
    yield 2, (
        ('{0}{1},{2}{3}'.format(*a, *b), images[a] @ images[b], images[b] @ images[a])
        for a in cartan for b in cartan
    )
    yield 3, (
        comparison
        for i in NODES for j in NODES
        for comparison in (
            ('K1_{0} E{1}'.format(i, j), _conjugate(images, 'K1', i, 'E', j), images['E', j].scale(q_ij[i, j])),
            ('K2_{0} E{1}'.format(i, j), _conjugate(images, 'K2inv', i, 'E', j), images['E', j].scale(1 / q_ij[j, i])),
        )
    )
    yield 4, (
        comparison
        for i in NODES for j in NODES
        for comparison in (
            ('K1_{0} F{1}'.format(i, j), _conjugate(images, 'K1', i, 'F', j), images['F', j].scale(1 / q_ij[i, j])),
            ('K2_{0} F{1}'.format(i, j), _conjugate(images, 'K2inv', i, 'F', j), images['F', j].scale(q_ij[j, i])),
        )
    )
    yield 5, (
        (
            '[E{0},F{1}]'.format(i, j),
            _commutator(images['E', i], images['F', j]),
            (images['K1', i] - images['K2inv', i]).scale(q_ij[i, i] / (q_ij[i, i] - 1)) if i == j else zero,
        )
        for i in NODES for j in NODES
    )
    yield 6, (
        (
            'serre E{0}E{1}'.format(i, j),
            _word(images, (('E', i), ('E', i), ('E', j)), size)
            - _word(images, (('E', i), ('E', j), ('E', i)), size).scale(q_ij[i, j] * (1 + q_ij[i, i]))
            + _word(images, (('E', j), ('E', i), ('E', i)), size).scale(q_ij[i, j] / q_ij[j, i]),
            zero,
        )
        for i in NODES for j in NODES if i != j
    )
    yield 7, (
        (
            'serre F{0}F{1}'.format(i, j),
            _word(images, (('F', i), ('F', i), ('F', j)), size).scale(q_ij[i, j] / q_ij[j, i])
            - _word(images, (('F', i), ('F', j), ('F', i)), size).scale(q_ij[i, j] * (1 + q_ij[i, i]))
            + _word(images, (('F', j), ('F', i), ('F', i)), size),
            zero,
        )
        for i in NODES for j in NODES if i != j
    )


def check_algebra_relations(images: Dict[Generator, SymbolicMatrix], label: str, size: int = 3) -> List[EquationResult]:
    return [
        _family('{0} relation {1}'.format(label, number), comparisons)
        for number, comparisons in relation_families(images, size)
    ]


def _generators() -> List[Generator]:
    return [(kind, node) for kind in KINDS for node in NODES]


def check_hopf(color: str) -> List[EquationResult]:
    """Antipode and counit axioms on rho_color, generator by generator."""
    variables = table()
    images = rep(color, variables.gen(config.SYMBOL_SPECTRAL))
    identity = SymbolicMatrix.identity(variables, 3)
    antipode_left, antipode_right, counit_rows = [], [], []
    for generator in _generators():
        expected = identity.scale(counit(generator))
        left = SymbolicMatrix.zeros(variables, 3, 3)
        right = SymbolicMatrix.zeros(variables, 3, 3)
        counit_side = SymbolicMatrix.zeros(variables, 3, 3)
        for first, second in coproduct(generator):
            first_image = _image(images, first, 3)
            second_image = _image(images, second, 3)
            for sign, word in ([(1, ())] if first is None else antipode(first)):
                left = left + (_word(images, word, 3) @ second_image).scale(sign)
            for sign, word in ([(1, ())] if second is None else antipode(second)):
                right = right + (first_image @ _word(images, word, 3)).scale(sign)
            counit_side = counit_side + second_image.scale(1 if first is None else counit(first))
        name = '{0}{1}'.format(*generator)
        antipode_left.append((name, left, expected))
        antipode_right.append((name, right, expected))
        counit_rows.append((name, counit_side, images[generator]))
    return [
        _family('rho_{0} antipode (S x id)'.format(color), antipode_left),
        _family('rho_{0} antipode (id x S)'.format(color), antipode_right),
        _family('rho_{0} counit'.format(color), counit_rows),
    ]


def qgroup_suite() -> List[EquationResult]:
    """Relations on each representation and on their tensor products, plus the Hopf axioms."""
    variables = table()
    first = variables.gen('{0}1'.format(config.PREFIX_Z))
    second = variables.gen('{0}2'.format(config.PREFIX_Z))
    results = []
    for color in config.COLORS:
        results.extend(check_algebra_relations(rep(color, first), 'rho_{0}'.format(color)))
        results.extend(check_hopf(color))
    for left, right in (('g', 'r'), ('r', 'b')):
        images = tensor_rep(rep(left, first), rep(right, second))
        results.extend(check_algebra_relations(images, 'rho_{0} x rho_{1}'.format(left, right), size=9))
    return results


def rbar(pair: str, ratio: RationalFunction) -> SymbolicMatrix:
    """R-bar_pair(ratio): the R-matrix reparametrized to commute with the coproduct."""
    q = table().gen(config.SYMBOL_Q)
    if pair in {'br', 'rb'} or pair in SINGLE_PAIRS:
        return build(pair, 1 / ratio)
    if pair in {'bg', 'rg'}:
        return build(pair, q ** 4 / ratio)
    if pair in {'gb', 'gr'}:
        return build(pair, 1 / (q ** 4 * ratio))
    raise SegreError(config.ERROR_COLOR_PAIR.format(pair=pair))


def _intertwiner(pair: str, asserted: bool = True) -> List[EquationResult]:
    """R-bar_ij(z2/z1) (rho_i^{z1} x rho_j^{z2})(Delta x) = (rho_j^{z2} x rho_i^{z1})(Delta x) R-bar_ij(z2/z1)."""
    variables = table()
    first_z = variables.gen('{0}1'.format(config.PREFIX_Z))
    second_z = variables.gen('{0}2'.format(config.PREFIX_Z))
    first_color, second_color = pair
    matrix = rbar(pair, second_z / first_z)
    first = rep(first_color, first_z)
    second = rep(second_color, second_z)
    return [
        matrix_check(
            'intertwiner {0} {1}{2}'.format(pair, *generator),
            matrix @ coproduct_image(generator, first, second),
            coproduct_image(generator, second, first) @ matrix,
            asserted=asserted,
        )
        for generator in _generators()
    ]


def check_intertwiners() -> List[EquationResult]:
    """R-bar, U and D against the coproduct, one result per (pair, generator); single-color pairs recorded."""
    variables = table()
    q = variables.gen(config.SYMBOL_Q)
    z = variables.gen(config.SYMBOL_SPECTRAL)
    results = []
    for pair in MIXED_PAIRS:
        results.extend(_intertwiner(pair))
    for pair in SINGLE_PAIRS:
        results.extend(_intertwiner(pair, asserted=False))
    green, red, blue = rep('g', q * z), rep('r', z / q), rep('b', z / q ** 2)
    up, down = u_matrix(), d_matrix()
    for generator in _generators():
        results.append(matrix_check(
            'intertwiner U {0}{1}'.format(*generator),
            up @ coproduct_image(generator, green, red),
            blue[generator] @ up,
        ))
    for generator in _generators():
        results.append(matrix_check(
            'intertwiner D {0}{1}'.format(*generator),
            down @ blue[generator],
            coproduct_image(generator, red, green) @ down,
        ))
    return results
