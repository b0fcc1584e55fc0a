"""Knutson-Tao puzzles with position-dependent fugacities."""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from segre_puzzles import config
from segre_puzzles.classes import build_basis, structure_constants
from segre_puzzles.reports import EquationResult, check
from segre_puzzles.symcore import (
    RationalFunction,
    SegreError,
    VariableTable,
    VerificationError,
    connective,
    format_rational,
    kpicture,
    q_poly,
    rf_equals,
    substitute,
)
from segre_puzzles.weyl import ThetaShape, all_strings, check_string, grassmannian

ZERO, ONE, TEN = config.LABEL_ZERO, config.LABEL_ONE, config.LABEL_TEN

Key = Tuple[Tuple[str, str], Tuple[str, str]]

## ((SW, SE), (NW, NE)) -> fugacity name
RHOMBI: Dict[Key, str] = {
    ((ZERO, ZERO), (ZERO, ZERO)): 'unit',
    ((ONE, ONE), (ONE, ONE)): 'unit',
    ((ZERO, ONE), (ONE, ZERO)): 'unit',
    ((ONE, TEN), (TEN, ONE)): 'unit',
    ((TEN, ZERO), (ZERO, TEN)): 'unit',
    ((TEN, TEN), (TEN, TEN)): 'big_q',
    ((ONE, TEN), (ZERO, ZERO)): 'beta',
    ((TEN, ZERO), (ONE, ONE)): 'beta',
    ((ONE, ZERO), (ZERO, ONE)): 'cross',
    ((ONE, ONE), (ZERO, TEN)): 'beta_z',
    ((ZERO, ZERO), (TEN, ONE)): 'beta_z',
    ((TEN, TEN), (ONE, ZERO)): 'merge',
    ((ZERO, TEN), (TEN, ZERO)): 'cross_q',
    ((TEN, ONE), (ONE, TEN)): 'cross_q',
    ((ZERO, ONE), (TEN, TEN)): 'split',
}

## (left, bottom, right)
UP_TRIANGLES = {
    (ZERO, ZERO, ZERO): 'unit',
    (ONE, ONE, ONE): 'unit',
    (ZERO, ONE, TEN): 'unit',
    (TEN, ZERO, ONE): 'unit',
    (ONE, TEN, ZERO): 'unit',
    (TEN, TEN, TEN): 'minus_big_q_over_q',
}
DOWN_TRIANGLES = {
    (ZERO, ZERO, ZERO): 'unit',
    (ONE, ONE, ONE): 'unit',
    (ZERO, ONE, TEN): 'unit',
    (TEN, ZERO, ONE): 'unit',
    (ONE, TEN, ZERO): 'unit',
    (TEN, TEN, TEN): 'minus_q',
}
## triangles that tile puzzles
PUZZLE_TRIANGLES = {
    (ZERO, ZERO): ZERO,
    (ONE, ONE): ONE,
    (ZERO, TEN): ONE,
    (TEN, ONE): ZERO,
}

CERTIFICATES = {
    'unit': [],
    'big_q': ['Q'],
    'beta': ['P'],
    'cross': ['minus_q', 'N'],
    'beta_z': ['e', 'P'],
    'merge': ['minus_q', 'P'],
    'cross_q': ['minus_q', 'Q', 'N'],
    'split': ['minus_q_inverse', 'Q', 'e', 'P'],
}


def _k_values(table: VariableTable) -> Dict[str, RationalFunction]:
    beta = table.gen(config.SYMBOL_BETA)
    q = table.gen(config.SYMBOL_Q)
    z = table.gen(config.SYMBOL_SPECTRAL)
    big_q = q_poly(table)
    denominator = big_q - q ** 2 * z
    return {
        'unit': table.one,
        'big_q': big_q,
        'beta': beta * (1 - q ** 2) / denominator,
        'cross': q * (1 - z) / denominator,
        'beta_z': beta * (1 - q ** 2) * z / denominator,
        'merge': beta * q * (q ** 2 - 1) / denominator,
        'cross_q': q * big_q * (1 - z) / denominator,
        'split': beta * big_q * (q ** 2 - 1) * z / (q * denominator),
        'minus_q': -q,
        'minus_big_q_over_q': -big_q / q,
        'minus_q_inverse': -1 / q,
        'Q': big_q,
        'e': z,
        'P': beta * (1 - q ** 2) / denominator,
        'N': -(1 - z) / denominator,
    }


@dataclass(frozen=True)
class PieceCatalog:
    """Fugacity templates of one picture.

    Attributes:
        picture (str): 'k' or 'connective'.
        table (VariableTable): table of the templates.
        placeholder (str): the position symbol (z, or x in the connective picture).
        values (dict): fugacity or generator name -> template.
    """

    picture: str
    table: VariableTable
    placeholder: str
    values: Dict[str, RationalFunction]

    def rhombus(self, key: Key) -> RationalFunction:
        return self.values[RHOMBI[key]]

    def up_triangle(self, labels: Tuple[str, str, str]) -> RationalFunction:
        return self.values[UP_TRIANGLES[labels]]

    def down_triangle(self, labels: Tuple[str, str, str]) -> RationalFunction:
        return self.values[DOWN_TRIANGLES[labels]]


@lru_cache(maxsize=None)
def catalog(picture: str, n: int) -> PieceCatalog:
    """K-picture templates, or their connective images under z <- 1 - b*x, q <- xq."""
    k_table = kpicture(n)
    values = _k_values(k_table)
    if picture == config.PICTURE_K:
        return PieceCatalog(picture, k_table, config.SYMBOL_SPECTRAL, values)
    table = connective(n)
    beta = table.gen(config.SYMBOL_BETA)
    bindings = {
        config.SYMBOL_SPECTRAL: 1 - beta * table.gen(config.SYMBOL_X),
        config.SYMBOL_Q: table.gen(config.SYMBOL_XQ),
    }
    return PieceCatalog(picture, table, config.SYMBOL_X, {
        name: substitute(value, bindings, k_table, table) for name, value in values.items()
    })


def position_value(picture: str, n: int, a: int, b: int) -> RationalFunction:
    """Position parameter of rhombus (a, b): z_B/z_A, or x_{y_B - y_A}, with A = b+1, B = n-a."""
    low, high = b + 1, n - a
    if picture == config.PICTURE_K:
        table = kpicture(n)
        return table.gen('{0}{1}'.format(config.PREFIX_Z, high)) / table.gen('{0}{1}'.format(config.PREFIX_Z, low))
    table = connective(n)
    beta = table.gen(config.SYMBOL_BETA)
    t_low = table.gen('{0}{1}'.format(config.PREFIX_T, low))
    t_high = table.gen('{0}{1}'.format(config.PREFIX_T, high))
    return (t_high - t_low) / (1 - beta * t_low)


@lru_cache(maxsize=None)
def placed(picture: str, n: int, a: int, b: int, name: str) -> RationalFunction:
    """A catalog value with its placeholder set to the position of rhombus (a, b)."""
    pieces = catalog(picture, n)
    return substitute(pieces.values[name], {pieces.placeholder: position_value(picture, n, a, b)}, pieces.table)


@dataclass(frozen=True)
class PuzzleFilling:
    """A filled puzzle of size n.

    X[a][b] is the edge (a,b)->(a+1,b) and Y[a][b] the edge (a,b)->(a,b+1), a+b <= n-1.
    Rhombus (a, b), a+b <= n-2, has NW=X[a][b], NE=Y[a][b], SW=Y[a+1][b], SE=X[a][b+1];
    up-triangle a has left X[a][n-1-a], right Y[a][n-1-a] and bottom nu_{n-a}.

    Attributes:
        lam (str): NW side.
        mu (str): NE side.
        nu (str): bottom side.
        x_edges (tuple): rows X[a].
        y_edges (tuple): rows Y[a].
    """

    lam: str
    mu: str
    nu: str
    x_edges: Tuple[Tuple[str, ...], ...]
    y_edges: Tuple[Tuple[str, ...], ...]

    @property
    def n(self) -> int:
        return len(self.lam)

    def rhombi(self) -> List[Tuple[int, int, Key]]:
        tiles = []
        for a in range(self.n - 1):
            for b in range(self.n - 1 - a):
                key = (
                    (self.y_edges[a + 1][b], self.x_edges[a][b + 1]),
                    (self.x_edges[a][b], self.y_edges[a][b]),
                )
                tiles.append((a, b, key))
        return tiles

    def triangles(self) -> List[Tuple[int, Tuple[str, str, str]]]:
        n = self.n
        return [
            (a, (self.x_edges[a][n - 1 - a], self.nu[n - 1 - a], self.y_edges[a][n - 1 - a]))
            for a in range(n)
        ]


def _boundary(string: str) -> List[str]:
    return [ONE if letter == '1' else ZERO for letter in string]


def enumerate_puzzles(lam: str, mu: str, nu: str) -> List[PuzzleFilling]:
    """All fillings with the given sides, by depth-first search over the rhombi.

    Args:
        lam (str): NW side.
        mu (str): NE side.
        nu (str): bottom side.

    Returns:
        list: fillings in the order of the fixed edge scan.
    """
    n = len(lam)
    if n > config.MAX_PUZZLE_SIZE:
        logging.warning(config.WARNING_PUZZLE_SIZE.format(size=n, limit=config.MAX_PUZZLE_SIZE))
    lam_labels, mu_labels, nu_labels = _boundary(lam), _boundary(mu), _boundary(nu)
    x_edges = [[None] * (n - a) for a in range(n)]
    y_edges = [[None] * (n - a) for a in range(n)]
    for a in range(n):
        x_edges[a][0] = lam_labels[n - 1 - a]
    for b in range(n):
        y_edges[0][b] = mu_labels[b]
    outputs: Dict[Tuple[str, str], List[Tuple[str, str]]] = {}
    for (outgoing, incoming) in sorted(RHOMBI):
        outputs.setdefault(incoming, []).append(outgoing)
    steps = []
    for a in range(n):
        steps.extend(('rhombus', a, b) for b in range(n - 1 - a))
        steps.append(('triangle', a, n - 1 - a))
    found = []

    def search(position):
        if position == len(steps):
            found.append(PuzzleFilling(
                lam, mu, nu,
                tuple(tuple(row) for row in x_edges),
                tuple(tuple(row) for row in y_edges),
            ))
            return
        kind, a, b = steps[position]
        if kind == 'triangle':
            bottom = PUZZLE_TRIANGLES.get((x_edges[a][b], y_edges[a][b]))
            if bottom == nu_labels[n - 1 - a]:
                search(position + 1)
            return
        for southwest, southeast in outputs.get((x_edges[a][b], y_edges[a][b]), []):
            y_edges[a + 1][b] = southwest
            x_edges[a][b + 1] = southeast
            search(position + 1)
        y_edges[a + 1][b] = None
        x_edges[a][b + 1] = None

    search(0)
    logging.info(config.MESSAGE_PUZZLES.format(lam, mu, nu, len(found)))
    return found


def fugacity(puzzle: PuzzleFilling, picture: str = config.PICTURE_K) -> RationalFunction:
    """Product of the placed rhombus fugacities; triangles in puzzles weigh 1."""
    pieces = catalog(picture, puzzle.n)
    value = pieces.table.one
    for a, b, key in puzzle.rhombi():
        name = RHOMBI[key]
        if name != 'unit':
            value *= placed(picture, puzzle.n, a, b, name)
    return value


def puzzle_constant(lam: str, mu: str, nu: str, picture: str = config.PICTURE_K) -> RationalFunction:
    """Sum of fugacities over all puzzles with the given sides."""
    pieces = catalog(picture, len(lam))
    total = pieces.table.zero
    for puzzle in enumerate_puzzles(lam, mu, nu):
        total += fugacity(puzzle, picture)
    return total


def puzzle_constants(
    shape: ThetaShape, lam: str, mu: str, picture: str = config.PICTURE_K,
) -> Dict[str, RationalFunction]:
    check_string(lam, shape)
    check_string(mu, shape)
    return {nu: puzzle_constant(lam, mu, nu, picture) for nu in all_strings(shape)}


def positivity_certificate(puzzle: PuzzleFilling, picture: str = config.PICTURE_K) -> List[Tuple[int, int, List[str]]]:
    """Per rhombus, the generator names whose product is its placed fugacity.

    Args:
        puzzle (PuzzleFilling): a valid filling.
        picture (str): 'k' or 'connective'.

    Raises:
        VerificationError: a rewriting does not reproduce the fugacity.

    Returns:
        list: (a, b, generator names) per rhombus.
    """
    pieces = catalog(picture, puzzle.n)
    certificate = []
    for a, b, key in puzzle.rhombi():
        names = CERTIFICATES[RHOMBI[key]]
        product = pieces.table.one
        for name in names:
            product *= placed(picture, puzzle.n, a, b, name)
        if not rf_equals(product, placed(picture, puzzle.n, a, b, RHOMBI[key])):
            raise VerificationError(config.ERROR_CERTIFICATE.format(piece=key))
        certificate.append((a, b, list(names)))
    return certificate


def verify_catalog_certificates(picture: str) -> List[EquationResult]:
    """Each rhombus template equals the product of its generators."""
    pieces = catalog(picture, 1)
    results = []
    for key, name in RHOMBI.items():
        product = pieces.table.one
        for generator in CERTIFICATES[name]:
            product *= pieces.values[generator]
        results.append(check(
            '{0} certificate {1}'.format(picture, render_key(key)),
            rf_equals(product, pieces.values[name]),
        ))
    return results


def verify_connective_entries() -> List[EquationResult]:
    """Connective rhombi and the Q triangle against their closed forms in x and xq.

    Every piece shares d = 1 - xq^2 (1 - x). The split piece is also printed with
    (1 - xq^2)(1 - x) in place of d; that form is recorded, not asserted.
    """
    pieces = catalog(config.PICTURE_CONNECTIVE, 1)
    beta = pieces.table.gen(config.SYMBOL_BETA)
    x = pieces.table.gen(config.SYMBOL_X)
    xq = pieces.table.gen(config.SYMBOL_XQ)
    big_q = xq ** 2 + beta - xq ** 2 * beta
    denominator = 1 - xq ** 2 * (1 - x)
    closed_forms = {
        'big_q': big_q,
        'beta': (1 - xq ** 2) / denominator,
        'cross': xq * x / denominator,
        'beta_z': (1 - xq ** 2) * (1 - beta * x) / denominator,
        'merge': xq * (xq ** 2 - 1) / denominator,
        'cross_q': xq * big_q * x / denominator,
        'split': big_q * (xq ** 2 - 1) * (1 - beta * x) / (xq * denominator),
        'minus_big_q_over_q': -big_q / xq,
    }
    results = []
    for name, expected in closed_forms.items():
        keys = ' '.join(render_key(key) for key, piece in RHOMBI.items() if piece == name)
        results.append(check(
            'connective {0} {1}'.format(name, keys or 'up triangle 10,10,10'),
            rf_equals(pieces.values[name], expected),
            format_rational(pieces.values[name], pieces.table),
        ))
    printed = big_q * (xq ** 2 - 1) * (1 - beta * x) / (xq * (1 - xq ** 2) * (1 - x))
    results.append(check(
        'connective split as printed',
        rf_equals(pieces.values['split'], printed),
        'denominator xq (1 - xq^2)(1 - x) against xq (1 - xq^2 (1 - x))',
        asserted=False,
    ))
    return results


def render_key(key: Key) -> str:
    (southwest, southeast), (northwest, northeast) = key
    return 'f_{{{0},{1}}}^{{{2},{3}}}'.format(southwest, southeast, northwest, northeast)


def render(puzzle: PuzzleFilling) -> str:
    """Text diagram: one line of X labels and one of Y labels per row a."""
    lines = []
    for a in range(puzzle.n):
        lines.append('X{0}: {1}'.format(a, ' '.join(puzzle.x_edges[a])))
        lines.append('Y{0}: {1}'.format(a, ' '.join(puzzle.y_edges[a])))
    return '\n'.join(lines)


def parse(text: str) -> PuzzleFilling:
    """Inverse of render; the sides are read back from the boundary edges.

    Raises:
        SegreError: malformed diagram or an invalid bottom triangle.
    """
    rows = {}
    for line in text.strip().splitlines():
        head, _, body = line.partition(':')
        if not head or head[0] not in 'XY':
            raise SegreError(config.ERROR_PARSE_PUZZLE.format(reason=line))
        rows[head.strip()] = tuple(body.split())
    n = len(rows) // 2
    try:
        x_edges = tuple(rows['X{0}'.format(a)] for a in range(n))
        y_edges = tuple(rows['Y{0}'.format(a)] for a in range(n))
    except KeyError as exc:
        raise SegreError(config.ERROR_PARSE_PUZZLE.format(reason=exc))
    lam = ''.join(x_edges[n - 1 - i][0] for i in range(n))
    mu = ''.join(y_edges[0])
    bottoms = []
    for i in range(n):
        a = n - 1 - i
        bottom = PUZZLE_TRIANGLES.get((x_edges[a][n - 1 - a], y_edges[a][n - 1 - a]))
        if bottom is None:
            raise SegreError(config.ERROR_PARSE_PUZZLE.format(reason='triangle {0}'.format(a)))
        bottoms.append(bottom)
    return PuzzleFilling(lam, mu, ''.join(bottoms), x_edges, y_edges)


def oracle_suite(n: int) -> List[EquationResult]:
    """Puzzle sums against the triangular solve for every Gr(k, n)."""
    results = []
    for k in range(n + 1):
        shape = grassmannian(k, n)
        basis = build_basis(shape)
        table = kpicture(n)
        strings = all_strings(shape)
        for lam in strings:
            for mu in strings:
                solved = structure_constants(lam, mu, basis)
                for nu in strings:
                    by_puzzles = puzzle_constant(lam, mu, nu)
                    same = rf_equals(by_puzzles, solved[nu])
                    detail = '' if same else '{0} != {1}'.format(
                        format_rational(by_puzzles, table), format_rational(solved[nu], table),
                    )
                    results.append(check('oracle {0}*{1}->{2}'.format(lam, mu, nu), same, detail))
    return results


def positivity_suite(n: int) -> List[EquationResult]:
    """Catalog rewritings in both pictures, then a certificate for every puzzle of size n."""
    results = verify_catalog_certificates(config.PICTURE_K)
    results.extend(verify_catalog_certificates(config.PICTURE_CONNECTIVE))
    results.extend(verify_connective_entries())
    for k in range(n + 1):
        strings = all_strings(grassmannian(k, n))
        for lam in strings:
            for mu in strings:
                for nu in strings:
                    try:
                        for puzzle in enumerate_puzzles(lam, mu, nu):
                            positivity_certificate(puzzle)
                    except VerificationError as exc:
                        results.append(check('certificates {0}*{1}->{2}'.format(lam, mu, nu), False, str(exc)))
                        continue
                    results.append(check('certificates {0}*{1}->{2}'.format(lam, mu, nu), True))
    return results


def beta_one_table() -> Dict[str, RationalFunction]:
    """K-picture rhombus templates at b = 1."""
    pieces = catalog(config.PICTURE_K, 1)
    return {
        name: substitute(pieces.values[name], {config.SYMBOL_BETA: 1}, pieces.table)
        for name in set(RHOMBI.values())
    }
