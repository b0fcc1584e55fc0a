"""Exact rational functions over the integers and dense symbolic matrices."""
import random
from functools import lru_cache
from tokenize import TokenError
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from sympy import Symbol
from sympy.parsing.sympy_parser import parse_expr
from sympy.polys.domains import QQ, ZZ
from sympy.polys.fields import FracElement, field
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement

from segre_puzzles import config

RationalFunction = FracElement
Polynomial = PolyElement


class SegreError(Exception):
    """Base error of the package."""


class SubstitutionError(SegreError):
    """A substitution sends a denominator to zero."""


class SingularMatrixError(SegreError):
    """Inverse of a singular matrix was requested."""


class ShapeError(SegreError):
    """Malformed shape, string or index."""


class VerificationError(SegreError):
    """An identity the API asserts did not hold."""


class VariableTable(object):
    """Ordered symbols together with the field of rational functions in them.

    Attributes:
        title (str): name used in error messages.
        names (tuple): symbol names, in term order.
        laurent (frozenset): names printed with negative exponents.
        field (FracField): sympy fraction field over ZZ in grlex order.
    """

    def __init__(self, title: str, names: Sequence[str], laurent: Iterable[str] = ()):
        seen = set()
        for name in names:
            if name in seen:
                raise SegreError(config.ERROR_DUPLICATE_SYMBOL.format(symbol=name))
            seen.add(name)
        self.title = title
        self.names = tuple(names)
        self.laurent = frozenset(laurent)
        self.field, *generators = field(','.join(self.names), ZZ, grlex)
        self.ring = self.field.ring
        self._gens = dict(zip(self.names, generators))
        self._index = {name: position for position, name in enumerate(self.names)}

    def __contains__(self, name: str) -> bool:
        return name in self._gens

    def __repr__(self) -> str:
        return 'VariableTable({0})'.format(self.title)

    def gen(self, name: str) -> RationalFunction:
        """Return the generator called name.

        Args:
            name (str): symbol name.

        Raises:
            SegreError: the symbol is not in the table.

        Returns:
            RationalFunction: the generator.
        """
        try:
            return self._gens[name]
        except KeyError:
            raise SegreError(config.ERROR_UNKNOWN_SYMBOL.format(symbol=name, table=self.title))

    def index(self, name: str) -> int:
        return self._index[name]

    def const(self, value: int) -> RationalFunction:
        return self.field(value)

    @property
    def one(self) -> RationalFunction:
        return self.field.one

    @property
    def zero(self) -> RationalFunction:
        return self.field.zero


@lru_cache(maxsize=None)
def kpicture(n: int) -> VariableTable:
    """Variables of the K-picture: b, q, z1..zn, x1..xn and the placeholder z."""
    z_names = ['{0}{1}'.format(config.PREFIX_Z, i) for i in range(1, n + 1)]
    x_names = ['{0}{1}'.format(config.PREFIX_X, i) for i in range(1, n + 1)]
    names = [config.SYMBOL_BETA, config.SYMBOL_Q] + z_names + x_names + [config.SYMBOL_SPECTRAL]
    laurent = set(names)
    return VariableTable('kpicture({0})'.format(n), names, laurent)


@lru_cache(maxsize=None)
def connective(n: int) -> VariableTable:
    """Variables of the connective picture: b, xq, t1..tn and the placeholder x."""
    t_names = ['{0}{1}'.format(config.PREFIX_T, i) for i in range(1, n + 1)]
    names = [config.SYMBOL_BETA, config.SYMBOL_XQ] + t_names + [config.SYMBOL_X]
    return VariableTable('connective({0})'.format(n), names)


def q_poly(table: VariableTable) -> RationalFunction:
    """Q(b, q) = q^2 + b - q^2*b, read with q = xq in the connective table."""
    beta = table.gen(config.SYMBOL_BETA)
    q = table.gen(config.SYMBOL_Q if config.SYMBOL_Q in table else config.SYMBOL_XQ)
    return q ** 2 + beta - q ** 2 * beta


def rf_equals(left: RationalFunction, right: RationalFunction) -> bool:
    """Equality by cross-multiplication of numerators and denominators."""
    return not (left.numer * right.denom - right.numer * left.denom)


def is_zero(expr: RationalFunction) -> bool:
    return not expr.numer


def divides(divisor: Polynomial, poly: Polynomial) -> Tuple[bool, Optional[Polynomial]]:
    """Exact division test.

    Args:
        divisor (Polynomial): nonzero polynomial p.
        poly (Polynomial): polynomial f.

    Raises:
        SegreError: p is zero.

    Returns:
        tuple: (True, f/p) when p divides f, else (False, None).
    """
    if not divisor:
        raise SegreError(config.ERROR_ZERO_DIVISION)
    try:
        return True, poly.exquo(divisor)
    except ExactQuotientFailed:
        return False, None


def _normalized(target_field, numer: Polynomial, denom: Polynomial) -> RationalFunction:
    if denom.LC < 0:
        numer, denom = -numer, -denom
    return target_field.raw_new(numer, denom)


def swap_symbols(expr: RationalFunction, table: VariableTable, first: str, second: str) -> RationalFunction:
    """Exchange two symbols of one table by permuting exponent vectors."""
    i, j = table.index(first), table.index(second)

    def swapped(poly):
        terms = {}
        for monom, coeff in poly.items():
            monom = list(monom)
            monom[i], monom[j] = monom[j], monom[i]
            terms[tuple(monom)] = coeff
        return table.ring.from_dict(terms)

    return _normalized(table.field, swapped(expr.numer), swapped(expr.denom))


def _image_of_polynomial(poly: Polynomial, images: Sequence[Tuple[Polynomial, Polynomial]], ring):
    degrees = [0] * len(images)
    for monom in poly.keys():
        for position, exponent in enumerate(monom):
            degrees[position] = max(degrees[position], exponent)
    powers: Dict[Tuple[int, int, int], Polynomial] = {}

    def power(position, part, exponent):
        key = (position, part, exponent)
        if key not in powers:
            powers[key] = images[position][part] ** exponent
        return powers[key]

    numerator = ring.zero
    for monom, coeff in poly.items():
        term = ring.ground_new(coeff)
        for position, exponent in enumerate(monom):
            top = degrees[position]
            if not top:
                continue
            numer, denom = images[position]
            if exponent:
                term *= power(position, 0, exponent)
            if top - exponent and denom != ring.one:
                term *= power(position, 1, top - exponent)
        numerator += term
    denominator = ring.one
    for position, top in enumerate(degrees):
        if top and images[position][1] != ring.one:
            denominator *= power(position, 1, top)
    return numerator, denominator


def _images(bindings, source, target):
    for name in bindings:
        if name not in source:
            raise SegreError(config.ERROR_UNKNOWN_SYMBOL.format(symbol=name, table=source.title))
    images = []
    for name in source.names:
        value = bindings.get(name)
        if value is None:
            value = target.gen(name) if name in target else None
        elif not isinstance(value, FracElement):
            value = target.const(value)
        images.append(value)
    return images


def substitute(
    expr: RationalFunction,
    bindings: Mapping[str, RationalFunction],
    source: VariableTable,
    target: VariableTable = None,
) -> RationalFunction:
    """Simultaneous substitution of symbols by rational functions.

    Symbols not bound keep their name in the target table.

    Args:
        expr (RationalFunction): expression over source.
        bindings (Mapping): symbol name to value over target (ints allowed).
        source (VariableTable): table of expr.
        target (VariableTable): table of the result, defaults to source.

    Raises:
        SubstitutionError: the denominator vanishes under the bindings.
        SegreError: a symbol has no image.

    Returns:
        RationalFunction: the substituted expression.
    """
    target = target or source
    values = _images(bindings, source, target)
    used = set()
    for part in (expr.numer, expr.denom):
        for monom in part.keys():
            used.update(position for position, exponent in enumerate(monom) if exponent)
    for position in used:
        if values[position] is None:
            raise SegreError(config.ERROR_UNKNOWN_SYMBOL.format(symbol=source.names[position], table=target.title))
    ring = target.ring
    images = [
        (value.numer, value.denom) if value is not None else (ring.zero, ring.one)
        for value in values
    ]
    top_numer, top_denom = _image_of_polynomial(expr.numer, images, ring)
    bottom_numer, bottom_denom = _image_of_polynomial(expr.denom, images, ring)
    if not bottom_numer:
        raise SubstitutionError(config.ERROR_SUBSTITUTION.format(
            bindings=format_bindings(bindings, target),
            factor=_vanishing_factor(expr.denom, images, ring, source),
        ))
    return target.field.new(top_numer * bottom_denom, top_denom * bottom_numer)


def _vanishing_factor(denom: Polynomial, images, ring, source: VariableTable) -> str:
    for factor, _ in denom.factor_list()[1]:
        numerator, _ = _image_of_polynomial(factor, images, ring)
        if not numerator:
            return format_polynomial(factor, source)
    return format_polynomial(denom, source)


def format_bindings(bindings: Mapping[str, RationalFunction], table: VariableTable) -> str:
    parts = []
    for name in sorted(bindings):
        value = bindings[name]
        text = format_rational(value, table) if isinstance(value, FracElement) else str(value)
        parts.append('{0}<-{1}'.format(name, text))
    return '{' + ', '.join(parts) + '}'


def _monomial_text(monom: Sequence[int], table: VariableTable) -> str:
    factors = []
    for name, exponent in zip(table.names, monom):
        if exponent == 1:
            factors.append(name)
        elif exponent:
            factors.append('{0}^{1}'.format(name, exponent))
    return '*'.join(factors)


def _terms_text(terms: Sequence[Tuple[Tuple[int, ...], int]], table: VariableTable) -> str:
    if not terms:
        return '0'
    chunks = []
    for position, (monom, coeff) in enumerate(terms):
        mono = _monomial_text(monom, table)
        size = abs(int(coeff))
        if not mono:
            body = str(size)
        elif size == 1:
            body = mono
        else:
            body = '{0}*{1}'.format(size, mono)
        if position == 0:
            chunks.append('-' + body if coeff < 0 else body)
        else:
            chunks.append(' - ' + body if coeff < 0 else ' + ' + body)
    return ''.join(chunks)


def format_polynomial(poly: Polynomial, table: VariableTable) -> str:
    return _terms_text(poly.terms(order=grlex), table)


def format_rational(expr: RationalFunction, table: VariableTable) -> str:
    """Canonical text: grlex terms, "^" exponents, monomial denominators folded in.

    Args:
        expr (RationalFunction): expression over table.
        table (VariableTable): its table.

    Returns:
        str: e.g. "q^2*z1^-1*z2 - b" or "(num)/(den)".
    """
    numer, denom = expr.numer, expr.denom
    if not numer:
        return '0'
    shift = [0] * len(table.names)
    monoms = list(denom.keys())
    for position, name in enumerate(table.names):
        if name in table.laurent:
            shift[position] = min(monom[position] for monom in monoms)

    def shifted(poly):
        return [
            (tuple(e - s for e, s in zip(monom, shift)), coeff)
            for monom, coeff in poly.terms(order=grlex)
        ]

    top = shifted(numer)
    bottom = shifted(denom)
    if len(bottom) == 1 and not any(bottom[0][0]) and abs(bottom[0][1]) == 1:
        if bottom[0][1] < 0:
            top = [(monom, -coeff) for monom, coeff in top]
        return _terms_text(top, table)
    return '({0})/({1})'.format(_terms_text(top, table), _terms_text(bottom, table))


def parse_rational(text: str, table: VariableTable) -> RationalFunction:
    """Parse the canonical text form (or any arithmetic in the table's symbols)."""
    local = {name: Symbol(name) for name in table.names}
    try:
        expr = parse_expr(text.replace('^', '**'), local_dict=local)
    except (SyntaxError, TokenError, TypeError) as exc:
        raise SegreError(config.ERROR_PARSE.format(text=text, reason=exc)) from exc
    unknown = sorted(str(symbol) for symbol in expr.free_symbols if str(symbol) not in local)
    if unknown:
        raise SegreError(config.ERROR_UNKNOWN_SYMBOL.format(symbol=', '.join(unknown), table=table.title))
    try:
        return table.field.from_expr(expr)
    except (TypeError, ValueError) as exc:
        raise SegreError(config.ERROR_PARSE.format(text=text, reason=exc)) from exc


def random_laurent(table: VariableTable, rng: random.Random, names: Sequence[str]) -> RationalFunction:
    """Small random Laurent polynomial in the given (laurent) symbols."""
    low, high = config.RANDOM_EXPONENT_RANGE
    result = table.zero
    for _ in range(config.RANDOM_TERMS):
        coeff = 0
        while not coeff:
            coeff = rng.randint(*config.RANDOM_COEFFICIENT_RANGE)
        term = table.const(coeff)
        for name in names:
            term *= table.gen(name) ** rng.randint(low, high)
        result += term
    return result


def evaluate_at(expr: RationalFunction, point: Mapping[str, int], table: VariableTable):
    """Evaluate at an integer point; None when the denominator vanishes there."""
    numer = _evaluate_polynomial(expr.numer, point, table)
    denom = _evaluate_polynomial(expr.denom, point, table)
    if not denom:
        return None
    return QQ(int(numer), int(denom))


def _evaluate_polynomial(poly: Polynomial, point: Mapping[str, int], table: VariableTable) -> int:
    values = [point.get(name, 0) for name in table.names]
    total = 0
    for monom, coeff in poly.items():
        term = int(coeff)
        for value, exponent in zip(values, monom):
            if exponent:
                term *= value ** exponent
        total += term
    return total


def random_point(table: VariableTable, rng: random.Random) -> Dict[str, int]:
    return {name: rng.randint(*config.RANDOM_POINT_RANGE) for name in table.names}


class SymbolicMatrix(object):
    """Dense matrix of rational functions over one table.

    Attributes:
        table (VariableTable): table of the entries.
        rows (tuple): row tuples of RationalFunction.
    """

    def __init__(self, table: VariableTable, rows: Sequence[Sequence[RationalFunction]]):
        self.table = table
        self.rows = tuple(tuple(row) for row in rows)
        self.shape = (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __repr__(self) -> str:
        return 'SymbolicMatrix({0}x{1})'.format(*self.shape)

    @classmethod
    def zeros(cls, table: VariableTable, nrows: int, ncols: int) -> 'SymbolicMatrix':
        return cls(table, [[table.zero] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, table: VariableTable, size: int) -> 'SymbolicMatrix':
        return cls(table, [
            [table.one if i == j else table.zero for j in range(size)] for i in range(size)
        ])

    @classmethod
    def from_entries(cls, table: VariableTable, nrows: int, ncols: int, entries: Mapping) -> 'SymbolicMatrix':
        """Build from a sparse map (row, col) -> value; ints are lifted into the field."""
        rows = [[table.zero] * ncols for _ in range(nrows)]
        for (i, j), value in entries.items():
            rows[i][j] = value if isinstance(value, FracElement) else table.const(value)
        return cls(table, rows)

    def entry(self, i: int, j: int) -> RationalFunction:
        return self.rows[i][j]

    def _check(self, other, operation, same=True):
        if same and self.shape != other.shape or not same and self.shape[1] != other.shape[0]:
            raise SegreError(config.ERROR_MATRIX_SHAPE.format(
                left=self.shape, right=other.shape, operation=operation,
            ))

    def __add__(self, other: 'SymbolicMatrix') -> 'SymbolicMatrix':
        self._check(other, 'add')
        return SymbolicMatrix(self.table, [
            [a + b for a, b in zip(left, right)] for left, right in zip(self.rows, other.rows)
        ])

    def __sub__(self, other: 'SymbolicMatrix') -> 'SymbolicMatrix':
        self._check(other, 'sub')
        return SymbolicMatrix(self.table, [
            [a - b for a, b in zip(left, right)] for left, right in zip(self.rows, other.rows)
        ])

    def __neg__(self) -> 'SymbolicMatrix':
        return self.scale(-self.table.one)

    def scale(self, factor) -> 'SymbolicMatrix':
        return SymbolicMatrix(self.table, [[factor * a for a in row] for row in self.rows])

    def __matmul__(self, other: 'SymbolicMatrix') -> 'SymbolicMatrix':
        self._check(other, 'multiply', same=False)
        zero = self.table.zero
        columns = list(zip(*other.rows))
        result = []
        for row in self.rows:
            support = [(k, a) for k, a in enumerate(row) if a]
            line = []
            for column in columns:
                total = zero
                for k, a in support:
                    b = column[k]
                    if b:
                        total += a * b
                line.append(total)
            result.append(line)
        return SymbolicMatrix(self.table, result)

    def kron(self, other: 'SymbolicMatrix') -> 'SymbolicMatrix':
        """Kronecker product, self as the first tensor slot."""
        nrows, ncols = other.shape
        zero = self.table.zero
        result = [[zero] * (self.shape[1] * ncols) for _ in range(self.shape[0] * nrows)]
        for i, row in enumerate(self.rows):
            for j, a in enumerate(row):
                if not a:
                    continue
                for k, other_row in enumerate(other.rows):
                    for m, b in enumerate(other_row):
                        if b:
                            result[i * nrows + k][j * ncols + m] = a * b
        return SymbolicMatrix(self.table, result)

    def transpose(self) -> 'SymbolicMatrix':
        return SymbolicMatrix(self.table, list(zip(*self.rows)))

    def substitute(self, bindings: Mapping, target: VariableTable = None) -> 'SymbolicMatrix':
        target = target or self.table
        return SymbolicMatrix(target, [
            [substitute(a, bindings, self.table, target) if a else target.zero for a in row]
            for row in self.rows
        ])

    def _domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([list(row) for row in self.rows], self.shape, self.table.field.to_domain())

    def inverse(self) -> 'SymbolicMatrix':
        """Inverse over the fraction field.

        Raises:
            SingularMatrixError: determinant is zero.

        Returns:
            SymbolicMatrix: the inverse.
        """
        if self.shape[0] != self.shape[1]:
            raise SegreError(config.ERROR_MATRIX_SHAPE.format(
                left=self.shape, right=self.shape, operation='inverse',
            ))
        try:
            inverse = self._domain_matrix().inv()
        except (DMNonInvertibleMatrixError, ZeroDivisionError):
            raise SingularMatrixError(config.ERROR_SINGULAR.format(size=self.shape[0]))
        size = self.shape[0]
        return SymbolicMatrix(self.table, [
            [inverse[i, j].element for j in range(size)] for i in range(size)
        ])

    def det(self) -> RationalFunction:
        return self._domain_matrix().det()

    def rank(self) -> int:
        return self._domain_matrix().rank()

    def first_difference(
        self, other: 'SymbolicMatrix',
    ) -> Optional[Tuple[int, int, RationalFunction, RationalFunction]]:
        """First (row, col, mine, theirs) where the entries differ, or None."""
        self._check(other, 'compare')
        for i, (left, right) in enumerate(zip(self.rows, other.rows)):
            for j, (a, b) in enumerate(zip(left, right)):
                if not rf_equals(a, b):
                    return i, j, a, b
        return None

    def equals(self, other: 'SymbolicMatrix') -> bool:
        return self.first_difference(other) is None

    def is_identity(self) -> bool:
        return self.equals(SymbolicMatrix.identity(self.table, self.shape[0]))

    def nonzero_entries(self) -> Iterable[Tuple[int, int]]:
        for i, row in enumerate(self.rows):
            for j, a in enumerate(row):
                if a:
                    yield i, j
