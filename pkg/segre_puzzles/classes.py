"""Deformed motivic Segre classes in the K-picture, by fixed-point restrictions."""
import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Mapping, Tuple

from segre_puzzles import config
from segre_puzzles.reports import EquationResult, check
from segre_puzzles.symcore import (
    RationalFunction,
    VariableTable,
    VerificationError,
    format_rational,
    kpicture,
    q_poly,
    random_laurent,
    rf_equals,
    substitute,
)
from segre_puzzles.weyl import (
    SMALLEST,
    ThetaShape,
    all_strings,
    apply_r,
    bruhat_leq,
    descent_path,
    length,
    longest_string,
    positive_roots,
    swap_variables,
)


@dataclass(frozen=True)
class FixedPointClass:
    """A class given by its restrictions to the fixed points of W^Theta.

    Attributes:
        shape (ThetaShape): the shape.
        table (VariableTable): table of the restrictions.
        restrictions (dict): string -> RationalFunction, keyed by all of W^Theta.
    """

    shape: ThetaShape
    table: VariableTable
    restrictions: Dict[str, RationalFunction]

    def __getitem__(self, string: str) -> RationalFunction:
        return self.restrictions[string]

    def map(self, function) -> 'FixedPointClass':
        return FixedPointClass(self.shape, self.table, {
            string: function(value) for string, value in self.restrictions.items()
        })

    def scale(self, factor: RationalFunction) -> 'FixedPointClass':
        return self.map(lambda value: factor * value)

    def __add__(self, other: 'FixedPointClass') -> 'FixedPointClass':
        return FixedPointClass(self.shape, self.table, {
            string: value + other.restrictions[string] for string, value in self.restrictions.items()
        })

    def __sub__(self, other: 'FixedPointClass') -> 'FixedPointClass':
        return self + other.scale(-self.table.one)

    def is_zero(self) -> bool:
        return not any(value for value in self.restrictions.values())

    def equals(self, other: 'FixedPointClass') -> bool:
        return all(
            rf_equals(value, other.restrictions[string]) for string, value in self.restrictions.items()
        )

    def as_dict(self) -> dict:
        return {string: format_rational(value, self.table) for string, value in self.restrictions.items()}


def _z(table: VariableTable, i: int) -> RationalFunction:
    return table.gen('{0}{1}'.format(config.PREFIX_Z, i))


def exp_minus_root(table: VariableTable, root: Tuple[int, int]) -> RationalFunction:
    """e^{-(y_i - y_j)} = z_j / z_i."""
    i, j = root
    return _z(table, j) / _z(table, i)


@lru_cache(maxsize=None)
def _partial_coefficients(n: int, i: int, inverse: bool) -> Tuple[RationalFunction, RationalFunction]:
    table = kpicture(n)
    beta = table.gen(config.SYMBOL_BETA)
    q = table.gen(config.SYMBOL_Q)
    big_q = q_poly(table)
    up = _z(table, i) / _z(table, i + 1)
    swap_part = (big_q - q ** 2 * up) / (1 - up)
    if not inverse:
        return beta * (1 - q ** 2) / (1 - 1 / up), swap_part
    norm = 1 / (q ** 2 * big_q)
    return norm * beta * (q ** 2 - 1) / (1 - up), norm * swap_part


def pointwise_operator(
    i: int,
    cls: FixedPointClass,
    local: RationalFunction,
    swapped: RationalFunction,
    prefix: str = config.PREFIX_Z,
) -> FixedPointClass:
    """(D F)|_s = local * F|_s + swapped * r_i(F|_{r_i s}), r_i exchanging prefix_i and prefix_{i+1}.

    Raises:
        VerificationError: i is not in 1..n-1.
    """
    n = cls.shape.n
    if not 1 <= i < n:
        raise VerificationError(config.ERROR_INDEX.format(index=i, limit=n - 1))
    restrictions = {}
    for string, value in cls.restrictions.items():
        partner = cls.restrictions[apply_r(i, string)]
        total = local * value if value else cls.table.zero
        if partner:
            total += swapped * swap_variables(partner, cls.table, i, prefix)
        restrictions[string] = total
    return FixedPointClass(cls.shape, cls.table, restrictions)


def _demazure(i: int, cls: FixedPointClass, inverse: bool) -> FixedPointClass:
    if not 1 <= i < cls.shape.n:
        raise VerificationError(config.ERROR_INDEX.format(index=i, limit=cls.shape.n - 1))
    local, swapped = _partial_coefficients(cls.shape.n, i, inverse)
    return pointwise_operator(i, cls, local, swapped)


def apply_partial(i: int, cls: FixedPointClass) -> FixedPointClass:
    """The operator b(1-q^2)delta_i + q^2 r_i, unfolded pointwise."""
    return _demazure(i, cls, inverse=False)


def apply_inverse_partial(i: int, cls: FixedPointClass) -> FixedPointClass:
    """The inverse of apply_partial."""
    return _demazure(i, cls, inverse=True)


def supported_at_top(shape: ThetaShape, table: VariableTable, value: RationalFunction) -> FixedPointClass:
    """The class equal to value at w0 and zero elsewhere."""
    w0 = longest_string(shape)
    return FixedPointClass(shape, table, {
        string: value if string == w0 else table.zero for string in all_strings(shape)
    })


def s_w0(shape: ThetaShape) -> FixedPointClass:
    """S_{w0}: supported at w0 with the product over positive roots."""
    table = kpicture(shape.n)
    q = table.gen(config.SYMBOL_Q)
    big_q = q_poly(table)
    top = table.one
    for root in positive_roots(shape):
        weight = exp_minus_root(table, root)
        top *= (1 - weight) / (big_q - q ** 2 * weight)
    return supported_at_top(shape, table, top)


def diagonal_entry(string: str, table: VariableTable) -> RationalFunction:
    """Homogenized diagonal restriction prod_{i<j, l_i > l_j} q(1-z_j/z_i)/(Q-q^2 z_j/z_i)."""
    q = table.gen(config.SYMBOL_Q)
    big_q = q_poly(table)
    value = table.one
    for i, left in enumerate(string):
        for j in range(i + 1, len(string)):
            if left > string[j]:
                weight = exp_minus_root(table, (i + 1, j + 1))
                value *= q * (1 - weight) / (big_q - q ** 2 * weight)
    return value


def _check_triangular(string: str, cls: FixedPointClass) -> None:
    for point, value in cls.restrictions.items():
        if value and not bruhat_leq(string, point):
            raise VerificationError(config.ERROR_TRIANGULAR.format(string=string, point=point))


def descend(top: FixedPointClass, step, rule: str = SMALLEST) -> Dict[str, FixedPointClass]:
    """Every class of the shape reached from the w0 class by step(i, cls) along descent paths.

    Args:
        top (FixedPointClass): the class at w0.
        step (callable): (i, cls) -> cls, the operator moving from lambda to r_i lambda.
        rule (str): descent rule, see weyl.descent_path.

    Returns:
        dict: string -> class, in linear-extension order.
    """
    shape = top.shape
    computed = {longest_string(shape): top}
    for string in all_strings(shape):
        current = longest_string(shape)
        for index in descent_path(string, rule):
            following = apply_r(index, current)
            if following not in computed:
                computed[following] = step(index, computed[current])
            current = following
    return {string: computed[string] for string in all_strings(shape)}


@lru_cache(maxsize=None)
def build_basis(shape: ThetaShape, rule: str = SMALLEST) -> Dict[str, FixedPointClass]:
    """Homogenized basis q^{l(lambda)} S_lambda, walking down from w0.

    Args:
        shape (ThetaShape): the shape.
        rule (str): descent rule, see weyl.descent_path.

    Returns:
        dict: string -> homogenized class, in linear-extension order.
    """
    table = kpicture(shape.n)
    q = table.gen(config.SYMBOL_Q)
    w0 = longest_string(shape)
    basis = descend(
        s_w0(shape).scale(q ** length(w0)),
        lambda index, cls: apply_partial(index, cls).scale(1 / q),
        rule,
    )
    for string, cls in basis.items():
        _check_triangular(string, cls)
    logging.info(config.MESSAGE_BASIS.format(shape=shape, count=len(basis)))
    return basis


def unhomogenized(basis: Mapping[str, FixedPointClass]) -> Dict[str, FixedPointClass]:
    """S_lambda from q^{l(lambda)} S_lambda."""
    result = {}
    for string, cls in basis.items():
        q = cls.table.gen(config.SYMBOL_Q)
        result[string] = cls.scale(1 / q ** length(string))
    return result


def structure_constants(
    left: str,
    right: str,
    basis: Mapping[str, FixedPointClass],
) -> Dict[str, RationalFunction]:
    """Expand (q^l S_left)(q^m S_right) in the homogenized basis by triangular solve.

    Args:
        left (str): lambda.
        right (str): mu.
        basis (Mapping): output of build_basis.

    Raises:
        VerificationError: a diagonal restriction is zero.

    Returns:
        dict: nu -> c-bar, every nu of the shape in linear-extension order.
    """
    first, second = basis[left], basis[right]
    order = list(basis)
    constants: Dict[str, RationalFunction] = {}
    for nu in order:
        value = first[nu] * second[nu]
        for earlier, coefficient in constants.items():
            if coefficient:
                restriction = basis[earlier][nu]
                if restriction:
                    value -= coefficient * restriction
        diagonal = basis[nu][nu]
        if not diagonal:
            raise VerificationError(config.ERROR_DIAGONAL.format(string=nu))
        constants[nu] = value / diagonal
    return constants


def unhomogenize(constant: RationalFunction, left: str, right: str, nu: str, table: VariableTable) -> RationalFunction:
    """c = q^{l(nu) - l(left) - l(right)} * c-bar."""
    q = table.gen(config.SYMBOL_Q)
    return constant * q ** (length(nu) - length(left) - length(right))


def specialize_class(cls: FixedPointClass, bindings: Mapping[str, RationalFunction]) -> FixedPointClass:
    return cls.map(lambda value: substitute(value, bindings, cls.table) if value else value)


@lru_cache(maxsize=None)
def chern_basis(shape: ThetaShape) -> Dict[str, FixedPointClass]:
    """St classes in the K-picture: top value prod (1 - e^{-alpha}) / b, then S_{r_i l} = d_i S_l."""
    table = kpicture(shape.n)
    beta = table.gen(config.SYMBOL_BETA)
    top = table.one
    for root in positive_roots(shape):
        top *= (1 - exp_minus_root(table, root)) / beta
    return descend(supported_at_top(shape, table, top), apply_partial)


def exchange_relation_holds(basis: Mapping[str, FixedPointClass], string: str, point: str, i: int) -> bool:
    """r_i(B_l|_{point r_i}) against the three-case right-hand side."""
    cls = basis[string]
    table = cls.table
    beta = table.gen(config.SYMBOL_BETA)
    q = table.gen(config.SYMBOL_Q)
    big_q = q_poly(table)
    up = _z(table, i) / _z(table, i + 1)
    left = swap_variables(cls[apply_r(i, point)], table, i)
    if string[i - 1] == string[i]:
        return rf_equals(left, cls[point])
    other = basis[apply_r(i, string)][point]
    denominator = big_q - q ** 2 * up
    if string[i - 1] < string[i]:
        right = beta * (1 - q ** 2) / denominator * cls[point] + q * big_q * (1 - up) / denominator * other
    else:
        right = beta * (1 - q ** 2) * up / denominator * cls[point] + q * (1 - up) / denominator * other
    return rf_equals(left, right)


def random_class(shape: ThetaShape, rng: random.Random) -> FixedPointClass:
    table = kpicture(shape.n)
    names = [config.SYMBOL_Q] + ['{0}{1}'.format(config.PREFIX_Z, i) for i in range(1, shape.n + 1)]
    return FixedPointClass(shape, table, {
        string: random_laurent(table, rng, names) for string in all_strings(shape)
    })


def operator_suite(shape: ThetaShape, trials: int = None, seed: int = None) -> List[EquationResult]:
    """Quadratic, inverse and braid relations of the operators on random classes."""
    rng = random.Random(config.RANDOM_SEED if seed is None else seed)
    trials = config.RANDOM_TRIALS if trials is None else trials
    table = kpicture(shape.n)
    q = table.gen(config.SYMBOL_Q)
    big_q = q_poly(table)
    results = []
    for trial in range(trials):
        cls = random_class(shape, rng)
        for i in range(1, shape.n):
            step = apply_partial(i, cls) - cls.scale(big_q)
            quadratic = apply_partial(i, step) + step.scale(q ** 2)
            results.append(check('{0} quadratic d{1} #{2}'.format(shape, i, trial), quadratic.is_zero()))
            forward = apply_partial(i, cls)
            results.append(check(
                '{0} inverse d{1} #{2}'.format(shape, i, trial),
                apply_inverse_partial(i, forward).equals(cls)
                and apply_partial(i, apply_inverse_partial(i, cls)).equals(cls),
            ))
            step = apply_inverse_partial(i, cls) - cls.scale(1 / big_q)
            quadratic = apply_inverse_partial(i, step) + step.scale(1 / q ** 2)
            results.append(check('{0} inverse quadratic d{1} #{2}'.format(shape, i, trial), quadratic.is_zero()))
            for j in range(i + 1, shape.n):
                results.append(_braid_result(shape, cls, i, j, trial))
    return results


def _braid_result(shape: ThetaShape, cls: FixedPointClass, i: int, j: int, trial: int) -> EquationResult:
    if j == i + 1:
        left = apply_partial(i, apply_partial(j, apply_partial(i, cls)))
        right = apply_partial(j, apply_partial(i, apply_partial(j, cls)))
        name = '{0} braid d{1}d{2}d{1} #{3}'
    else:
        left = apply_inverse_partial(i, apply_inverse_partial(j, cls))
        right = apply_inverse_partial(j, apply_inverse_partial(i, cls))
        name = '{0} commute d{1}~d{2}~ #{3}'
        left_plain = apply_partial(i, apply_partial(j, cls))
        right_plain = apply_partial(j, apply_partial(i, cls))
        if not left_plain.equals(right_plain):
            return check(name.format(shape, i, j, trial), False, 'plain operators do not commute')
    return check(name.format(shape, i, j, trial), left.equals(right))
