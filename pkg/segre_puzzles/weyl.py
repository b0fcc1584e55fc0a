"""Strings for W^Theta, lengths, Bruhat order and simple reflections."""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from sympy.utilities.iterables import multiset_permutations

from segre_puzzles import config
from segre_puzzles.symcore import RationalFunction, ShapeError, VariableTable, swap_symbols

SMALLEST = 'smallest'
LARGEST = 'largest'


@dataclass(frozen=True)
class ThetaShape:
    """Block sizes of a partial flag variety.

    Attributes:
        blocks (tuple): p_1..p_{d+1}; letter d occurs p_1 times, letter 0 occurs p_{d+1} times.
    """

    blocks: Tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.blocks)

    @property
    def d(self) -> int:
        return len(self.blocks) - 1

    @property
    def is_grassmannian(self) -> bool:
        return self.d == 1

    @property
    def k(self) -> int:
        return self.blocks[0]

    def __str__(self) -> str:
        if self.is_grassmannian:
            return '{0},{1}'.format(self.k, self.n)
        return '+'.join(str(block) for block in self.blocks)


def grassmannian(k: int, n: int) -> ThetaShape:
    if n < 1 or not 0 <= k <= n:
        raise ShapeError(config.ERROR_SHAPE.format(shape='{0},{1}'.format(k, n), reason='need 0 <= k <= n, n >= 1'))
    return ThetaShape((k, n - k))


def parse_shape(text: str) -> ThetaShape:
    """Parse "k,n" or "p1+p2+...".

    Args:
        text (str): shape text.

    Raises:
        ShapeError: malformed text or block sizes.

    Returns:
        ThetaShape: the shape.
    """
    text = text.strip()
    try:
        if ',' in text:
            k, n = (int(part) for part in text.split(','))
            return grassmannian(k, n)
        blocks = tuple(int(part) for part in text.split('+'))
    except ValueError:
        raise ShapeError(config.ERROR_SHAPE.format(shape=text, reason='expected "k,n" or "p1+p2+..."'))
    if len(blocks) < 2 or min(blocks) < 1 or len(blocks) > 10:
        raise ShapeError(config.ERROR_SHAPE.format(shape=text, reason='blocks must be positive, 2..10 of them'))
    return ThetaShape(blocks)


def longest_string(shape: ThetaShape) -> str:
    """The string d^{p1}(d-1)^{p2}...0^{p_{d+1}} of w0."""
    return ''.join(str(shape.d - position) * size for position, size in enumerate(shape.blocks))


def length(string: str) -> int:
    """Number of inversions i<j with string_i > string_j."""
    return sum(
        1
        for i, left in enumerate(string)
        for right in string[i + 1:]
        if left > right
    )


@lru_cache(maxsize=None)
def all_strings(shape: ThetaShape) -> Tuple[str, ...]:
    """All of W^Theta, sorted by (length, string) which refines Bruhat order."""
    letters = sorted(longest_string(shape))
    strings = [''.join(perm) for perm in multiset_permutations(letters)]
    return tuple(sorted(strings, key=lambda string: (length(string), string)))


def check_string(string: str, shape: ThetaShape) -> str:
    if sorted(string) != sorted(longest_string(shape)):
        raise ShapeError(config.ERROR_STRING.format(string=string, shape=shape))
    return string


def positive_roots(shape: ThetaShape) -> List[Tuple[int, int]]:
    """Pairs (i, j), i < j (1-based), lying in different blocks of w0."""
    top = longest_string(shape)
    return [
        (i + 1, j + 1)
        for i in range(shape.n)
        for j in range(i + 1, shape.n)
        if top[i] != top[j]
    ]


@lru_cache(maxsize=None)
def bruhat_leq(left: str, right: str) -> bool:
    """Tableau criterion on prefix counts of letters at least c."""
    for letter in set(left) | set(right):
        low = high = 0
        for a, b in zip(left, right):
            low += a >= letter
            high += b >= letter
            if low > high:
                return False
    return True


def apply_r(i: int, string: str) -> str:
    """Swap positions i and i+1 (1-based)."""
    if not 1 <= i < len(string):
        raise ShapeError(config.ERROR_INDEX.format(index=i, limit=len(string) - 1))
    return string[:i - 1] + string[i] + string[i - 1] + string[i + 1:]


def var_swap_r(i: int, prefix: str = config.PREFIX_Z) -> Dict[str, str]:
    """The binding exchanging prefix_i and prefix_{i+1}, as a name map."""
    first = '{0}{1}'.format(prefix, i)
    second = '{0}{1}'.format(prefix, i + 1)
    return {first: second, second: first}


def swap_variables(expr: RationalFunction, table: VariableTable, i: int, prefix: str = config.PREFIX_Z):
    first, second = sorted(var_swap_r(i, prefix))
    return swap_symbols(expr, table, first, second)


def descent_path(string: str, rule: str = SMALLEST) -> List[int]:
    """Indices i_1..i_m with apply_r applied in order taking w0 down to string.

    Args:
        string (str): target string.
        rule (str): pick the smallest or largest ascent at each step up.

    Raises:
        ShapeError: no path (the string has no ascent yet is not w0).

    Returns:
        list: the path, each step lowering length by one.
    """
    top = ''.join(sorted(string, reverse=True))
    steps = []
    current = string
    while current != top:
        ascents = [i + 1 for i in range(len(current) - 1) if current[i] < current[i + 1]]
        if not ascents:
            raise ShapeError(config.ERROR_UNREACHABLE.format(top=top, string=string))
        step = ascents[0] if rule == SMALLEST else ascents[-1]
        steps.append(step)
        current = apply_r(step, current)
    return steps[::-1]


def string_to_permutation(string: str) -> List[int]:
    """Positions (1-based) of the letters of string, letters taken in increasing order.

    This sends the i-th letter of the sorted string to its place in string.
    """
    return [
        position + 1
        for letter in sorted(set(string))
        for position, current in enumerate(string)
        if current == letter
    ]
