import math

from sympy import factorint

from toruslab.toruslab_types import FactoredInteger

from typing import Optional, Tuple

# factorint is only asked about the small a, b, d, j of the wave analysis
FACTOR_LIMIT = 10 ** 18


def factor(n: int) -> FactoredInteger:
    '''
    Args:
        n (int): a positive integer no larger than 10^18
    Returns:
        (FactoredInteger): n with its prime factors in increasing order
    '''
    if n < 1:
        raise ValueError('can only factor positive integers, got {}'.format(n))
    if n > FACTOR_LIMIT:
        raise ValueError('{} is above the factoring limit'.format(n))
    pairs = sorted(factorint(n).items())
    return FactoredInteger(
        n=n, factors=[(int(p), int(e)) for p, e in pairs])


def squarefree_part(n: int) -> Tuple[int, int]:
    '''
    Splits n = c^2 d with d squarefree

    Args:
        n (int): positive integer
    Returns:
        (int, int): c, d
    '''
    c = 1
    d = 1
    for p, e in factor(n)['factors']:
        c *= p ** (e // 2)
        if e % 2 == 1:
            d *= p
    return c, d


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def has_obstruction_prime(n: int) -> bool:
    '''True iff some prime q = 3 (mod 4) divides n to an odd power'''
    return any(
        p % 4 == 3 and e % 2 == 1 for p, e in factor(n)['factors'])


def two_square(n: int) -> Optional[Tuple[int, int]]:
    '''Lexicographically smallest x <= y with x^2 + y^2 = n, if any'''
    if n < 0:
        return None
    for x in range(0, math.isqrt(n // 2) + 1):
        rest = n - x * x
        y = math.isqrt(rest)
        if y * y == rest:
            return (x, y)
    return None


def is_sum_two_squares(n: int) -> Tuple[bool, Optional[Tuple[int, int]]]:
    '''
    Args:
        n (int): positive integer
    Returns:
        (bool, tuple): whether n = x^2 + y^2, and the smallest such (x, y)
    '''
    if has_obstruction_prime(n):
        return False, None
    found = two_square(n)
    # NB: the two-squares theorem says the search cannot come back empty
    if found is None:
        raise AssertionError('no two-square decomposition of {}'.format(n))
    return True, found


def three_square_obstructed(n: int) -> bool:
    '''Legendre: n is not a sum of three squares iff n = 4^a (8b + 7)'''
    if n == 0:
        return False
    while n % 4 == 0:
        n //= 4
    return n % 8 == 7


def three_square(n: int) -> Optional[Tuple[int, int, int]]:
    '''Lexicographically smallest x <= y <= z with x^2 + y^2 + z^2 = n'''
    if n < 0 or three_square_obstructed(n):
        return None
    for x in range(0, math.isqrt(n // 3) + 1):
        rest = n - x * x
        for y in range(x, math.isqrt(rest // 2) + 1):
            r2 = rest - y * y
            z = math.isqrt(r2)
            if z * z == r2:
                return (x, y, z)
    return None


def is_sum_three_squares(n: int) \
        -> Tuple[bool, Optional[Tuple[int, int, int]]]:
    if three_square_obstructed(n):
        return False, None
    found = three_square(n)
    if found is None:
        raise AssertionError('no three-square decomposition of {}'.format(n))
    return True, found


def four_square_decomposition(n: int) -> Tuple[int, int, int, int]:
    '''
    Lexicographically smallest w <= x <= y <= z with
    w^2 + x^2 + y^2 + z^2 = n. Lagrange guarantees one exists.
    '''
    if n < 0:
        raise ValueError('negative integers are not sums of squares')
    for w in range(0, math.isqrt(n // 4) + 1):
        rest = n - w * w
        for x in range(w, math.isqrt(rest // 3) + 1):
            r2 = rest - x * x
            for y in range(x, math.isqrt(r2 // 2) + 1):
                r3 = r2 - y * y
                z = math.isqrt(r3)
                if z * z == r3:
                    return (w, x, y, z)
    raise AssertionError('no four-square decomposition of {}'.format(n))
