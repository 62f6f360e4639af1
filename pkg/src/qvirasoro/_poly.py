"""Dense univariate polynomials over the integers.

A polynomial is a tuple of ints, lowest degree first, with no trailing
zeros. The zero polynomial is the empty tuple.
"""
from __future__ import annotations

from math import gcd as igcd

Poly = tuple


def trim(c) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return trim(out)


def neg(a: Poly) -> Poly:
    return tuple(-x for x in a)


def sub(a: Poly, b: Poly) -> Poly:
    return add(a, neg(b))


def scale(a: Poly, k: int) -> Poly:
    if k == 0:
        return ()
    return tuple(k * x for x in a)


def mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    if len(a) == 1:
        return scale(b, a[0])
    if len(b) == 1:
        return scale(a, b[0])
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def shift(a: Poly, k: int) -> Poly:
    """Multiply by x**k, k >= 0."""
    if not a:
        return ()
    return (0,) * k + tuple(a)


def low_order(a: Poly) -> int:
    """Largest k with x**k dividing a (a nonzero)."""
    k = 0
    while a[k] == 0:
        k += 1
    return k


def content(a: Poly) -> int:
    g = 0
    for x in a:
        g = igcd(g, x)
        if g == 1:
            break
    return g


def primitive(a: Poly) -> Poly:
    """Primitive part with positive leading coefficient."""
    if not a:
        return ()
    g = content(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return tuple(a)
    return tuple(x // g for x in a)


def prem(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder of a by b."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while r and len(r) - 1 >= db:
        lr = r[-1]
        k = len(r) - 1 - db
        r = [lb * x for x in r]
        for i, y in enumerate(b):
            r[i + k] -= lr * y
        r = list(trim(r))
    return tuple(r)


def divexact(a: Poly, b: Poly) -> Poly:
    """Quotient a / b, which must be exact over the integers."""
    if not a:
        return ()
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    qt = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c, rem = divmod(r[k + db], lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        qt[k] = c
        if c:
            for i, y in enumerate(b):
                r[i + k] -= c * y
    if any(r[:db]):
        raise ArithmeticError("inexact polynomial division")
    return trim(qt)


def gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd (positive leading coefficient) via the primitive PRS."""
    if not a:
        return primitive(b)
    if not b:
        return primitive(a)
    if len(a) == 1 or len(b) == 1:
        return (1,)
    a, b = primitive(a), primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return (1,)
        a, b = b, primitive(prem(a, b))
    return a


def evaluate(a: Poly, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc
