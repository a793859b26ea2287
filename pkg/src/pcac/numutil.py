"""Small integer-arithmetic helpers: primality, factoring, prime powers."""

from __future__ import annotations

from typing import Iterator


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}. Trial division, desk scale."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, e) with p^e == n if n is a prime power, else None."""
    if n < 2:
        return None
    fac = factorize(n)
    if len(fac) != 1:
        return None
    ((p, e),) = fac.items()
    return p, e


def is_prime_power(n: int) -> bool:
    return prime_power(n) is not None


def primes_from(start: int) -> Iterator[int]:
    """Primes >= start, ascending."""
    n = max(2, start)
    while True:
        if is_prime(n):
            yield n
        n += 1


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    return next(primes_from(n + 1))
