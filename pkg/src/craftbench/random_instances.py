"""Seeded generators for test and benchmark instances.

Every generator takes a ``random.Random`` so that callers control the stream;
``rng_from_env`` honours CRAFTBENCH_SEED.
"""

from __future__ import annotations

import os
import random

from craftbench.bitstring import BitString, Mode, complement, concat
from craftbench.crafting import CraftingInstance
from craftbench.problems import CnfFormula, X3cInstance

DEFAULT_SEED = 20240521


def rng_from_env(default: int = DEFAULT_SEED) -> random.Random:
    return random.Random(int(os.environ.get("CRAFTBENCH_SEED", default)))


def _bits(rng: random.Random, length: int, p_one: float = 0.5) -> BitString:
    return BitString.from_bits([int(rng.random() < p_one) for _ in range(length)])


def _composition(rng: random.Random, total: int, parts: int) -> list[int]:
    cuts = sorted(rng.sample(range(1, total), parts - 1))
    return [b - a for a, b in zip([0] + cuts, cuts + [total])]


def _plant(rng: random.Random, ts: list[BitString], mode: Mode, noise: float) -> BitString:
    """An s that some ordering of ts satisfies, with ``noise`` extra slack bits."""
    order = ts[:]
    rng.shuffle(order)
    word = concat(order)
    if mode is Mode.DOMINATION:
        extra = _bits(rng, len(word), noise)
        return BitString(word.value | extra.value, len(word))
    extra = _bits(rng, len(word), noise)
    return BitString(complement(word).value & extra.value, len(word))


def random_crafting(rng: random.Random, max_len: int = 18, max_strings: int = 7,
                    mode: Mode | None = None, planted: float = 0.5) -> CraftingInstance:
    """Random instance; with probability ``planted`` s is built around a solution."""
    mode = mode or rng.choice([Mode.DOMINATION, Mode.ORTHOGONALITY])
    n = rng.randint(1, max_strings)
    total = rng.randint(n, max(n, max_len))
    density = rng.choice([0.2, 0.4, 0.5, 0.6])
    ts = [_bits(rng, k, density) for k in _composition(rng, total, n)]
    if rng.random() < planted:
        s = _plant(rng, ts, mode, rng.choice([0.0, 0.2, 0.5]))
    else:
        s = _bits(rng, total, 1 - density if mode is Mode.ORTHOGONALITY else max(density, 0.5))
    return CraftingInstance(s, tuple(ts), mode)


def random_palindrome(rng: random.Random, length: int, ends_one: bool = False) -> BitString:
    half = [rng.randint(0, 1) for _ in range((length + 1) // 2)]
    bits = half + half[: length // 2][::-1]
    if ends_one:
        bits[0] = bits[-1] = 1
    return BitString.from_bits(bits)


def random_sc_palindromic(rng: random.Random, max_len: int = 12, max_strings: int = 5,
                          planted: float = 0.5) -> CraftingInstance:
    """SC instance whose strings are palindromes starting and ending with 1."""
    n = rng.randint(1, max_strings)
    total = rng.randint(n, max(n, max_len))
    ts = [random_palindrome(rng, k, ends_one=True) for k in _composition(rng, total, n)]
    if rng.random() < planted:
        s = _plant(rng, ts, Mode.DOMINATION, rng.choice([0.0, 0.3]))
    else:
        s = _bits(rng, total, 0.75)
    return CraftingInstance(s, tuple(ts), Mode.DOMINATION)


def random_ovc_yes(rng: random.Random, max_len: int = 10, max_strings: int = 4,
                   palindromic: bool = True) -> CraftingInstance:
    """OVC instance with a planted solution."""
    n = rng.randint(1, max_strings)
    total = rng.randint(n, max(n, max_len))
    lengths = _composition(rng, total, n)
    if palindromic:
        ts = [random_palindrome(rng, k) for k in lengths]
    else:
        ts = [_bits(rng, k) for k in lengths]
    s = _plant(rng, ts, Mode.ORTHOGONALITY, rng.choice([0.3, 0.6, 1.0]))
    return CraftingInstance(s, tuple(ts), Mode.ORTHOGONALITY)


def random_cnf(rng: random.Random, max_vars: int = 4, max_clauses: int = 3,
               min_clauses: int = 1) -> CnfFormula:
    n = rng.randint(1, max_vars)
    m = rng.randint(min_clauses, max_clauses)
    clauses = [tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(3)) for _ in range(m)]
    return CnfFormula(n, tuple(clauses))


def random_x3c(rng: random.Random, max_n: int = 6, max_m: int = 5, planted: float = 0.5) -> X3cInstance:
    """Instance with m > n/3, so the tree reduction applies."""
    n = rng.choice([k for k in range(3, max_n + 1, 3)])
    m = rng.randint(n // 3 + 1, max(n // 3 + 1, max_m))
    sets: list[frozenset[int]] = []
    if rng.random() < planted:
        elems = list(range(1, n + 1))
        rng.shuffle(elems)
        sets = [frozenset(elems[i:i + 3]) for i in range(0, n, 3)]
    while len(sets) < m:
        sets.append(frozenset(rng.sample(range(1, n + 1), 3)))
    rng.shuffle(sets)
    return X3cInstance(n, tuple(sets))
