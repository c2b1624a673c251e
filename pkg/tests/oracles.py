"""Independent naive oracles the fast implementations are tested against.

Everything here is deliberately dumb: exhaustive loops, trial division,
breadth-first lattice closure.  None of it shares code with the library
paths it checks.
"""
from __future__ import annotations

from fractions import Fraction


def naive_quotient_set(numer: list[int], denom: list[int]) -> list[Fraction]:
    out = {Fraction(u, v) for u in numer for v in denom}
    return sorted(out)


def trial_division_primes(lo: int, hi: int) -> list[int]:
    out = []
    for n in range(max(lo, 2), hi + 1):
        k = 2
        is_p = n >= 2
        while k * k <= n:
            if n % k == 0:
                is_p = False
                break
            k += 1
        if is_p:
            out.append(n)
    return out


def naive_interval_hit(numer: list[int], denom: list[int], lo: Fraction, hi: Fraction):
    """First ratio strictly inside (lo, hi), scanning all pairs."""
    for v in denom:
        for u in numer:
            r = Fraction(u, v)
            if lo < r < hi:
                return (u, v)
    return None


def naive_best_error(numer: list[int], denom: list[int], target: Fraction) -> Fraction:
    best = None
    for v in denom:
        for u in numer:
            e = abs(target - Fraction(u, v))
            if best is None or e < best:
                best = e
    return best


def naive_digit_prefix_members(a: int, c: int, b: int, powers: bool, bound: int) -> list[int]:
    out = set()
    for n in range(1, bound + 1):
        scale = 1
        while a * scale <= n:
            if a * scale <= n < c * scale:
                out.add(n)
            scale *= b
        if powers:
            p = 1
            while p < n:
                p *= b
            if p == n:
                out.add(n)
    return sorted(out)


def bfs_ideal_elements(gen1, gen2, norm_bound: int) -> set[tuple[int, int]]:
    """Closure of {g1, g2} under negation, addition, and multiplication by
    sqrt(-d), intersected with a working norm box.  Saturates to the full
    ideal lattice inside the box for small bounds."""
    d = gen1.d
    work = 4 * norm_bound + 4 * max(gen1.norm, gen2.norm, 1)

    def norm(v):
        return v[0] * v[0] + d * v[1] * v[1]

    def omega(v):
        return (-d * v[1], v[0])

    frontier = {(gen1.x, gen1.y), (gen2.x, gen2.y), (0, 0)}
    seen = set(frontier)
    while frontier:
        nxt = set()
        for v in frontier:
            for w in list(seen):
                cands = [
                    (v[0] + w[0], v[1] + w[1]),
                    (v[0] - w[0], v[1] - w[1]),
                ]
                for cand in cands + [omega(v), (-v[0], -v[1])]:
                    if cand not in seen and norm(cand) <= work:
                        nxt.add(cand)
        seen |= nxt
        frontier = nxt
    return {v for v in seen if norm(v) <= norm_bound}
