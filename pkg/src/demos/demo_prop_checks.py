#!/usr/bin/env python3
import sys
import os

# Add parent directory to path so we can import sylvester
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from fractions import Fraction

from sylvester.arith import (
    PHI_BAR,
    SYLVESTER,
    accumulation_witness,
    convolve_prime_power,
    fiber_witnesses,
    inverse_prime_power,
)
from sylvester.emitter import format_rational
from sylvester.pipeline import ChunkScheduler
from sylvester.primes import build_table
from sylvester.primorial import (
    check_phi_bar_minimality,
    check_sylvester_maximality,
    primorial_table,
)
from sylvester.unitsmod import sylvester_identity_check


# ==================== DIRICHLET ALGEBRA ====================
def show_prime_power_algebra() -> None:
    print("[ALGEBRA] (phi_bar * S)(2^k) = 1 + k/2:")
    for k in range(1, 6):
        print(f"[ALGEBRA]   k={k}: {format_rational(convolve_prime_power(PHI_BAR, SYLVESTER, 2, k))}")

    print("[ALGEBRA] S^-1(p^k) at p = 5:")
    for k in range(0, 5):
        print(f"[ALGEBRA]   k={k}: {format_rational(inverse_prime_power(SYLVESTER, 5, k))}")


# ==================== FIBERS AND ACCUMULATION ====================
def show_fibers(table) -> None:
    for f, m in ((SYLVESTER, 5), (PHI_BAR, 6), (SYLVESTER, 2)):
        witnesses = fiber_witnesses(f, m, 8, table)
        print(f"[FIBER] {f.name}({m}): {witnesses}")

    w = accumulation_witness(SYLVESTER, 105, Fraction(1, 10**4), table)
    print(f"[FIBER] S(105 * {w.prime}) differs from S(105) by {float(w.gap):.3e}")


# ==================== PRIMORIALS ====================
def show_primorials(table) -> None:
    for record in primorial_table(7, table):
        print(
            f"[PRIMORIAL] P_{record.index} = {record.value}: phi_bar={format_rational(record.phi_bar)} "
            f"S={format_rational(record.sylvester)}"
        )

    scheduler = ChunkScheduler(threads=4, chunk_size=65_536)
    for n in range(2, 8):
        print(f"[PRIMORIAL] {check_phi_bar_minimality(n, table, scheduler=scheduler).render()}")
        print(f"[PRIMORIAL] {check_sylvester_maximality(n, table, scheduler=scheduler).render()}")


if __name__ == "__main__":
    print("\n[MAIN] Building prime table...")
    table = build_table(1_000_000)

    show_prime_power_algebra()
    show_fibers(table)

    print("\n[MAIN] Unit pair identity for m = 2 * 3 * 5 * 7:")
    for n in (1, 3, 35, 105):
        print(f"[UNITS] n={n}: {sylvester_identity_check([3, 5, 7], n, table).render()}")

    print("\n[MAIN] Primorial extremality...")
    show_primorials(table)
