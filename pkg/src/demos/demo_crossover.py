#!/usr/bin/env python3
import sys
import os

# Add parent directory to path so we can import sylvester
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from sylvester.comet import CLAIM_LO, comet_emit, crossover_scan, ratio_summary
from sylvester.config import load_config
from sylvester.log import configure_logging
from sylvester.violation import ViolationReport
from sylvester.workflow import Session

N_MAX = 200_000


if __name__ == "__main__":
    configure_logging("INFO")
    # a smaller sieve and constant keep the walkthrough under a few seconds
    config = load_config({"sieve_limit": 2 * N_MAX, "c_terms": 100_000})
    session = Session(config)

    print("\n[MAIN] Building the prime table and the twin prime constant...")
    table = session.table()
    constant = session.constant()
    print(f"[MAIN] c = {constant.value!r} over {constant.terms_used} odd primes")
    print(f"[MAIN] bracket = [{constant.bracket[0]!r}, {constant.bracket[1]!r}]")

    print(f"\n[MAIN] Exact g(n) for n <= {N_MAX} by one self-convolution...")
    counts = session.counts(N_MAX)

    print("\n[MAIN] First comet records:")
    for record in comet_emit(3, 12, 1, table, constant.value, counts=counts):
        print(f"  n={record.n:>3} g={record.g:>2} S={record.sylvester:.6f} G={record.big_g:.6f}")

    print(f"\n[MAIN] Scanning [3, {CLAIM_LO - 1}] for S(n) >= G(n)...")
    below = ViolationReport(
        crossover_scan(3, CLAIM_LO - 1, constant.value, table, counts=counts, scheduler=session.chunks)
    )
    print(f"[MAIN] {below.summary_line()}")

    print(f"\n[MAIN] Scanning [{CLAIM_LO}, {N_MAX}]...")
    above = ViolationReport(
        crossover_scan(CLAIM_LO, N_MAX, constant.value, table, counts=counts, scheduler=session.chunks)
    )
    print(f"[MAIN] {above.summary_line()}")

    summary = ratio_summary(N_MAX - 10_000, N_MAX, constant.value, table, counts=counts)
    print(f"\n[MAIN] mean G/S over the last 10^4 n: {summary.mean_g_over_s:.4f}")
    print(f"[MAIN] mean h/g over the last 10^4 n: {summary.mean_h_over_g:.4f}")
