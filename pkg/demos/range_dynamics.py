"""
Nonce ranges: queue depth and inclusion-rate oscillation
========================================================

With pre-allocated nonce ranges the pool's queued count stays pinned
below twice the range size, and for very large ranges the inclusion
rate swings between feast and famine while creation stays flat.
This script runs c=100 and c=10000 and sketches both effects as text.
"""

import numpy as np

from txscale.config import Strategy
from txscale.harness import paper_2022_config, run_experiment
from txscale.metrics import bin_throughput, compute_waiting_periods

BARS = " .:-=+*#%@"


def sparkline(values: np.ndarray) -> str:
    top = values.max() if values.max() > 0 else 1
    return "".join(BARS[min(int(v / top * (len(BARS) - 1)), len(BARS) - 1)] for v in values)


for range_size in (100, 10_000):
    config = paper_2022_config(Strategy.NONCE_RANGE, machines=3, range_size=range_size)
    bundle = run_experiment(config)

    queued = np.array([b.queued_after for b in bundle.block_records])
    series = bin_throughput(bundle, bin_s=5)
    waiting = compute_waiting_periods(bundle)

    print(f"\nrange size c={range_size}")
    print(f"  queued after each block: {sparkline(queued)}  (peak {queued.max()}, bound 2c={2 * range_size})")
    print(f"  created per 5s bin:      {sparkline(series.created)}")
    print(f"  included per 5s bin:     {sparkline(series.included)}")
    print(f"  waiting period: min {waiting.min_ms / 1000:.1f}s"
          f"  mean {waiting.mean_ms / 1000:.1f}s  max {waiting.max_ms / 1000:.1f}s")

    grants = sorted(g.granted_at_us for g in bundle.range_grants if g.machine_id == 0)
    gaps = np.diff(grants) / 1e6
    if gaps.size:
        print(f"  machine 0 refetched every {np.median(gaps):.1f}s (median)")
