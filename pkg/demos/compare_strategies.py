"""
Four nonce-management strategies, side by side
==============================================

Runs the calibrated profile for each strategy with three machines and
60 virtual seconds of load, then prints throughput, mean waiting period,
and the worst post-block queue depth. The middleware run shows the
shared-signer ceiling; the other three scale with machine count.
"""

import numpy as np

from txscale.config import Strategy
from txscale.harness import paper_2022_config, run_experiment
from txscale.metrics import compute_waiting_periods

RUNS = [
    (Strategy.MIDDLEWARE, None),
    (Strategy.OWN_ACCOUNTS, None),
    (Strategy.NONCE_FETCH, None),
    (Strategy.NONCE_RANGE, 100),
]

print(f"{'strategy':<18} {'created/s':>9} {'included/s':>10} {'wait mean':>9} {'max queued':>10}")
for approach, range_size in RUNS:
    config = paper_2022_config(approach, machines=3, range_size=range_size)
    bundle = run_experiment(config)

    created_tps = len(bundle.tx_records) / config.duration_s
    included_tps = len(bundle.included_records) / config.duration_s
    waiting = compute_waiting_periods(bundle)
    max_queued = max(b.queued_after for b in bundle.block_records)

    label = approach.value + (f" c={range_size}" if range_size else "")
    print(
        f"{label:<18} {created_tps:>9.1f} {included_tps:>10.1f}"
        f" {waiting.mean_ms / 1000:>8.2f}s {max_queued:>10d}"
    )

# the middleware ceiling in one more line: creation rate barely moves
# between two and three machines because the signer is already saturated
rates = []
for machines in (1, 2, 3):
    bundle = run_experiment(paper_2022_config(Strategy.MIDDLEWARE, machines=machines))
    rates.append(len(bundle.tx_records) / 60)
rates = np.array(rates)
print("\nmiddleware total tps by machine count:", np.round(rates, 1))
print("marginal gain per added machine:      ", np.round(np.diff(rates), 1))
