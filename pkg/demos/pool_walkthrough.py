"""
Pending vs queued: one sender, out-of-order nonces
==================================================

Feeds a single node transactions with deliberately shuffled nonces and
prints the pool state after every step, then mines two blocks to show
the gap filling and the queue draining.
"""

from txscale.core import Account, ChainConfig, Keypair, RegistryCall, UnsignedTransaction, derive_address, sign_transaction
from txscale.node import AuthMode, ChainNode

keypair = Keypair.from_seed(7, "demo")
account = Account(derive_address(keypair), keypair)
node = ChainNode(
    ChainConfig(inter_block_ms=5000),
    AuthMode.SINGLE_ACCOUNT,
    designated=account.address,
    master=account.address,
)


def submit(nonce: int, at_us: int) -> None:
    utx = UnsignedTransaction(
        sender=account.address,
        payload=RegistryCall(f"prod-{nonce}"),
        gas=21_000,
        created_at_us=at_us,
        origin_machine=0,
        nonce=nonce,
    )
    result = node.submit(sign_transaction(utx, keypair), at_us)
    pending, queued = node.pool.snapshot()
    print(
        f"t={at_us / 1e6:4.1f}s submit nonce {nonce}: {result.status.name.lower():8s}"
        f" pool now pending={pending} queued={queued}"
    )


# nonce 0 is the frontier, so it goes straight to pending
submit(0, at_us=100_000)

# nonces 2 and 3 have a gap below them (1 is missing): both are queued
submit(2, at_us=200_000)
submit(3, at_us=300_000)

# nonce 1 fills the gap and drags 2 and 3 into pending with it
submit(1, at_us=400_000)

block = node.mine_block(5_000_000)
pending, queued = node.pool.snapshot()
print(f"\nblock {block.number} includes nonces {[tx.nonce for tx in block.transactions]}")
print(f"after mining: pending={pending} queued={queued}")

# a duplicate or stale nonce is refused at the door
submit(2, at_us=5_100_000)
