"""Stopping sets govern the peeling decoder on the erasure channel.

Erasing fewer positions than the stopping distance always peels back to
the codeword; erasing a codeword support (which is a stopping set) stalls
the decoder no matter what.
"""

from itertools import combinations

import numpy as np

import symldpc as s
from symldpc.decode import ERASED

code = s.make_code(s.FAMILY_TRANSPOSE, 2, 2)
sdist = s.stopping_distance(code.h)
print(f"{code.code_id}: stopping distance {sdist.value}, witness {sorted(sdist.witness)}")

print("\nerasing below the stopping distance always converges:")
for size in (1, 2, 3):
    outcomes = set()
    for cols in combinations(range(code.length), size):
        rx = np.zeros(code.length, dtype=int)
        rx[list(cols)] = ERASED
        outcomes.add(s.peel_decode_bec(code, rx).status)
    print(f"  all erasure sets of size {size}: {outcomes}")

rx = np.zeros(code.length, dtype=int)
rx[sorted(sdist.witness)] = ERASED
print(f"\nerasing the witness itself: {s.peel_decode_bec(code, rx).status}")

print("\nerasure-rate sweep (10000 trials per point):")
results = s.run_bec_sweep(code, [0.05, 0.15, 0.3, 0.5], trials=10_000, seed=7)
for r in results:
    print(f"  p={r.param:4}: wer={r.wer:.4f} ber={r.ber:.5f}")
