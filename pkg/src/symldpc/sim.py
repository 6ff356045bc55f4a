"""Monte-Carlo word/bit error rate sweeps with reproducible noise.

Transmission is always the all-zero codeword (the code is linear and both
channels are symmetric, so error rates are codeword-independent); BPSK
maps it to the all +1 sequence.

Randomness is a counter-based Philox stream keyed by (seed, sweep-cell
index); trial t consumes the 64-bit words [t*W, (t+1)*W) of that stream,
where W is the per-trial word budget rounded up to the 4-word Philox
block.  Noise values therefore depend only on (seed, cell, trial), never
on batch size, thread count, or schedule, and reruns are bit-identical.
"""

from __future__ import annotations

import csv
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .codes import CodeSpec
from .decode import (
    DEFAULT_MAX_ITERS,
    ERASED,
    STATUS_STALLED,
    AwgnChannel,
    SumProductDecoder,
    peel_decode_bec,
)
from .exceptions import BadParametersError

CSV_HEADER = ["code_id", "channel", "param", "trials", "word_errors", "bit_errors", "wer", "ber", "seed"]

DEFAULT_BATCH = 8192

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class SimResult:
    """Accumulated error statistics for one (code, channel, parameter) cell."""

    code_id: str
    channel: str
    param: float
    trials: int
    word_errors: int
    bit_errors: int
    wer: float
    ber: float
    seed: int
    elapsed: float = field(compare=False, default=0.0)

    def csv_row(self) -> list:
        return [
            self.code_id,
            self.channel,
            self.param,
            self.trials,
            self.word_errors,
            self.bit_errors,
            self.wer,
            self.ber,
            self.seed,
        ]


def results_to_csv(results, out) -> None:
    """Write results under the fixed header; `out` is a path or a text file."""
    if hasattr(out, "write"):
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in results:
            w.writerow(r.csv_row())
    else:
        with open(out, "w", encoding="utf-8", newline="") as f:
            results_to_csv(results, f)


def default_threads() -> int:
    env = os.environ.get("SYMLDPC_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _words_per_trial(count: int) -> int:
    # round up to the Philox 4-word block so trials start on block boundaries
    return (count + 3) // 4 * 4


def _uniforms(seed: int, cell: int, start_word: int, nwords: int) -> np.ndarray:
    """Open-interval (0,1) doubles from the (seed, cell) Philox stream."""
    assert start_word % 4 == 0
    key = ((seed & _MASK64) << 64) | (cell & _MASK64)
    bg = np.random.Philox(key=key)
    bg.advance(start_word // 4)
    raw = bg.random_raw(nwords)
    return ((raw >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53


def _standard_normals(u: np.ndarray, n: int) -> np.ndarray:
    """Box-Muller transform of a (batch, even) uniform block; first n columns."""
    r = np.sqrt(-2.0 * np.log(u[:, 0::2]))
    theta = (2.0 * np.pi) * u[:, 1::2]
    z = np.empty_like(u)
    z[:, 0::2] = r * np.cos(theta)
    z[:, 1::2] = r * np.sin(theta)
    return z[:, :n]


def _check_common(trials: int, seed: int) -> None:
    if trials < 1:
        raise BadParametersError(f"trials must be >= 1, got {trials}")
    if not isinstance(seed, int):
        raise BadParametersError("seed must be an integer")


def run_awgn_sweep(
    code: CodeSpec,
    ebno_list,
    trials: int,
    seed: int,
    max_iters: int = DEFAULT_MAX_ITERS,
    threads: int | None = None,
    batch_size: int = DEFAULT_BATCH,
) -> list[SimResult]:
    """All-zero-codeword AWGN sweep; one SimResult per Eb/N0 point."""
    _check_common(trials, seed)
    if code.dimension < 1:
        raise BadParametersError("AWGN Eb/N0 scaling needs code dimension >= 1")
    ebno_list = [float(e) for e in ebno_list]
    decoder = SumProductDecoder(code.h)
    n = code.length
    wpt = _words_per_trial(n if n % 2 == 0 else n + 1)

    def run_cell(cell: int) -> SimResult:
        t0 = time.perf_counter()
        ebno = ebno_list[cell]
        sigma = AwgnChannel(ebno_db=ebno, rate=code.rate).sigma
        scale = 2.0 / (sigma * sigma)
        word_errors = 0
        bit_errors = 0
        done = 0
        while done < trials:
            b = min(batch_size, trials - done)
            u = _uniforms(seed, cell, done * wpt, b * wpt).reshape(b, wpt)
            noise = _standard_normals(u, n)
            y = 1.0 + sigma * noise
            bits, _, _ = decoder.decode_batch(scale * y, max_iters)
            errs = bits.sum(axis=1)
            word_errors += int(np.count_nonzero(errs))
            bit_errors += int(errs.sum())
            done += b
        return SimResult(
            code_id=code.code_id,
            channel="awgn",
            param=ebno,
            trials=trials,
            word_errors=word_errors,
            bit_errors=bit_errors,
            wer=word_errors / trials,
            ber=bit_errors / (trials * n),
            seed=seed,
            elapsed=time.perf_counter() - t0,
        )

    return _run_cells(run_cell, len(ebno_list), threads)


def run_bec_sweep(
    code: CodeSpec,
    erasure_probs,
    trials: int,
    seed: int,
    threads: int | None = None,
    batch_size: int = DEFAULT_BATCH,
) -> list[SimResult]:
    """All-zero-codeword erasure-channel sweep using the peeling decoder."""
    _check_common(trials, seed)
    probs = [float(p) for p in erasure_probs]
    for p in probs:
        if not 0.0 <= p < 1.0:
            raise BadParametersError(f"erasure probability must be in [0, 1), got {p}")
    n = code.length
    wpt = _words_per_trial(n)

    def run_cell(cell: int) -> SimResult:
        t0 = time.perf_counter()
        p = probs[cell]
        word_errors = 0
        bit_errors = 0
        done = 0
        while done < trials:
            b = min(batch_size, trials - done)
            u = _uniforms(seed, cell, done * wpt, b * wpt).reshape(b, wpt)[:, :n]
            erase = u < p
            for t in range(b):
                received = np.where(erase[t], ERASED, 0)
                n_erased = int(erase[t].sum())
                outcome = peel_decode_bec(code, received)
                unresolved = n_erased - outcome.iterations
                miscorrected = int(outcome.word.sum())
                if outcome.status == STATUS_STALLED or miscorrected:
                    word_errors += 1
                bit_errors += unresolved + miscorrected
            done += b
        return SimResult(
            code_id=code.code_id,
            channel="bec",
            param=p,
            trials=trials,
            word_errors=word_errors,
            bit_errors=bit_errors,
            wer=word_errors / trials,
            ber=bit_errors / (trials * n),
            seed=seed,
            elapsed=time.perf_counter() - t0,
        )

    return _run_cells(run_cell, len(probs), threads)


def _run_cells(run_cell, n_cells: int, threads: int | None) -> list[SimResult]:
    """Run independent sweep cells, optionally on a thread pool.

    Each cell's stream is keyed by its index, so results are identical for
    any worker count; they are returned in cell order.
    """
    workers = threads if threads is not None else default_threads()
    if workers <= 1 or n_cells <= 1:
        return [run_cell(c) for c in range(n_cells)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_cell, range(n_cells)))
