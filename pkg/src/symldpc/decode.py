"""Iterative decoders: sum-product belief propagation and erasure peeling.

The BP decoder runs a flooding schedule on the Tanner graph of the
parity-check matrix, with the tanh-rule check update and message
magnitudes clipped at LLR_CLIP.  It is written over batches of words (the
batch axis is the trailing one) so the Monte-Carlo harness can decode
thousands of noise realizations per numpy call; each word's evolution is
independent of the rest of the batch, so results never depend on how
trials are grouped.

Convention: BPSK maps bit 0 to +1 and bit 1 to -1, and the channel LLR of
a received amplitude y is 2y/sigma^2 (positive means bit 0 more likely).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codes import CodeSpec
from .exceptions import (
    BadParametersError,
    InconsistentError,
    LengthMismatchError,
)

LLR_CLIP = 30.0
DEFAULT_MAX_ITERS = 50

STATUS_CONVERGED = "converged"
STATUS_MAX_ITERS = "max_iters"
STATUS_STALLED = "stalled"

ERASED = -1


@dataclass(frozen=True)
class AwgnChannel:
    """Binary-input AWGN channel parametrized by Eb/N0 in dB and code rate."""

    ebno_db: float
    rate: float

    @property
    def sigma(self) -> float:
        if self.rate <= 0:
            raise BadParametersError("channel needs a positive code rate")
        return float(1.0 / np.sqrt(2.0 * self.rate * 10.0 ** (self.ebno_db / 10.0)))


@dataclass(frozen=True, eq=False)
class DecodeOutcome:
    """Decoder result: status, hard-decision word, iteration count, syndrome."""

    status: str
    word: np.ndarray
    iterations: int
    syndrome_ok: bool


class SumProductDecoder:
    """Flooding sum-product decoder bound to one parity-check matrix."""

    def __init__(self, h):
        degrees = [len(r) for r in h.row_support]
        # zero-weight rows impose no constraint and are dropped from the graph
        rows = [r for r in h.row_support if r]
        self.nrows = h.nrows
        self.ncols = h.ncols
        var_cm = np.array([j for r in rows for j in r], dtype=np.int64)
        self.var_cm = var_cm
        self.n_edges = len(var_cm)
        self.check_degrees = np.array([len(r) for r in rows], dtype=np.int64)
        self.check_starts = np.concatenate(
            ([0], np.cumsum(self.check_degrees)[:-1])
        ).astype(np.int64)
        check_cm = np.repeat(np.arange(len(rows), dtype=np.int64), self.check_degrees)
        # variable-major ordering of the same edges
        order = np.lexsort((check_cm, var_cm))
        self.to_vm = order
        self.from_vm = np.argsort(order, kind="stable")
        var_vm = var_cm[order]
        self.var_degrees = np.bincount(var_cm, minlength=h.ncols).astype(np.int64)
        if np.any(self.var_degrees == 0):
            # unchecked bits keep their channel decision; edges exist only for
            # checked bits, so reduceat needs the nonempty-variable compaction
            self.checked_vars = np.flatnonzero(self.var_degrees > 0)
        else:
            self.checked_vars = np.arange(h.ncols, dtype=np.int64)
        nz_deg = self.var_degrees[self.checked_vars]
        self.var_starts = np.concatenate(([0], np.cumsum(nz_deg)[:-1])).astype(np.int64)
        self.var_vm = var_vm
        self._nz_deg = nz_deg

    def decode_batch(
        self, llrs: np.ndarray, max_iters: int = DEFAULT_MAX_ITERS
    ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Decode a (batch, n) array of channel LLRs.

        Returns (bits, converged, iterations): bits is (batch, n) uint8,
        converged is a bool mask, iterations holds the iteration at which
        each word first satisfied all checks (max_iters when it never did).
        Each word is frozen at its own first success, so outputs are
        independent of batching.
        """
        if llrs.ndim != 2 or llrs.shape[1] != self.ncols:
            raise LengthMismatchError(
                f"llr array must be (batch, {self.ncols}), got {llrs.shape}"
            )
        if max_iters < 1:
            raise BadParametersError("max_iters must be >= 1")
        batch = llrs.shape[0]
        llrs = np.clip(llrs, -LLR_CLIP, LLR_CLIP)

        bits_out = np.zeros((batch, self.ncols), dtype=np.uint8)
        iters_out = np.full(batch, max_iters, dtype=np.int32)
        converged = np.zeros(batch, dtype=bool)

        if self.n_edges == 0:
            bits_out[:] = llrs < 0.0
            iters_out[:] = 1
            converged[:] = True
            return bits_out, converged, iters_out

        active = np.arange(batch)
        llr_t = np.ascontiguousarray(llrs.T)  # (n, B)
        v2c = llr_t[self.var_cm]  # check-major (E, B)
        tanh_cap = np.tanh(0.5 * LLR_CLIP)

        for it in range(1, max_iters + 1):
            t = np.tanh(0.5 * v2c)
            zero = t == 0.0
            t_nz = np.where(zero, 1.0, t)
            prod_nz = np.multiply.reduceat(t_nz, self.check_starts, axis=0)
            zcnt = np.add.reduceat(zero.astype(np.int32), self.check_starts, axis=0)
            prod_e = np.repeat(prod_nz, self.check_degrees, axis=0)
            zcnt_e = np.repeat(zcnt, self.check_degrees, axis=0)
            loo = np.where(
                zcnt_e == 0,
                prod_e / t_nz,
                np.where((zcnt_e == 1) & zero, prod_e, 0.0),
            )
            np.clip(loo, -tanh_cap, tanh_cap, out=loo)
            c2v = 2.0 * np.arctanh(loo)

            c2v_vm = c2v[self.to_vm]
            sums = np.add.reduceat(c2v_vm, self.var_starts, axis=0)  # (nv, B)
            post = llr_t.copy()
            post[self.checked_vars] += sums
            bits = (post < 0.0).astype(np.uint8)  # (n, B)

            par = np.add.reduceat(
                bits[self.var_cm].astype(np.int32), self.check_starts, axis=0
            )
            ok = ~np.any(par & 1, axis=0)

            # `active` columns map back to original trial indices
            newly = np.flatnonzero(ok)
            if newly.size:
                orig = active[newly]
                bits_out[orig] = bits[:, newly].T
                iters_out[orig] = it
                converged[orig] = True
            if newly.size == ok.size:
                return bits_out, converged, iters_out
            if it == max_iters:
                rest = np.flatnonzero(~ok)
                bits_out[active[rest]] = bits[:, rest].T
                return bits_out, converged, iters_out

            keep = np.flatnonzero(~ok)
            if newly.size:
                active = active[keep]
                llr_t = llr_t[:, keep]
                c2v_vm = c2v_vm[:, keep]
                sums = sums[:, keep]

            sums_e = np.repeat(sums, self._nz_deg, axis=0)
            v2c_vm = llr_t[self.var_vm] + sums_e - c2v_vm
            np.clip(v2c_vm, -LLR_CLIP, LLR_CLIP, out=v2c_vm)
            v2c = v2c_vm[self.from_vm]

        raise AssertionError("unreachable")

    def decode(self, llr, max_iters: int = DEFAULT_MAX_ITERS):
        llr = np.asarray(llr, dtype=np.float64)
        if llr.ndim != 1 or llr.shape[0] != self.ncols:
            raise LengthMismatchError(
                f"llr must have length {self.ncols}, got shape {llr.shape}"
            )
        bits, conv, iters = self.decode_batch(llr[None, :], max_iters)
        return bits[0], bool(conv[0]), int(iters[0])


def _syndrome_ok(h, word: np.ndarray) -> bool:
    return all(int(word[list(row)].sum()) % 2 == 0 for row in h.row_support if row)


def bp_decode_awgn(
    code: CodeSpec, llr, max_iters: int = DEFAULT_MAX_ITERS
) -> DecodeOutcome:
    """Sum-product decode of one word of channel LLRs."""
    decoder = SumProductDecoder(code.h)
    word, conv, iters = decoder.decode(llr, max_iters)
    return DecodeOutcome(
        status=STATUS_CONVERGED if conv else STATUS_MAX_ITERS,
        word=word,
        iterations=iters,
        syndrome_ok=_syndrome_ok(code.h, word),
    )


def peel_decode_bec(code: CodeSpec, received) -> DecodeOutcome:
    """Peel erasures: repeatedly solve checks with exactly one erased bit.

    `received` holds 0, 1, or ERASED (-1) per position.  Converges when no
    erasures remain; stalls when the remaining erasures form a stopping
    set.  A fully known check with odd parity raises InconsistentError.
    """
    h = code.h
    received = list(int(b) for b in received)
    if len(received) != code.length:
        raise LengthMismatchError(
            f"received word must have length {code.length}, got {len(received)}"
        )
    if any(b not in (0, 1, ERASED) for b in received):
        raise BadParametersError("received symbols must be 0, 1 or ERASED")

    word = [0 if b == ERASED else b for b in received]
    erased = [b == ERASED for b in received]
    erased_count = []
    parity = []
    for row in h.row_support:
        e = sum(1 for j in row if erased[j])
        p = sum(word[j] for j in row if not erased[j]) % 2
        erased_count.append(e)
        parity.append(p)
        if e == 0 and p != 0:
            raise InconsistentError("a fully known parity check fails")

    queue = [i for i, e in enumerate(erased_count) if e == 1]
    steps = 0
    while queue:
        i = queue.pop()
        if erased_count[i] != 1:
            continue
        j = next(jj for jj in h.row_support[i] if erased[jj])
        value = parity[i]
        word[j] = value
        erased[j] = False
        steps += 1
        for ii in h.col_support[j]:
            erased_count[ii] -= 1
            if value:
                parity[ii] ^= 1
            if erased_count[ii] == 1:
                queue.append(ii)
            elif erased_count[ii] == 0 and parity[ii] != 0:
                raise InconsistentError("a fully known parity check fails")

    out = np.array(word, dtype=np.uint8)
    stalled = any(erased)
    return DecodeOutcome(
        status=STATUS_STALLED if stalled else STATUS_CONVERGED,
        word=out,
        iterations=steps,
        syndrome_ok=_syndrome_ok(h, out),
    )
