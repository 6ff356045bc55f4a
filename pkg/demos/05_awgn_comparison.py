"""AWGN comparison: a geometry code against its random regular baseline.

A shortened version of the full study (5000 trials per point instead of
50000) so it runs in seconds; bump TRIALS for publication-grade counts.
The CSV written at the end has the same schema the CLI produces.
"""

import symldpc as s

TRIALS = 5_000
EBNO = [0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0]

code = s.make_code(s.FAMILY_SYMMETRIC, 2, 4)
baseline = s.gallager_random(64, 3, 4, seed=42)
print(f"{code.code_id}: [{code.length},{code.dimension}]  vs  "
      f"{baseline.code_id}: [{baseline.length},{baseline.dimension}]")

rows = []
for c in (code, baseline):
    res = s.run_awgn_sweep(c, EBNO, TRIALS, seed=1)
    rows.append(res)
    print(f"\n  {c.code_id}")
    for r in res:
        print(f"    Eb/N0 {r.param:3.0f} dB: wer={r.wer:.4f} ber={r.ber:.5f}")

interleaved = [res[i] for i in range(len(EBNO)) for res in rows]
s.results_to_csv(interleaved, "awgn_comparison.csv")
print("\nwrote awgn_comparison.csv")
