"""
Access rate versus enabled ports
================================

The macro is accessed once per enabled port per external cycle, so at a
250 MHz external clock four ports give a 1 GHz memory access rate and four
times the single-port bandwidth.
"""

import numpy as np

from pseudoport import PortRequest as R, SimConfig, effective_access_rate, run_stimulus

cfg = SimConfig()
n_cycles = 1000
rows = []
for n_ports in range(1, 5):
    row = tuple(R.write(p, p) if p < n_ports else R() for p in range(4))
    stats = run_stimulus(cfg, [row] * n_cycles, trace=False).stats
    rows.append((n_ports, stats.sram_accesses, stats.effective_rate_hz, stats.bandwidth_bits_per_s))

table = np.array(rows, dtype=float)
print(" ports  accesses  rate [MHz]  bandwidth [Gb/s]")
for n, acc, rate, bw in table:
    print(f"{n:6.0f} {acc:9.0f} {rate / 1e6:11.0f} {bw / 1e9:17.1f}")

print("speed-up over one port:", table[:, 2] / table[0, 2])
assert effective_access_rate(4, cfg.clk_hz) == 1_000_000_000

# A mixed schedule averages out: two quad-port and two single-port cycles.
mixed = [tuple(R.read(0) for _ in range(4))] * 2 + [(R.read(0), R(), R(), R())] * 2
print("mixed schedule rate [MHz]:", run_stimulus(cfg, mixed).stats.effective_rate_hz / 1e6)
