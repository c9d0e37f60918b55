"""
Clock generator: BACK and CLK2 pulses per external cycle
=========================================================

The clock generator looks at how many ports are enabled and splits one
external CLK period into that many service slots. BACK fires once per slot
and CLK2 once between slots.
"""

import numpy as np

from pseudoport import PortRequest as R, SimConfig, generate_clock_events, run_stimulus
from pseudoport.clockgen import encode_port_count

# The raw event sequence for each configuration, with its B1B0 code.
for n in (4, 3, 2, 1, 0):
    ce = generate_clock_events(n)
    code = "--" if n == 0 else f"{encode_port_count(n):02b}"
    print(f"{n} ports  B1B0={code}  {list(ce.events)}")

# Drive four cycles configured as 4-, 3-, 2- and 1-port memory and sample
# the resulting waveform on a regular grid to draw it in the terminal.
idle = R()
stim = [
    (R.write(0, 1), R.write(1, 2), R.read(0), R.read(1)),
    (R.read(1), R.write(2, 3), R.read(2), idle),
    (idle, R.read(2), idle, R.write(3, 4)),
    (idle, idle, R.read(3), idle),
]
cfg = SimConfig()
trace = run_stimulus(cfg, stim).trace

step = 125  # ps per character
t = np.arange(trace.origin, trace.origin + len(stim) * trace.period, step)


def sample(name):
    changes = [(tick, v) for tick, n, v in trace.changes if n == name]
    ticks = np.array([c[0] for c in changes])
    values = np.array([c[1] for c in changes])
    idx = np.searchsorted(ticks, t, side="right") - 1
    return np.where(idx >= 0, values[np.maximum(idx, 0)], trace.initial[name])


for name in ("CLK", "CLKP", "BACK", "CLK2", "MEM_EN"):
    print(f"{name:>6} " + "".join("#" if v else "_" for v in sample(name)))
sel = sample("SEL")
print(f"{'SEL':>6} " + "".join("ABCD"[v] for v in sel))

# BACK rises 4, 3, 2, 1 times; CLK2 one fewer in each cycle.
print("BACK per cycle:", [trace.rises("BACK", c) for c in range(4)])
print("CLK2 per cycle:", [trace.rises("CLK2", c) for c in range(4)])
