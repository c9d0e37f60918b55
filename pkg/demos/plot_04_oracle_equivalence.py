"""
Checking the engine against the reference model
===============================================

The oracle has no clocks or FSM: each cycle it walks the enabled ports in
priority order, applying writes and reading memory directly. The engine
must present the oracle's read values exactly one cycle later and end with
the same memory.
"""

from pseudoport import engine
from pseudoport.rng import XorShift64Star
from pseudoport.verify import check_equivalence, random_config, seeded_case

rng = XorShift64Star(2025)
for seed in range(1, 6):
    cfg, stim = seeded_case(random_config(rng), seed, 5000)
    div = check_equivalence(cfg, stim)
    order = ">".join(p.name for p in cfg.priority_order)
    print(f"seed {seed}: {cfg.word_width:2d}-bit x {cfg.array_words:4d}, {order}: "
          f"{'OK' if div is None else div}")

# The harness catches a broken build: flip one bit of every read captured
# from cycle 100 on. The report names the first bad cycle and port.
engine.FAULT_HOOK = lambda cycle, port, value: value ^ 1 if cycle >= 100 else value
try:
    cfg, stim = seeded_case(random_config(rng), 7, 1000)
    print("fault injected:", check_equivalence(cfg, stim))
finally:
    engine.FAULT_HOOK = None
