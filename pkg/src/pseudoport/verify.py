"""Random stimulus generation and the engine-vs-oracle equivalence check."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .engine import run_stimulus
from .model import DEFAULT_PRIORITY, N_PORTS, PortId, PortRequest, SimConfig
from .oracle import oracle_run
from .rng import XorShift64Star

# Addresses are drawn from this many low words half of the time so that
# same-cycle collisions between ports are common even in deep arrays.
HOT_WORDS = 4


def random_priority(rng):
    return tuple(rng.shuffle(list(DEFAULT_PRIORITY)))


def random_config(rng, *, widths=(1, 32), depths=(16, 4096), clk_freq_hz=250_000_000):
    width = widths[0] + rng.below(widths[1] - widths[0] + 1)
    depth = depths[0] + rng.below(depths[1] - depths[0] + 1)
    return SimConfig(word_width=width, array_words=depth,
                     priority_order=random_priority(rng), clk_freq_hz=clk_freq_hz)


def random_request(rng, cfg):
    # draw order: enable, mode, hot/cold, address, data (writes only)
    if rng.below(4) == 0:
        return PortRequest()
    write = rng.below(2) == 1
    span = min(cfg.array_words, HOT_WORDS) if rng.below(2) else cfg.array_words
    addr = rng.below(span)
    if write:
        return PortRequest.write(addr, rng.bits(cfg.word_width))
    return PortRequest.read(addr)


def random_stimulus(rng, cfg, n_cycles):
    return [tuple(random_request(rng, cfg) for _ in range(N_PORTS))
            for _ in range(n_cycles)]


@dataclass(frozen=True)
class Divergence:
    """First point where the engine disagrees with the oracle.

    ``port`` is None for a final-memory mismatch, in which case ``addr`` is
    set and ``cycle`` equals the stimulus length. ``expected``/``got`` are
    None where no fresh read value was expected/produced.
    """

    cycle: int
    port: Optional[PortId]
    expected: Optional[int]
    got: Optional[int]
    addr: Optional[int] = None

    def __str__(self):
        def fmt(v):
            return "no fresh read" if v is None else f"{v:#x}"
        if self.port is None:
            return (f"final memory mismatch at address {self.addr:#x} (after cycle "
                    f"{self.cycle}): expected {fmt(self.expected)}, got {fmt(self.got)}")
        return (f"divergence at cycle {self.cycle}, port {self.port.name}: "
                f"expected {fmt(self.expected)}, got {fmt(self.got)}")


def first_divergence(result, oracle_mem, oracle_reads):
    """Compare an engine :class:`RunResult` with oracle output.

    The oracle's read at cycle t must be presented, flagged fresh, by the
    engine at cycle t+1; a port with no oracle read must not be fresh. The
    presentation for the last cycle is taken from the final output
    registers.
    """
    outputs = result.outputs
    if outputs and any(o.fresh for o in outputs[0]):
        port = next(p for p, o in enumerate(outputs[0]) if o.fresh)
        return Divergence(-1, PortId(port), None, outputs[0][port].rdata)
    nxt = outputs[1:] + [result.state.out_regs]
    for cycle, (want, shown) in enumerate(zip(oracle_reads, nxt)):
        for port in range(N_PORTS):
            exp, out = want[port], shown[port]
            got = out.rdata if out.fresh else None
            if exp != got:
                return Divergence(cycle, PortId(port), exp, got)
    engine_mem = result.state.mem.contents()
    if engine_mem != list(oracle_mem):
        addr = next(a for a, (x, y) in enumerate(zip(oracle_mem, engine_mem)) if x != y)
        return Divergence(len(oracle_reads), None, oracle_mem[addr], engine_mem[addr], addr)
    return None


def check_equivalence(cfg, stimulus):
    """Run engine and oracle on the same stimulus; return the first Divergence or None."""
    result = run_stimulus(cfg, stimulus, trace=False)
    mem, reads = oracle_run(cfg, stimulus)
    return first_divergence(result, mem, reads)


def seeded_case(cfg, seed, n_cycles):
    """The (config, stimulus) pair that ``verify`` checks for ``seed``.

    The priority order is redrawn from the seed; width, depth, clock and
    fill come from ``cfg``.
    """
    rng = XorShift64Star(seed)
    cfg = cfg.with_(priority_order=random_priority(rng))
    return cfg, random_stimulus(rng, cfg, n_cycles)
