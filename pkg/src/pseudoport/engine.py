"""The wrapper itself: one external clock cycle at a time.

Per cycle the wrapper

* presents last cycle's output registers on the read ports,
* latches all four port inputs on the CLKP spike and resets the FSM to the
  highest-priority enabled port,
* services the selected port on every BACK edge (one SRAM access each,
  reads captured into that port's output register),
* advances the FSM on every CLK2 edge.
"""

from __future__ import annotations

from typing import NamedTuple

from . import arbiter, clockgen
from .errors import AccessError, AddrOutOfRange, DataTooWide, InternalSequencing, OutOfRange, SequencingError
from .model import (
    N_PORTS,
    EngineState,
    EventKind,
    PortOutput,
    SimConfig,
    Stats,
    validate_config,
)
from .sram import SramMacro
from .trace import Trace, declare_signals, port_signal, summarize

# Test-only fault injection: ``f(cycle, port, rdata) -> rdata`` applied to
# every captured read. Must stay None outside tests.
FAULT_HOOK = None


class RunResult(NamedTuple):
    state: EngineState
    outputs: list
    trace: Trace
    stats: Stats


def initial_state(cfg: SimConfig) -> EngineState:
    regs = [PortOutput()] * N_PORTS
    return EngineState(
        cycle=0,
        latched=[None] * N_PORTS,
        selected=None,
        out_regs=list(regs),
        presented=list(regs),
        mem=SramMacro.from_config(cfg),
    )


def _check_requests(requests, cfg, cycle):
    if len(requests) != N_PORTS:
        raise ValueError(f"cycle {cycle}: expected {N_PORTS} requests, got {len(requests)}")
    for port, req in enumerate(requests):
        if not req.enabled:
            continue
        if not 0 <= req.addr < cfg.array_words:
            raise AddrOutOfRange(req.addr, cfg.array_words, port=port, cycle=cycle)
        if req.write_not_read and not 0 <= req.wdata <= cfg.word_mask:
            raise DataTooWide(req.wdata, cfg.word_width, port=port, cycle=cycle)


def _step(state, requests, cfg, events=None, origin=0):
    """Advance ``state`` in place by one external cycle; return the presented outputs."""
    cycle = state.cycle
    requests = tuple(requests)
    _check_requests(requests, cfg, cycle)

    presented = list(state.out_regs)
    regs = [PortOutput(o.rdata, False) for o in presented]
    state.presented = presented
    state.latched = list(requests)

    mask = [r.enabled for r in requests]
    prio = cfg.priority_order
    n = clockgen.count_enabled(requests)
    clk = clockgen.generate_clock_events(n)
    mem = state.mem
    mem.begin_cycle()

    rec = events is not None
    if rec:
        period = cfg.period_ps
        base = origin + cycle * period
        _input_events(events, base, requests, presented, clk, period)

    serviced = []
    for ev in clk.events:
        if ev.kind is EventKind.CLKP:
            state.selected = arbiter.fsm_reset(mask, prio)
            if rec and n:
                events.append((base, "SEL", int(state.selected)))
                events.append((base, "MEM_EN", 1))
        elif ev.kind is EventKind.BACK:
            port = state.selected
            if port is None or port in serviced:
                raise InternalSequencing(
                    f"cycle {cycle}: BACK edge {ev.k} found port {port!r} already serviced")
            req = requests[port]
            try:
                if req.write_not_read:
                    mem.write(req.addr, req.wdata)
                else:
                    value = mem.read(req.addr)
                    if FAULT_HOOK is not None:
                        value = FAULT_HOOK(cycle, port, value)
                    regs[port] = PortOutput(value, True)
            except AccessError as err:
                raise err.locate(port=port, cycle=cycle)
            serviced.append(port)
            if rec:
                rise, fall = clockgen.pulse_ticks(clockgen.event_slot(ev), n, period)
                events += [(base + rise, "BACK", 1), (base + fall, "BACK", 0),
                           (base + rise, "MEM_EN", 0)]
        else:
            state.selected = arbiter.fsm_step(state.selected, mask, prio)
            if rec:
                rise, fall = clockgen.pulse_ticks(clockgen.event_slot(ev), n, period)
                events += [(base + rise, "CLK2", 1), (base + fall, "CLK2", 0),
                           (base + rise, "SEL", int(state.selected)),
                           (base + rise, "MEM_EN", 1)]

    if len(serviced) != n or mem.access_log[-1] != n:
        raise InternalSequencing(
            f"cycle {cycle}: {len(serviced)} services, {mem.access_log[-1]} accesses, "
            f"{n} ports enabled")
    state.out_regs = regs
    state.cycle += 1
    return presented


def _input_events(events, base, requests, presented, clk, period):
    rise, fall = clockgen.pulse_ticks(0, clk.n_active, period)
    events += [(base, "CLK", 1), (base + period // 2, "CLK", 0),
               (base + rise, "CLKP", 1), (base + fall, "CLKP", 0)]
    if clk.b1b0 is not None:
        events.append((base, "B1B0", clk.b1b0))
    for port, req in enumerate(requests):
        events.append((base, port_signal(port, "port_en"), int(req.enabled)))
        if req.enabled:
            events.append((base, port_signal(port, "w_rb"), int(req.write_not_read)))
            events.append((base, port_signal(port, "addr"), req.addr))
            if req.write_not_read:
                events.append((base, port_signal(port, "w_data"), req.wdata))
        events.append((base, port_signal(port, "r_data"), presented[port].rdata))


def wrapper_cycle(state: EngineState, requests, cfg: SimConfig, origin: int = 0):
    """Run one external cycle on a copy of ``state``.

    Returns ``(new_state, presented, events)`` where ``presented`` is what
    the ports show during this cycle (last cycle's output registers) and
    ``events`` is a tick-sorted list of ``(tick, signal, value)``. Ticks are
    picoseconds measured from ``origin``, which is where cycle 0 starts.
    """
    new = state.copy()
    events = []
    presented = _step(new, requests, cfg, events, origin)
    events.sort(key=lambda e: e[0])
    return new, presented, events


def run_stimulus(cfg: SimConfig, stimulus, *, trace: bool = True) -> RunResult:
    """Fold :func:`wrapper_cycle` over ``stimulus``.

    With ``trace=False`` the waveform is not collected (the returned Trace
    is empty), which roughly halves the cost of long verification runs.
    Access and sequencing errors are re-raised tagged with the cycle index.
    """
    validate_config(cfg)
    state = initial_state(cfg)
    period = cfg.period_ps
    tr = Trace(declare_signals(cfg), timescale_ps=1, period=period, origin=period)
    outputs = []
    reads = writes = 0
    for cycle, row in enumerate(stimulus):
        events = [] if trace else None
        try:
            outputs.append(_step(state, row, cfg, events, tr.origin))
        except AccessError as err:
            raise err.locate(cycle=cycle)
        except SequencingError as err:
            raise type(err)(f"cycle {cycle}: {err}") from err
        if trace:
            tr.extend(events)
        for req in row:
            if req.enabled:
                if req.write_not_read:
                    writes += 1
                else:
                    reads += 1
    stats = summarize(state.mem.access_log, cfg, reads=reads, writes=writes)
    return RunResult(state, outputs, tr, stats)


def effective_access_rate(n_active_avg, clk_freq_hz):
    """SRAM accesses per second when ``n_active_avg`` ports are serviced per cycle."""
    if n_active_avg < 0:
        raise OutOfRange(f"average enabled-port count must be >= 0, got {n_active_avg}")
    return n_active_avg * clk_freq_hz
