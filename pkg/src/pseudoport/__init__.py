"""Cycle-accurate simulator of a pseudo-quad-port SRAM wrapper.

Up to four read/write ports are time-multiplexed onto one single-port SRAM
macro inside each external clock period, serviced in a configurable fixed
priority order. An independent reference model (:mod:`pseudoport.oracle`)
checks the cycle-level engine.
"""

from .arbiter import fsm_reset, fsm_step, highest_priority, service_order
from .clockgen import count_enabled, encode_port_count, generate_clock_events
from .engine import RunResult, effective_access_rate, initial_state, run_stimulus, wrapper_cycle
from .model import (
    ClockEvent,
    ClockEvents,
    EngineState,
    EventKind,
    PortId,
    PortOutput,
    PortRequest,
    SimConfig,
    Stats,
    validate_config,
)
from .oracle import oracle_cycle, oracle_run
from .sram import SramMacro, sram_read, sram_write
from .stimulus_io import parse_config, parse_stimulus, render_config, render_stimulus
from .trace import Trace, emit_vcd, parse_vcd, summarize
from .verify import check_equivalence

__version__ = "0.1.0"
