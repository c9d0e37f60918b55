"""Domain types and run configuration for the pseudo-quad-port SRAM wrapper.

Everything here is a plain value. The only behaviour is construction and
validation (:func:`validate_config`).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, NamedTuple, Optional

from .errors import (
    BadClock,
    BadFill,
    NonPermutationPriority,
    WidthTooLarge,
    ZeroDepth,
    ZeroWidth,
)

if TYPE_CHECKING:
    from .sram import SramMacro

N_PORTS = 4
MAX_WORD_WIDTH = 64
# Shortest external period that still leaves distinct ticks for every pulse edge.
MIN_PERIOD_PS = 16


class PortId(enum.IntEnum):
    A = 0
    B = 1
    C = 2
    D = 3

    @classmethod
    def parse(cls, text: str) -> "PortId":
        return cls[text.strip().upper()]

    @property
    def letter(self) -> str:
        return self.name


DEFAULT_PRIORITY = (PortId.A, PortId.B, PortId.C, PortId.D)


@dataclass(frozen=True)
class PortRequest:
    """One port's inputs for one external cycle (port_en, w/rb, addr, w_data)."""

    enabled: bool = False
    write_not_read: bool = False
    addr: int = 0
    wdata: int = 0

    @classmethod
    def idle(cls) -> "PortRequest":
        return cls()

    @classmethod
    def read(cls, addr: int) -> "PortRequest":
        return cls(True, False, addr, 0)

    @classmethod
    def write(cls, addr: int, data: int) -> "PortRequest":
        return cls(True, True, addr, data)

    @property
    def is_read(self) -> bool:
        return self.enabled and not self.write_not_read

    @property
    def is_write(self) -> bool:
        return self.enabled and self.write_not_read


IDLE = PortRequest()


@dataclass(frozen=True)
class PortOutput:
    rdata: int = 0
    fresh: bool = False


@dataclass(frozen=True)
class SimConfig:
    """Wrapper configuration.

    The defaults give an 8-bit x 2048-word (16 Kb) macro clocked at 250 MHz
    with priority A > B > C > D. ``clk_freq_hz`` only affects reporting and
    the waveform time base.
    """

    word_width: int = 8
    array_words: int = 2048
    priority_order: tuple = DEFAULT_PRIORITY
    clk_freq_hz: int = 250_000_000
    init_fill: int = 0

    def __post_init__(self):
        order = tuple(PortId(p) if isinstance(p, int) and 0 <= p < N_PORTS else p
                      for p in self.priority_order)
        object.__setattr__(self, "priority_order", order)

    @property
    def capacity_bits(self) -> int:
        return self.word_width * self.array_words

    @property
    def word_mask(self) -> int:
        return (1 << self.word_width) - 1

    @property
    def addr_bits(self) -> int:
        return max(1, (self.array_words - 1).bit_length())

    @property
    def clk_hz(self) -> int:
        return int(self.clk_freq_hz)

    @property
    def period_ps(self) -> int:
        f = self.clk_hz
        return (10**12 + f // 2) // f

    def with_(self, **changes) -> "SimConfig":
        return replace(self, **changes)


def validate_config(cfg: SimConfig) -> SimConfig:
    """Return ``cfg`` unchanged, or raise the ConfigError naming the bad field."""
    order = cfg.priority_order
    if (len(order) != N_PORTS
            or not all(isinstance(p, PortId) for p in order)
            or len(set(order)) != N_PORTS):
        raise NonPermutationPriority(order)
    if not isinstance(cfg.word_width, int) or cfg.word_width < 1:
        raise ZeroWidth(cfg.word_width)
    if cfg.word_width > MAX_WORD_WIDTH:
        raise WidthTooLarge(cfg.word_width, MAX_WORD_WIDTH)
    if not isinstance(cfg.array_words, int) or cfg.array_words < 1:
        raise ZeroDepth(cfg.array_words)
    f = cfg.clk_freq_hz
    if (isinstance(f, bool) or not isinstance(f, (int, float))
            or not math.isfinite(f) or f <= 0 or f != int(f)
            or cfg.period_ps < MIN_PERIOD_PS):
        raise BadClock(f)
    if not 0 <= cfg.init_fill <= cfg.word_mask:
        raise BadFill(cfg.init_fill, cfg.word_width)
    return cfg


class EventKind(enum.Enum):
    CLKP = "CLKP"
    BACK = "BACK"
    CLK2 = "CLK2"


class ClockEvent(NamedTuple):
    kind: EventKind
    # 1-based pulse ordinal for BACK/CLK2, 0 for the CLKP spike
    k: int = 0

    def __repr__(self):
        if self.kind is EventKind.CLKP:
            return "ClkpSpike"
        name = "BackEdge" if self.kind is EventKind.BACK else "Clk2Edge"
        return f"{name}({self.k})"


@dataclass(frozen=True)
class ClockEvents:
    n_active: int
    events: tuple
    b1b0: Optional[int]

    def count(self, kind: EventKind) -> int:
        return sum(1 for e in self.events if e.kind is kind)


@dataclass
class EngineState:
    """Mutable wrapper state owned by a single engine run."""

    cycle: int
    latched: list
    selected: Optional[PortId]
    out_regs: list
    presented: list
    mem: "SramMacro"

    def copy(self) -> "EngineState":
        return EngineState(self.cycle, list(self.latched), self.selected,
                           list(self.out_regs), list(self.presented),
                           self.mem.copy())


@dataclass(frozen=True)
class Stats:
    cycles_run: int = 0
    sram_accesses: int = 0
    reads: int = 0
    writes: int = 0
    effective_rate_hz: float = 0
    bandwidth_bits_per_s: float = 0

    def as_lines(self) -> list:
        return [
            f"cycles: {self.cycles_run}",
            f"accesses: {self.sram_accesses}",
            f"reads: {self.reads}",
            f"writes: {self.writes}",
            f"effective_rate_hz: {_fmt_num(self.effective_rate_hz)}",
            f"bandwidth_bits_per_s: {_fmt_num(self.bandwidth_bits_per_s)}",
        ]


def _fmt_num(x) -> str:
    if float(x).is_integer():
        return str(int(x))
    return repr(float(x))


__all__ = [
    "N_PORTS", "MAX_WORD_WIDTH", "PortId", "DEFAULT_PRIORITY", "PortRequest",
    "IDLE", "PortOutput", "SimConfig", "validate_config", "EventKind",
    "ClockEvent", "ClockEvents", "EngineState", "Stats",
]
