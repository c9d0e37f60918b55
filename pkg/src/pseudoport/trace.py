"""Signal-change collection, VCD serialisation, and run statistics.

A :class:`Trace` is an append-only list of ``(tick, signal, value)``
changes. :func:`emit_vcd` renders it as IEEE 1364 textual VCD and
:func:`parse_vcd` reads that subset back, which the tests use as a
round-trip oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import NonMonotonicTime, VCDParseError
from .model import PortId, SimConfig, Stats

CLOCK_SIGNALS = ("CLK", "CLKP", "BACK", "CLK2")
PORT_FIELDS = ("port_en", "w_rb", "addr", "w_data", "r_data")
SCOPE = "wrapper"

_UNITS = (("s", 10**12), ("ms", 10**9), ("us", 10**6), ("ns", 10**3), ("ps", 1))


class Signal(NamedTuple):
    name: str
    width: int = 1


def port_signal(port, fld):
    return f"{PortId(port).name}_{fld}"


def declare_signals(cfg: SimConfig):
    """Signals dumped for a wrapper run, in declaration (and identifier) order."""
    sigs = [Signal(name) for name in CLOCK_SIGNALS]
    sigs += [Signal("SEL", 2), Signal("B1B0", 2), Signal("MEM_EN")]
    widths = {"port_en": 1, "w_rb": 1, "addr": cfg.addr_bits,
              "w_data": cfg.word_width, "r_data": cfg.word_width}
    for port in PortId:
        sigs += [Signal(port_signal(port, f), widths[f]) for f in PORT_FIELDS]
    return sigs


@dataclass
class Trace:
    """Time-stamped value changes.

    ``origin`` is the tick of cycle 0's CLK rise and ``period`` the length of
    one external cycle in ticks; both only serve to window the trace by
    cycle. Recording a value equal to the signal's current one is a no-op.
    """

    signals: list
    timescale_ps: int = 1
    period: int = 0
    origin: int = 0
    initial: dict = field(default_factory=dict)
    changes: list = field(default_factory=list)

    def __post_init__(self):
        for s in self.signals:
            self.initial.setdefault(s.name, 0)
        self._current = dict(self.initial)
        self._stamp = {}
        self._widths = {s.name: s.width for s in self.signals}

    def record(self, tick, name, value):
        if name not in self._widths:
            raise KeyError(f"undeclared signal {name!r}")
        if self.changes and tick < self.changes[-1][0]:
            raise NonMonotonicTime(f"tick {tick} after {self.changes[-1][0]}")
        if self._current[name] == value:
            return
        if self._stamp.get(name) == tick:
            raise NonMonotonicTime(f"{name} changes twice at tick {tick}")
        self._current[name] = value
        self._stamp[name] = tick
        self.changes.append((tick, name, value))

    def extend(self, events):
        for tick, name, value in sorted(events, key=lambda e: e[0]):
            self.record(tick, name, value)

    def cycle_window(self, cycle):
        start = self.origin + cycle * self.period
        return start, start + self.period

    def rises(self, name, cycle=None):
        """Count 0->1 transitions of ``name``, optionally within one cycle."""
        lo, hi = self.cycle_window(cycle) if cycle is not None else (None, None)
        return sum(1 for t, n, v in self.changes
                   if n == name and v == 1
                   and (lo is None or lo <= t < hi))


def _timescale_text(ps):
    for unit, scale in _UNITS:
        if ps % scale == 0 and ps // scale in (1, 10, 100):
            return f"{ps // scale}{unit}"
    raise ValueError(f"timescale of {ps} ps is not a VCD magnitude")


def _identifier(i):
    chars = []
    i += 1
    while i:
        i, rem = divmod(i - 1, 94)
        chars.append(chr(33 + rem))
    return "".join(chars)


def _value_text(value, width, ident):
    if width == 1:
        return f"{value}{ident}"
    return f"b{value:b} {ident}"


def emit_vcd(trace: Trace, signals=None, *, version="pseudoport") -> str:
    """Render ``trace`` as VCD text. Byte-identical for identical traces."""
    signals = list(signals if signals is not None else trace.signals)
    ids = {s.name: _identifier(i) for i, s in enumerate(signals)}
    widths = {s.name: s.width for s in signals}
    out = [
        f"$version {version} $end",
        f"$timescale {_timescale_text(trace.timescale_ps)} $end",
        f"$scope module {SCOPE} $end",
    ]
    for s in signals:
        rng = f" [{s.width - 1}:0]" if s.width > 1 else ""
        out.append(f"$var wire {s.width} {ids[s.name]} {s.name}{rng} $end")
    out += ["$upscope $end", "$enddefinitions $end", "#0", "$dumpvars"]
    for s in signals:
        out.append(_value_text(trace.initial.get(s.name, 0), s.width, ids[s.name]))
    out.append("$end")

    last = None
    for tick, name, value in trace.changes:
        if last is not None and tick < last:
            raise NonMonotonicTime(f"tick {tick} after {last}")
        if tick != last:
            # time 0 is already open from $dumpvars
            if not (tick == 0 and last is None):
                out.append(f"#{tick}")
            last = tick
        out.append(_value_text(value, widths[name], ids[name]))
    return "\n".join(out) + "\n"


# -- minimal reader -----------------------------------------------------------

class ParsedVCD(NamedTuple):
    timescale_ps: int
    scope: str
    signals: list
    initial: dict
    changes: list


def _parse_timescale(tokens):
    text = "".join(tokens)
    for unit, scale in sorted(_UNITS, key=lambda u: -len(u[0])):
        if text.endswith(unit) and text[:-len(unit)].isdigit():
            return int(text[:-len(unit)]) * scale
    raise VCDParseError(f"unsupported timescale {text!r}")


def _parse_value(tok, toks, i):
    if tok[0] in "bB":
        try:
            return int(tok[1:], 2), toks[i + 1], i + 2
        except (ValueError, IndexError):
            raise VCDParseError(f"bad vector value {tok!r}") from None
    if tok[0] in "01" and len(tok) > 1:
        return int(tok[0]), tok[1:], i + 1
    raise VCDParseError(f"unsupported value change {tok!r}")


def parse_vcd(text: str) -> ParsedVCD:
    """Parse the VCD subset written by :func:`emit_vcd`.

    Changes at the ``$dumpvars`` time land in ``initial``; a later change at
    the same tick is reported as a change.
    """
    toks = text.split()
    i = 0
    timescale = None
    scope = []
    signals, names = [], {}

    def until_end(j):
        k = toks.index("$end", j)
        return toks[j:k], k + 1

    while i < len(toks):
        tok = toks[i]
        if tok == "$timescale":
            body, i = until_end(i + 1)
            timescale = _parse_timescale(body)
        elif tok == "$scope":
            body, i = until_end(i + 1)
            scope.append(body[1])
        elif tok == "$upscope":
            _, i = until_end(i + 1)
        elif tok == "$var":
            body, i = until_end(i + 1)
            if len(body) < 4:
                raise VCDParseError(f"short $var declaration {body!r}")
            width, ident, name = int(body[1]), body[2], body[3]
            signals.append(Signal(name, width))
            names[ident] = name
        elif tok in ("$version", "$date", "$comment"):
            _, i = until_end(i + 1)
        elif tok == "$enddefinitions":
            _, i = until_end(i + 1)
            break
        else:
            raise VCDParseError(f"unexpected token {tok!r} in header")
    else:
        raise VCDParseError("missing $enddefinitions")
    if timescale is None:
        raise VCDParseError("missing $timescale")

    initial = {s.name: 0 for s in signals}
    changes = []
    now = None
    in_dump = False
    while i < len(toks):
        tok = toks[i]
        if tok.startswith("#"):
            t = int(tok[1:])
            if now is not None and t < now:
                raise NonMonotonicTime(f"#{t} after #{now}")
            now = t
            i += 1
        elif tok in ("$dumpvars", "$dumpall", "$dumpon", "$dumpoff"):
            in_dump = tok == "$dumpvars"
            i += 1
        elif tok == "$end":
            in_dump = False
            i += 1
        else:
            value, ident, i = _parse_value(tok, toks, i)
            if ident not in names:
                raise VCDParseError(f"unknown identifier {ident!r}")
            if in_dump:
                initial[names[ident]] = value
            else:
                if now is None:
                    raise VCDParseError("value change before any timestamp")
                changes.append((now, names[ident], value))
    return ParsedVCD(timescale, ".".join(scope), signals, initial, changes)


# -- statistics ---------------------------------------------------------------

def summarize(accesses_per_cycle, cfg: SimConfig, reads=0, writes=None) -> Stats:
    """Aggregate per-cycle SRAM access counts into a :class:`Stats`.

    ``writes`` defaults to whatever is left after ``reads``. The effective
    rate is accesses per cycle times the external clock; it is computed as an
    exact integer ratio and is 0 for an empty run.
    """
    counts = list(accesses_per_cycle)
    cycles = len(counts)
    total = sum(counts)
    if writes is None:
        writes = total - reads
    if reads + writes != total:
        raise ValueError(f"reads {reads} + writes {writes} != accesses {total}")
    if cycles == 0:
        return Stats(0, 0, reads, writes, 0, 0)
    rate = (total * cfg.clk_hz) / cycles
    bandwidth = (total * cfg.clk_hz * cfg.word_width) / cycles
    return Stats(cycles, total, reads, writes, rate, bandwidth)
