"""Plain-text run configuration and per-cycle port stimulus.

Config: one ``key = value`` per line, ``#`` starts a comment::

    word_width  = 8
    array_words = 2048
    priority    = A,B,C,D
    clk_freq_hz = 250e6
    init_fill   = 0

Stimulus: one line per external cycle, four ``;``-separated fields (ports
A..D), each ``-`` (disabled), ``R:<addr>`` or ``W:<addr>:<data>``, numbers
in hexadecimal without prefix::

    W:5:AB; R:5; -; -
"""

from __future__ import annotations

import re

from .errors import AccessError, AddrOutOfRange, BadField, BadValue, ConfigError, DataTooWide, UnknownKey
from .model import N_PORTS, PortId, PortRequest, SimConfig, validate_config

CONFIG_KEYS = ("word_width", "array_words", "priority", "clk_freq_hz", "init_fill")
_FIELD_OF_KEY = {"priority": "priority_order"}
_KEY_OF_FIELD = {"priority_order": "priority"}

_HEX = r"([0-9A-Fa-f]+)"
_READ = re.compile(rf"[Rr]:{_HEX}")
_WRITE = re.compile(rf"[Ww]:{_HEX}:{_HEX}")


def _strip_comment(line):
    return line.split("#", 1)[0].strip()


def _parse_int(text):
    text = text.strip()
    try:
        return int(text, 0)
    except ValueError:
        pass
    value = float(text)  # accepts 250e6
    if not value.is_integer():
        raise ValueError(f"{text!r} is not an integer")
    return int(value)


def _parse_priority(text):
    parts = [p.strip() for p in text.split(",")]
    try:
        return tuple(PortId.parse(p) for p in parts)
    except KeyError as err:
        raise ValueError(f"unknown port {err.args[0]!r}") from None


def parse_config(text: str) -> SimConfig:
    """Parse a config file body. Omitted keys keep their defaults."""
    values, lines = {}, {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep:
            raise BadValue(key, lineno, "expected 'key = value'")
        if key not in CONFIG_KEYS:
            raise UnknownKey(key, lineno)
        if key in values:
            raise BadValue(key, lineno, f"duplicate key (first set on line {lines[key]})")
        try:
            parsed = _parse_priority(value) if key == "priority" else _parse_int(value)
        except ValueError as err:
            raise BadValue(key, lineno, str(err)) from err
        values[_FIELD_OF_KEY.get(key, key)] = parsed
        lines[key] = lineno

    cfg = SimConfig(**values)
    try:
        return validate_config(cfg)
    except ConfigError as err:
        key = _KEY_OF_FIELD.get(err.field, err.field)
        if key in lines:
            raise BadValue(key, lines[key], str(err)) from err
        raise


def render_config(cfg: SimConfig) -> str:
    return (f"word_width = {cfg.word_width}\n"
            f"array_words = {cfg.array_words}\n"
            f"priority = {','.join(p.name for p in cfg.priority_order)}\n"
            f"clk_freq_hz = {cfg.clk_hz}\n"
            f"init_fill = {cfg.init_fill:#x}\n")


def _parse_field(text, cycle, port, lineno):
    if text == "-":
        return PortRequest()
    m = _WRITE.fullmatch(text)
    if m:
        return PortRequest.write(int(m[1], 16), int(m[2], 16))
    m = _READ.fullmatch(text)
    if m:
        return PortRequest.read(int(m[1], 16))
    raise BadField(cycle, port, text, lineno, "expected '-', 'R:<addr>' or 'W:<addr>:<data>'")


def parse_stimulus(text: str, cfg: SimConfig = SimConfig()) -> list:
    """Parse stimulus text into a list of 4-tuples of PortRequest.

    Addresses and data are checked against ``cfg``; every error carries the
    0-based cycle index, the port and the 1-based line number.
    """
    cycles = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line:
            continue
        cycle = len(cycles)
        fields = [f.strip() for f in line.split(";")]
        if len(fields) != N_PORTS:
            port = min(len(fields), N_PORTS)
            raise BadField(cycle, port, line, lineno,
                           f"expected {N_PORTS} fields, got {len(fields)}")
        row = []
        for port, text_field in enumerate(fields):
            req = _parse_field(text_field, cycle, port, lineno)
            try:
                if req.enabled and not 0 <= req.addr < cfg.array_words:
                    raise AddrOutOfRange(req.addr, cfg.array_words)
                if req.is_write and req.wdata > cfg.word_mask:
                    raise DataTooWide(req.wdata, cfg.word_width)
            except AccessError as err:
                raise err.locate(port=port, cycle=cycle, line=lineno)
            row.append(req)
        cycles.append(tuple(row))
    return cycles


def render_request(req: PortRequest) -> str:
    if not req.enabled:
        return "-"
    if req.write_not_read:
        return f"W:{req.addr:X}:{req.wdata:X}"
    return f"R:{req.addr:X}"


def render_stimulus(stimulus) -> str:
    return "".join("; ".join(render_request(r) for r in row) + "\n" for row in stimulus)
