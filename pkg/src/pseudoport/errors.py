"""Exception hierarchy shared by every module of the simulator."""


class SimError(Exception):
    """Base class for all simulator errors."""


# -- configuration -----------------------------------------------------------

class ConfigError(SimError):
    """A SimConfig field violates its invariant. ``field`` names it."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


class NonPermutationPriority(ConfigError):
    def __init__(self, order):
        super().__init__("priority_order",
                         f"{list(order)!r} is not a permutation of A,B,C,D")


class ZeroWidth(ConfigError):
    def __init__(self, width):
        super().__init__("word_width", f"must be >= 1, got {width}")


class ZeroDepth(ConfigError):
    def __init__(self, depth):
        super().__init__("array_words", f"must be >= 1, got {depth}")


class WidthTooLarge(ConfigError):
    def __init__(self, width, limit):
        super().__init__("word_width", f"must be <= {limit}, got {width}")


class BadClock(ConfigError):
    def __init__(self, freq):
        super().__init__("clk_freq_hz", f"unusable clock frequency {freq!r}")


class BadFill(ConfigError):
    def __init__(self, fill, width):
        super().__init__("init_fill", f"{fill:#x} does not fit in {width} bits")


# -- value ranges ------------------------------------------------------------

class OutOfRange(SimError, ValueError):
    """An integer argument lies outside its legal domain."""


class AccessError(SimError):
    """Base for bad SRAM accesses; ``port`` and ``cycle`` are filled in when known."""

    def __init__(self, message, *, port=None, cycle=None, line=None):
        self.detail = message
        self.port = port
        self.cycle = cycle
        self.line = line
        super().__init__(self._render())

    def _render(self):
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.cycle is not None:
            where.append(f"cycle {self.cycle}")
        if self.port is not None:
            where.append(f"port {'ABCD'[int(self.port)]}")
        prefix = f"[{', '.join(where)}] " if where else ""
        return prefix + self.detail

    def locate(self, *, port=None, cycle=None, line=None):
        if line is not None:
            self.line = line
        if port is not None:
            self.port = port
        if cycle is not None:
            self.cycle = cycle
        self.args = (self._render(),)
        return self


class AddrOutOfRange(AccessError):
    def __init__(self, addr, depth, **where):
        super().__init__(f"address {addr:#x} outside 0..{depth - 1:#x}", **where)
        self.addr = addr


class DataTooWide(AccessError):
    def __init__(self, data, width, **where):
        super().__init__(f"data {data:#x} wider than {width} bits", **where)
        self.data = data


# -- engine bug guards -------------------------------------------------------

class SequencingError(SimError):
    """Internal invariant failure; never expected in a correct build."""


class CurrentDisabled(SequencingError):
    pass


class InternalSequencing(SequencingError):
    pass


# -- trace -------------------------------------------------------------------

class NonMonotonicTime(SimError):
    pass


class VCDParseError(SimError):
    pass


# -- text formats ------------------------------------------------------------

class ParseError(SimError):
    """Base for stimulus/config text errors. ``line`` is 1-based."""

    line = None


class UnknownKey(ParseError):
    def __init__(self, key, line):
        super().__init__(f"line {line}: unknown key {key!r}")
        self.key = key
        self.line = line


class BadValue(ParseError):
    def __init__(self, key, line, reason=""):
        msg = f"line {line}: bad value for {key!r}"
        super().__init__(f"{msg}: {reason}" if reason else msg)
        self.key = key
        self.line = line


class BadField(ParseError):
    def __init__(self, cycle, port, text, line, reason=""):
        msg = f"line {line}: cycle {cycle}, port {_port_name(port)}: bad field {text!r}"
        super().__init__(f"{msg} ({reason})" if reason else msg)
        self.cycle = cycle
        self.port = port
        self.text = text
        self.line = line


def _port_name(port):
    return "ABCD"[port] if port is not None and 0 <= port < 4 else str(port)
