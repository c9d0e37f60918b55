"""Clock generator: turns the enabled-port count into one external period's
CLKP / BACK / CLK2 event sequence.

BACK carries one pulse per serviced port and CLK2 one fewer; the two are
interleaved capture-then-advance so a port's read lands in its output
register before the mux moves on.
"""

from .errors import OutOfRange
from .model import N_PORTS, ClockEvent, ClockEvents, EventKind

CLKP_SPIKE = ClockEvent(EventKind.CLKP, 0)


def count_enabled(requests):
    """Number of requests with ``enabled`` set (the N-ports-enabled block)."""
    return sum(1 for r in requests if r.enabled)


def encode_port_count(n):
    """B1B0 code for ``n`` enabled ports: 1 -> 0b00 ... 4 -> 0b11."""
    if isinstance(n, bool) or not isinstance(n, int) or not 1 <= n <= N_PORTS:
        raise OutOfRange(f"enabled-port count must be 1..{N_PORTS}, got {n!r}")
    return n - 1


def decode_port_count(b1b0):
    if not 0 <= b1b0 <= 0b11:
        raise OutOfRange(f"B1B0 must be a 2-bit value, got {b1b0!r}")
    return b1b0 + 1


def generate_clock_events(n_active):
    if not 0 <= n_active <= N_PORTS:
        raise OutOfRange(f"n_active must be 0..{N_PORTS}, got {n_active!r}")
    events = [CLKP_SPIKE]
    for k in range(1, n_active + 1):
        events.append(ClockEvent(EventKind.BACK, k))
        if k < n_active:
            events.append(ClockEvent(EventKind.CLK2, k))
    b1b0 = encode_port_count(n_active) if n_active else None
    return ClockEvents(n_active, tuple(events), b1b0)


def event_slot(event):
    """Slot index of ``event`` within the period (CLKP 0, BACK k 2k-1, CLK2 k 2k)."""
    if event.kind is EventKind.CLKP:
        return 0
    if event.kind is EventKind.BACK:
        return 2 * event.k - 1
    return 2 * event.k


def slot_count(n_active):
    return 2 * max(n_active, 1)


def slot_tick(slot, n_active, period):
    """Tick offset of ``slot`` from the start of the period.

    The period is split into ``slot_count(n_active)`` equal slots; integer
    division keeps the offsets exact and strictly increasing for
    ``period >= 2 * slot_count``.
    """
    return slot * period // slot_count(n_active)


def pulse_ticks(slot, n_active, period):
    """(rise, fall) offsets of a pulse occupying the first half of ``slot``."""
    start = slot_tick(slot, n_active, period)
    end = slot_tick(slot + 1, n_active, period)
    return start, start + max(1, (end - start) // 2)
