"""Priority encoder and the port-walking FSM.

The FSM is reset to the highest-priority enabled port on every CLKP spike
and moves to the next enabled port (in priority order) on every CLK2 edge.
Disabled ports are skipped, which is what makes N-1 advances visit exactly
N ports.
"""

from .errors import CurrentDisabled


def highest_priority(enabled_mask, priority):
    """First port of ``priority`` whose bit is set in ``enabled_mask``, or None."""
    for port in priority:
        if enabled_mask[port]:
            return port
    return None


def fsm_reset(enabled_mask, priority):
    # Same combinational result as the encoder; fired by CLKP rather than CLK2.
    return highest_priority(enabled_mask, priority)


def fsm_step(current, enabled_mask, priority):
    """Next enabled port strictly after ``current``, wrapping to the first."""
    if not enabled_mask[current]:
        raise CurrentDisabled(f"FSM is parked on disabled port {current!r}")
    order = list(priority)
    pos = order.index(current)
    for port in order[pos + 1:] + order[:pos + 1]:
        if enabled_mask[port]:
            return port
    raise CurrentDisabled("unreachable: current port is enabled")  # pragma: no cover


def service_order(enabled_mask, priority):
    """Ports visited by reset followed by N-1 steps."""
    first = fsm_reset(enabled_mask, priority)
    if first is None:
        return []
    seq = [first]
    for _ in range(sum(map(bool, enabled_mask)) - 1):
        seq.append(fsm_step(seq[-1], enabled_mask, priority))
    return seq
