"""Reference semantics for the wrapper, with no clocks, FSM or registers.

Each cycle is a plain fold over the enabled ports in priority order: writes
land immediately, reads see the memory as it stands at that point.
"""

from .errors import AccessError, AddrOutOfRange, DataTooWide


def _fold(mem, requests, priority, word_width):
    results = [None] * len(requests)
    for port in priority:
        req = requests[port]
        if not req.enabled:
            continue
        if not 0 <= req.addr < len(mem):
            raise AddrOutOfRange(req.addr, len(mem), port=port)
        if req.write_not_read:
            if word_width is not None and not 0 <= req.wdata < (1 << word_width):
                raise DataTooWide(req.wdata, word_width, port=port)
            mem[req.addr] = req.wdata
        else:
            results[port] = mem[req.addr]
    return results


def oracle_cycle(mem, requests, priority, word_width=None):
    """Return ``(new_mem, results)``; ``results[p]`` is None unless port p read."""
    new = list(mem)
    return new, _fold(new, requests, priority, word_width)


def oracle_run(cfg, stimulus):
    """Fold :func:`oracle_cycle` over ``stimulus`` from a freshly filled array."""
    mem = [cfg.init_fill] * cfg.array_words
    per_cycle = []
    for cycle, row in enumerate(stimulus):
        try:
            # in place: the fold never looks at an older memory image
            per_cycle.append(_fold(mem, row, cfg.priority_order, cfg.word_width))
        except AccessError as err:
            raise err.locate(cycle=cycle)
    return mem, per_cycle
