import pytest

from pseudoport.clockgen import (
    count_enabled,
    decode_port_count,
    encode_port_count,
    event_slot,
    generate_clock_events,
    pulse_ticks,
    slot_count,
    slot_tick,
)
from pseudoport.errors import OutOfRange
from pseudoport.model import ClockEvent, EventKind, PortRequest

ON = PortRequest.read(0)
OFF = PortRequest()


@pytest.mark.parametrize("reqs, n", [
    ((ON, ON, ON, ON), 4),
    ((OFF, OFF, OFF, OFF), 0),
    ((ON, OFF, ON, OFF), 2),
])
def test_count_enabled(reqs, n):
    assert count_enabled(reqs) == n


def test_disabled_port_with_junk_fields_not_counted():
    assert count_enabled([PortRequest(False, True, 7, 9)] * 4) == 0


@pytest.mark.parametrize("n, code", [(1, 0b00), (2, 0b01), (3, 0b10), (4, 0b11)])
def test_b1b0_encoding(n, code):
    assert encode_port_count(n) == code
    assert decode_port_count(code) == n


@pytest.mark.parametrize("bad", [0, 5, -1, True])
def test_encoding_out_of_range(bad):
    with pytest.raises(OutOfRange):
        encode_port_count(bad)


def test_encoding_is_a_bijection():
    codes = {encode_port_count(n) for n in range(1, 5)}
    assert codes == {0b00, 0b01, 0b10, 0b11}
    for code in codes:
        assert encode_port_count(decode_port_count(code)) == code


@pytest.mark.parametrize("n", range(5))
def test_back_and_clk2_counts(n):
    ce = generate_clock_events(n)
    assert ce.n_active == n
    assert ce.count(EventKind.BACK) == n
    assert ce.count(EventKind.CLK2) == max(n - 1, 0)
    assert ce.count(EventKind.CLKP) == 1
    assert ce.events[0].kind is EventKind.CLKP
    assert ce.b1b0 == (n - 1 if n else None)


def test_four_port_sequence_exact():
    back = lambda k: ClockEvent(EventKind.BACK, k)
    clk2 = lambda k: ClockEvent(EventKind.CLK2, k)
    assert generate_clock_events(4).events == (
        ClockEvent(EventKind.CLKP), back(1), clk2(1), back(2), clk2(2),
        back(3), clk2(3), back(4))
    assert repr(generate_clock_events(2).events) == \
        "(ClkpSpike, BackEdge(1), Clk2Edge(1), BackEdge(2))"


def test_idle_cycle_is_clkp_only():
    assert generate_clock_events(0).events == (ClockEvent(EventKind.CLKP),)


@pytest.mark.parametrize("n", range(5))
def test_clk2_immediately_follows_its_back_edge(n):
    ev = generate_clock_events(n).events
    for i, e in enumerate(ev):
        if e.kind is EventKind.CLK2:
            assert ev[i - 1] == ClockEvent(EventKind.BACK, e.k)


@pytest.mark.parametrize("n", range(5))
def test_slots_are_ordered_and_fit_the_period(n):
    period = 4000
    slots = [event_slot(e) for e in generate_clock_events(n).events]
    assert slots == sorted(slots) and len(set(slots)) == len(slots)
    assert max(slots) < slot_count(n)
    ticks = [slot_tick(s, n, period) for s in range(slot_count(n) + 1)]
    assert ticks[0] == 0 and ticks[-1] == period
    assert all(a < b for a, b in zip(ticks, ticks[1:]))
    for s in slots:
        rise, fall = pulse_ticks(s, n, period)
        assert rise < fall <= slot_tick(s + 1, n, period)


def test_slot_positions_four_ports_at_250mhz():
    # 8 slots of 500 ps: BACK k at 1000k-500, CLK2 k at 1000k
    assert [slot_tick(event_slot(e), 4, 4000) for e in generate_clock_events(4).events] == \
        [0, 500, 1000, 1500, 2000, 2500, 3000, 3500]


def test_generate_rejects_bad_count():
    with pytest.raises(OutOfRange):
        generate_clock_events(5)
