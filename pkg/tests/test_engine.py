import pytest
from hypothesis import given, settings, strategies as st

from pseudoport import engine
from pseudoport.engine import effective_access_rate, initial_state, run_stimulus, wrapper_cycle
from pseudoport.errors import AddrOutOfRange, DataTooWide, OutOfRange
from pseudoport.model import PortId, PortOutput, PortRequest as R, SimConfig
from pseudoport.oracle import oracle_run

A, B, C, D = PortId
IDLE = R()
CFG = SimConfig()


def test_four_writes_in_one_cycle():
    reqs = (R.write(1, 0x11), R.write(2, 0x22), R.write(3, 0x33), R.write(4, 0x44))
    st0 = initial_state(CFG)
    st1, presented, _ = wrapper_cycle(st0, reqs, CFG)
    assert [st1.mem.peek(a) for a in (1, 2, 3, 4)] == [0x11, 0x22, 0x33, 0x44]
    assert st1.mem.access_log == [4]
    assert st1.cycle == 1
    # the input state is untouched
    assert st0.cycle == 0 and st0.mem.peek(1) == 0


def test_idle_cycle_changes_nothing():
    s, _, _ = wrapper_cycle(initial_state(CFG), (IDLE, R.read(0), IDLE, IDLE), CFG)
    s2, presented, _ = wrapper_cycle(s, (IDLE,) * 4, CFG)
    assert presented == s.out_regs
    assert s2.mem.contents() == s.mem.contents()
    assert s2.mem.access_log[-1] == 0
    assert s2.selected is None


def test_write_then_read_same_cycle_presented_next_cycle():
    stim = [(R.write(5, 0xAB), R.read(5), IDLE, IDLE), (IDLE,) * 4]
    res = run_stimulus(CFG, stim)
    assert res.outputs[0][B] == PortOutput(0, False)
    assert res.outputs[1][B] == PortOutput(0xAB, True)
    # confirmed by the oracle
    _, reads = oracle_run(CFG, stim[:1])
    assert reads[0][B] == 0xAB


def test_last_serviced_writer_wins():
    res = run_stimulus(CFG, [(R.write(9, 0x11), IDLE, IDLE, R.write(9, 0x44))])
    assert res.state.mem.peek(9) == 0x44
    prio = SimConfig(priority_order=(D, C, B, A))
    res = run_stimulus(prio, [(R.write(9, 0x11), IDLE, IDLE, R.write(9, 0x44))])
    assert res.state.mem.peek(9) == 0x11


def test_writing_port_keeps_register_but_loses_fresh():
    stim = [(R.read(0), IDLE, IDLE, IDLE),
            (R.write(0, 7), IDLE, IDLE, IDLE),
            (IDLE,) * 4]
    res = run_stimulus(SimConfig(init_fill=3), stim)
    assert res.outputs[1][A] == PortOutput(3, True)
    assert res.outputs[2][A] == PortOutput(3, False)


def test_selected_port_after_cycle_is_last_serviced():
    s, _, _ = wrapper_cycle(initial_state(CFG), (R.read(0), IDLE, R.read(0), IDLE), CFG)
    assert s.selected == C
    assert s.latched[2] == R.read(0)


def test_request_errors_name_the_port():
    with pytest.raises(AddrOutOfRange) as info:
        wrapper_cycle(initial_state(CFG), (IDLE, IDLE, R.read(2048), IDLE), CFG)
    assert info.value.port == C
    with pytest.raises(DataTooWide) as info:
        run_stimulus(CFG, [(IDLE,) * 4, (IDLE, R.write(0, 256), IDLE, IDLE)])
    assert (info.value.cycle, info.value.port) == (1, B)


def test_disabled_port_fields_are_ignored():
    junk = R(False, True, 99999, 2**40)
    res = run_stimulus(CFG, [(junk,) * 4])
    assert res.stats.sram_accesses == 0


def test_fig4_scenario_pulse_counts():
    stim = [(R.read(0),) * 4,
            (R.read(0), R.read(1), IDLE, R.write(1, 1)),
            (IDLE, R.write(2, 2), R.read(2), IDLE),
            (IDLE, IDLE, IDLE, R.read(3))]
    res = run_stimulus(CFG, stim)
    assert [res.trace.rises("BACK", c) for c in range(4)] == [4, 3, 2, 1]
    assert [res.trace.rises("CLK2", c) for c in range(4)] == [3, 2, 1, 0]
    assert [res.trace.rises("CLKP", c) for c in range(4)] == [1, 1, 1, 1]
    assert res.stats.sram_accesses == 10


def test_sel_follows_service_order():
    cfg = SimConfig(priority_order=(C, A, D, B))
    res = run_stimulus(cfg, [(R.read(0), R.read(0), R.read(0), IDLE)])
    sels = [v for t, n, v in res.trace.changes if n == "SEL"]
    assert sels == [C, A, B]
    mem_en = [v for t, n, v in res.trace.changes if n == "MEM_EN"]
    assert mem_en == [1, 0, 1, 0, 1, 0]


def test_thousand_cycle_all_port_run():
    row = (R.write(1, 1), R.read(1), R.write(2, 2), R.read(2))
    res = run_stimulus(CFG, [row] * 1000, trace=False)
    assert res.stats.sram_accesses == 4000
    assert res.stats.reads == res.stats.writes == 2000
    assert res.state.mem.total_accesses == 4000


def test_empty_stimulus():
    res = run_stimulus(CFG, [])
    assert res.outputs == [] and res.trace.changes == []
    assert res.stats.cycles_run == 0 and res.stats.sram_accesses == 0


@pytest.mark.parametrize("n, f, want", [(4, 250e6, 1e9), (1, 250e6, 250e6), (2.5, 250e6, 625e6)])
def test_effective_access_rate(n, f, want):
    assert effective_access_rate(n, f) == want


def test_effective_access_rate_negative():
    with pytest.raises(OutOfRange):
        effective_access_rate(-1, 250e6)


def test_fault_hook_is_applied(monkeypatch):
    monkeypatch.setattr(engine, "FAULT_HOOK", lambda c, p, v: v ^ 1)
    res = run_stimulus(CFG, [(R.read(0), IDLE, IDLE, IDLE)])
    assert res.state.out_regs[A].rdata == 1


requests = st.one_of(
    st.just(IDLE),
    st.builds(R.read, st.integers(0, 7)),
    st.builds(R.write, st.integers(0, 7), st.integers(0, 255)),
)
rows = st.tuples(requests, requests, requests, requests)
small = SimConfig(array_words=8)


@settings(max_examples=200, deadline=None)
@given(st.lists(rows, max_size=12), st.permutations(list(PortId)))
def test_contention_free_and_ordered(stim, prio):
    cfg = small.with_(priority_order=tuple(prio))
    res = run_stimulus(cfg, stim)
    for c, row in enumerate(stim):
        n = sum(r.enabled for r in row)
        assert res.state.mem.access_log[c] == n
        assert res.trace.rises("BACK", c) == n
        lo, hi = res.trace.cycle_window(c)
        strobes = [t for t, name, v in res.trace.changes if name == "MEM_EN" and v == 1 and lo <= t < hi]
        assert len(strobes) == len(set(strobes)) == n


@settings(max_examples=100, deadline=None)
@given(st.lists(rows, max_size=10))
def test_determinism(stim):
    a = run_stimulus(small, stim)
    b = run_stimulus(small, stim)
    assert a.trace.changes == b.trace.changes and a.stats == b.stats
