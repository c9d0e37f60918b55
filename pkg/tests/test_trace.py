import pytest
from hypothesis import given, settings, strategies as st

from pseudoport.engine import run_stimulus
from pseudoport.errors import NonMonotonicTime, VCDParseError
from pseudoport.model import PortRequest as R, SimConfig
from pseudoport.trace import Signal, Trace, declare_signals, emit_vcd, parse_vcd, summarize

IDLE = R()
FIG4 = [(R.read(0),) * 4,
        (R.read(0), R.read(1), IDLE, R.write(1, 1)),
        (IDLE, R.write(2, 2), R.read(2), IDLE),
        (IDLE, IDLE, IDLE, R.read(3))]


def test_empty_trace_is_header_and_dumpvars():
    tr = Trace(declare_signals(SimConfig()))
    text = emit_vcd(tr)
    assert "$timescale 1ps $end" in text
    assert "$scope module wrapper $end" in text
    assert text.rstrip().endswith("$end")
    parsed = parse_vcd(text)
    assert parsed.changes == []
    assert parsed.signals == tr.signals
    assert all(v == 0 for v in parsed.initial.values())


def test_declared_signals():
    names = [s.name for s in declare_signals(SimConfig())]
    assert names[:7] == ["CLK", "CLKP", "BACK", "CLK2", "SEL", "B1B0", "MEM_EN"]
    for port in "ABCD":
        for fld in ("port_en", "w_rb", "addr", "w_data", "r_data"):
            assert f"{port}_{fld}" in names


def test_fig4_back_toggles():
    res = run_stimulus(SimConfig(), FIG4)
    parsed = parse_vcd(emit_vcd(res.trace))
    back = [t for t, n, v in parsed.changes if n == "BACK"]
    assert len(back) == 2 * (4 + 3 + 2 + 1)
    period, origin = 4000, res.trace.origin
    per_cycle = [sum(1 for t, n, v in parsed.changes
                     if n == "BACK" and v == 1 and origin + c * period <= t < origin + (c + 1) * period)
                 for c in range(4)]
    assert per_cycle == [4, 3, 2, 1]


def test_identifiers_extend_past_94_signals():
    sigs = [Signal(f"s{i}") for i in range(200)]
    tr = Trace(sigs)
    tr.record(5, "s150", 1)
    parsed = parse_vcd(emit_vcd(tr))
    assert parsed.changes == [(5, "s150", 1)]


def test_tick_zero_changes_round_trip():
    tr = Trace([Signal("x"), Signal("v", 4)], initial={"x": 1})
    tr.record(0, "v", 9)
    tr.record(3, "x", 0)
    parsed = parse_vcd(emit_vcd(tr))
    assert parsed.initial == {"x": 1, "v": 0}
    assert parsed.changes == [(0, "v", 9), (3, "x", 0)]


def test_record_rejects_time_travel_and_glitches():
    tr = Trace([Signal("x"), Signal("y")])
    tr.record(10, "x", 1)
    with pytest.raises(NonMonotonicTime):
        tr.record(9, "y", 1)
    with pytest.raises(NonMonotonicTime):
        tr.record(10, "x", 0)
    tr.record(10, "x", 1)  # no change, ignored
    assert tr.changes == [(10, "x", 1)]


def test_emit_rejects_unsorted_changes():
    tr = Trace([Signal("x")])
    tr.changes = [(5, "x", 1), (4, "x", 0)]
    with pytest.raises(NonMonotonicTime):
        emit_vcd(tr)


def test_parser_errors():
    with pytest.raises(VCDParseError):
        parse_vcd("$timescale 1ps $end")
    with pytest.raises(VCDParseError):
        parse_vcd("$scope module m $end $var wire 1 ! x $end $upscope $end $enddefinitions $end #0 1!")


def test_timescale_units():
    for ps, text in [(1, "1ps"), (10, "10ps"), (1000, "1ns"), (100_000, "100ns")]:
        tr = Trace([Signal("x")], timescale_ps=ps)
        out = emit_vcd(tr)
        assert f"$timescale {text} $end" in out
        assert parse_vcd(out).timescale_ps == ps


requests = st.one_of(
    st.just(IDLE),
    st.builds(R.read, st.integers(0, 31)),
    st.builds(R.write, st.integers(0, 31), st.integers(0, 2**12 - 1)),
)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(requests, requests, requests, requests), max_size=12),
       st.sampled_from([250_000_000, 100_000_000, 333_000_000, 1_000_000_000]))
def test_vcd_round_trip(stim, freq):
    cfg = SimConfig(word_width=12, array_words=32, clk_freq_hz=freq)
    res = run_stimulus(cfg, stim)
    text = emit_vcd(res.trace)
    parsed = parse_vcd(text)
    assert parsed.changes == res.trace.changes
    assert parsed.initial == res.trace.initial
    assert [t for t, _, _ in parsed.changes] == sorted(t for t, _, _ in parsed.changes)
    assert emit_vcd(res.trace) == text


def test_summarize_thousand_quad_cycles():
    s = summarize([4] * 1000, SimConfig(), reads=1000)
    assert s.effective_rate_hz == 1_000_000_000
    assert s.bandwidth_bits_per_s == 8_000_000_000
    assert (s.reads, s.writes) == (1000, 3000)


def test_summarize_empty():
    s = summarize([], SimConfig())
    assert s.cycles_run == s.sram_accesses == 0
    assert s.effective_rate_hz == 0 and s.bandwidth_bits_per_s == 0


def test_summarize_mixed():
    s = summarize([4, 4, 1, 1], SimConfig())
    assert s.sram_accesses == 10
    assert s.effective_rate_hz == 625_000_000


def test_summarize_inconsistent_split():
    with pytest.raises(ValueError):
        summarize([1], SimConfig(), reads=1, writes=1)


def test_stats_lines():
    lines = summarize([4] * 1000, SimConfig()).as_lines()
    assert "effective_rate_hz: 1000000000" in lines
    assert "bandwidth_bits_per_s: 8000000000" in lines
