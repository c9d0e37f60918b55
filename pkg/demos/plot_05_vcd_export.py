"""
Writing a VCD waveform
======================

Any run can be dumped as a Value Change Dump for a waveform viewer such as
GTKWave. The file is deterministic, and the bundled parser reads it back
into the same change list.
"""

import sys
from pathlib import Path

from pseudoport import SimConfig, emit_vcd, parse_stimulus, parse_vcd, run_stimulus

data = Path(__file__).resolve().parent.parent / "data"
cfg = SimConfig()
stim = parse_stimulus((data / "fig4.stim").read_text(), cfg)
result = run_stimulus(cfg, stim)

text = emit_vcd(result.trace)
out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("fig4.vcd")
out.write_text(text)
print(f"wrote {out} ({len(text.splitlines())} lines, {len(result.trace.changes)} changes)")

parsed = parse_vcd(text)
assert parsed.changes == result.trace.changes
print("round trip OK;", "\n".join(result.stats.as_lines()), sep="\n")
