"""
One quad-port cycle, step by step
=================================

All four ports are enabled. Inputs are latched on CLKP, the FSM starts at
the highest-priority port and each port gets one SRAM access. Read data is
captured into the port's output register and shows up on the port one
external cycle later.
"""

from pseudoport import PortRequest as R, SimConfig, initial_state, wrapper_cycle

cfg = SimConfig()
state = initial_state(cfg)

# Port A writes 0xAB to address 5 and port B reads address 5 in the same
# cycle. A has higher priority, so B's read sees A's write.
cycle0 = (R.write(5, 0xAB), R.read(5), R.write(9, 0x11), R.write(9, 0x44))
state, presented, events = wrapper_cycle(state, cycle0, cfg)
print("cycle 0 presented:", [hex(o.rdata) for o in presented])
print("SEL walk:", ["ABCD"[v] for _, n, v in events if n == "SEL"])

# C and D both wrote address 9; D is serviced last so its value stays.
print("mem[9] =", hex(state.mem.peek(9)))

# Cycle 1: nothing enabled. The output registers filled in cycle 0 are now
# presented, and B's entry is flagged fresh.
state, presented, _ = wrapper_cycle(state, (R(),) * 4, cfg)
for port, out in zip("ABCD", presented):
    print(f"port {port}: rdata={out.rdata:#04x} fresh={out.fresh}")

# Reversing the priority changes who wins the collision.
rev = cfg.with_(priority_order=tuple(reversed(cfg.priority_order)))
s, _, _ = wrapper_cycle(initial_state(rev), cycle0, rev)
print("D>C>B>A: mem[9] =", hex(s.mem.peek(9)), " mem[5] =", hex(s.mem.peek(5)))
