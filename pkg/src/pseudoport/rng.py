"""xorshift64* pseudo-random generator.

Written out so stimulus streams are reproducible bit-for-bit by any port of
this tool:

    seeding:  state = (seed XOR 0x9E3779B97F4A7C15) mod 2**64, or
              0x9E3779B97F4A7C15 if that is zero
    step:     x ^= x >> 12;  x ^= x << 25 (mod 2**64);  x ^= x >> 27
    output:   (x * 0x2545F4914F6CDD1D) mod 2**64

``below(n)`` reduces one output modulo ``n``.
"""

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MULT = 0x2545F4914F6CDD1D


class XorShift64Star:
    def __init__(self, seed):
        state = (seed ^ GOLDEN) & MASK64
        self.state = state or GOLDEN

    def next_u64(self):
        x = self.state
        x ^= x >> 12
        x = (x ^ (x << 25)) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * MULT) & MASK64

    def below(self, n):
        if n <= 0:
            raise ValueError(f"bound must be positive, got {n}")
        return self.next_u64() % n

    def bits(self, width):
        """Uniform integer of ``width`` bits (``width`` <= 64)."""
        return self.next_u64() >> (64 - width) if width else 0

    def shuffle(self, items):
        """Fisher-Yates, in place, from the top index down."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items
