"""Behavioural single-port SRAM macro: an ideal word array, one access per call."""

import numpy as np

from .errors import AddrOutOfRange, DataTooWide
from .model import MAX_WORD_WIDTH


class SramMacro:
    """Word array of ``depth`` words of ``width`` bits.

    ``access_log`` holds one access count per external cycle; call
    :meth:`begin_cycle` to open a new entry. Accesses made before the first
    ``begin_cycle`` are counted in an implicit entry.
    """

    def __init__(self, depth, width, fill=0):
        if not 1 <= width <= MAX_WORD_WIDTH:
            raise ValueError(f"width must be 1..{MAX_WORD_WIDTH}, got {width}")
        if depth < 1:
            raise ValueError(f"depth must be >= 1, got {depth}")
        self.depth = depth
        self.width = width
        self.mask = (1 << width) - 1
        if not 0 <= fill <= self.mask:
            raise DataTooWide(fill, width)
        self.words = np.full(depth, fill, dtype=np.uint64)
        self.access_log = []

    @classmethod
    def from_config(cls, cfg):
        return cls(cfg.array_words, cfg.word_width, cfg.init_fill)

    def copy(self):
        other = object.__new__(SramMacro)
        other.depth, other.width, other.mask = self.depth, self.width, self.mask
        other.words = self.words.copy()
        other.access_log = list(self.access_log)
        return other

    def begin_cycle(self):
        self.access_log.append(0)

    def _count(self):
        if not self.access_log:
            self.access_log.append(0)
        self.access_log[-1] += 1

    def _check_addr(self, addr):
        if not 0 <= addr < self.depth:
            raise AddrOutOfRange(addr, self.depth)

    def read(self, addr):
        self._check_addr(addr)
        self._count()
        return int(self.words[addr])

    def write(self, addr, data):
        self._check_addr(addr)
        if not 0 <= data <= self.mask:
            raise DataTooWide(data, self.width)
        self._count()
        self.words[addr] = data

    def peek(self, addr):
        """Read without counting an access (for inspection only)."""
        self._check_addr(addr)
        return int(self.words[addr])

    def contents(self):
        return [int(w) for w in self.words]

    @property
    def total_accesses(self):
        return sum(self.access_log)

    # -- memory image: little-endian words, each padded to whole bytes --------

    @property
    def bytes_per_word(self):
        return (self.width + 7) // 8

    def dump_image(self):
        raw = self.words.astype("<u8").view(np.uint8).reshape(self.depth, 8)
        return raw[:, :self.bytes_per_word].tobytes()

    def load_image(self, blob):
        nb = self.bytes_per_word
        if len(blob) != self.depth * nb:
            raise ValueError(f"image is {len(blob)} bytes, expected {self.depth * nb}")
        raw = np.zeros((self.depth, 8), dtype=np.uint8)
        raw[:, :nb] = np.frombuffer(blob, dtype=np.uint8).reshape(self.depth, nb)
        words = raw.view("<u8").reshape(self.depth).astype(np.uint64)
        if np.any(words > np.uint64(self.mask)):
            bad = int(np.argmax(words > np.uint64(self.mask)))
            raise DataTooWide(int(words[bad]), self.width)
        self.words = words


def sram_read(macro, addr):
    return macro.read(addr)


def sram_write(macro, addr, data):
    macro.write(addr, data)
