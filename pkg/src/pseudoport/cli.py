"""Command-line front end: ``run``, ``verify`` and ``gen``.

Exit codes: 0 success, 1 bad input (parse/validation/IO), 2 internal
invariant failure, 3 engine/oracle divergence.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .engine import run_stimulus
from .errors import AccessError, ConfigError, ParseError, SequencingError
from .model import SimConfig, validate_config
from .stimulus_io import parse_config, parse_stimulus, render_config, render_stimulus
from .trace import emit_vcd
from .verify import check_equivalence, seeded_case

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL, EXIT_DIVERGED = 0, 1, 2, 3


class _InputError(Exception):
    pass


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as err:
        raise _InputError(f"{path}: cannot read: {err.strerror or err}") from err


def _load_config(path):
    if path is None:
        return validate_config(SimConfig())
    try:
        return parse_config(_read(path))
    except (ParseError, ConfigError) as err:
        raise _InputError(f"{path}: {err}") from err


def _write(path, text):
    try:
        Path(path).write_text(text)
    except OSError as err:
        raise _InputError(f"{path}: cannot write: {err.strerror or err}") from err


def cmd_run(config_path, stimulus_path, vcd_out=None, stats_out=None, out=None):
    out = out or sys.stdout
    cfg = _load_config(config_path)
    try:
        stimulus = parse_stimulus(_read(stimulus_path), cfg)
    except (ParseError, AccessError) as err:
        raise _InputError(f"{stimulus_path}: {err}") from err
    result = run_stimulus(cfg, stimulus, trace=vcd_out is not None)
    if vcd_out is not None:
        _write(vcd_out, emit_vcd(result.trace))
    text = "\n".join(result.stats.as_lines()) + "\n"
    if stats_out is not None:
        _write(stats_out, text)
    out.write(text)
    return EXIT_OK


def cmd_verify(config_path, seed, n_cycles, out=None):
    out = out or sys.stdout
    base = _load_config(config_path)
    cfg, stimulus = seeded_case(base, seed, n_cycles)
    order = ">".join(p.name for p in cfg.priority_order)
    head = (f"verify: seed {seed}, {n_cycles} cycles, {cfg.word_width}x{cfg.array_words}, "
            f"priority {order}")
    div = check_equivalence(cfg, stimulus)
    if div is not None:
        out.write(f"{head}: MISMATCH\n{div}\n")
        return EXIT_DIVERGED
    verdict = "vacuous pass (no cycles)" if n_cycles == 0 else "engine matches oracle"
    out.write(f"{head}: {verdict}\n")
    return EXIT_OK


def cmd_gen(config_path, seed, n_cycles, out_path=None, config_out=None, out=None):
    out = out or sys.stdout
    cfg, stimulus = seeded_case(_load_config(config_path), seed, n_cycles)
    text = render_stimulus(stimulus)
    if config_out is not None:
        _write(config_out, render_config(cfg))
    if out_path is None:
        out.write(text)
    else:
        _write(out_path, text)
    return EXIT_OK


def _u64(text):
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError(f"{text} is not an unsigned 64-bit value")
    return value


def _count(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text} is negative")
    return value


class _Parser(argparse.ArgumentParser):
    # usage errors are bad input (1); argparse's default of 2 is reserved
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _Parser(
        prog="pseudoport",
        description="Cycle-accurate pseudo-quad-port SRAM wrapper simulator.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="simulate a stimulus file")
    run.add_argument("config", help="config file (key = value lines)")
    run.add_argument("stimulus", help="stimulus file (one line per cycle)")
    run.add_argument("--vcd", metavar="PATH", help="write the waveform as VCD")
    run.add_argument("--stats", metavar="PATH", help="also write stats to PATH")

    ver = sub.add_parser("verify", help="random engine-vs-oracle equivalence check")
    ver.add_argument("--config", metavar="PATH")
    ver.add_argument("--seed", type=_u64, default=1)
    ver.add_argument("--cycles", type=_count, default=10_000)

    gen = sub.add_parser("gen", help="write a seeded random stimulus")
    gen.add_argument("--config", metavar="PATH")
    gen.add_argument("--seed", type=_u64, default=1)
    gen.add_argument("--cycles", type=_count, default=100)
    gen.add_argument("-o", "--output", metavar="PATH")
    gen.add_argument("--config-out", metavar="PATH",
                     help="write the config with the seed's priority order")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return cmd_run(args.config, args.stimulus, args.vcd, args.stats)
        if args.command == "verify":
            return cmd_verify(args.config, args.seed, args.cycles)
        return cmd_gen(args.config, args.seed, args.cycles, args.output, args.config_out)
    except _InputError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except SequencingError as err:
        print(f"internal error: {err}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
