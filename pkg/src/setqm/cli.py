"""Command-line front end.

Subsets are written as comma-separated labels in braces ("{a,c}"),
partitions as blocks joined by '|' ("{a,b}|{c}"), attributes as
label:value pairs ("a:1,b:2,c:3"), and product states as pair lists
("{(a,a),(b,b)}"). Results go to stdout, errors to stderr; domain errors
exit 1, usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction

from . import dsl, presets
from .attributes import Attribute, measure, measure_probs
from .density import (
    entropy_increase,
    logical_entropy_rho,
    measure_density,
    purity,
    rho_of_partition,
    rho_of_subset,
)
from .dynamics import double_slit
from .entangle import bell_violation
from .errors import ParseError, SetQMError
from .partitions import Partition, logical_entropy, shannon_entropy
from .qc import BooleanFunction, parity_sat, teleport
from .space import BasisFrame, SubsetKet, Universe, born, bracket, ket_table


def _rat(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def _universe(dim: int) -> Universe:
    return presets.universe_ab() if dim == 2 else presets.universe_abc()


def _frames(dim: int) -> tuple[BasisFrame, BasisFrame, BasisFrame]:
    return presets.frames_ab() if dim == 2 else presets.frames_abc()


def _parse_subset(text: str, universe: Universe) -> SubsetKet:
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    labels = [x.strip() for x in body.split(",") if x.strip()]
    return universe.subset(labels)


def _parse_partition(text: str, universe: Universe) -> Partition:
    blocks = []
    for chunk in text.split("|"):
        blocks.append(_parse_subset(chunk, universe).labels)
    return Partition.from_blocks(universe, blocks)


def _parse_attr(text: str, universe: Universe) -> Attribute:
    values = {}
    for chunk in text.split(","):
        label, _, value = chunk.partition(":")
        if not value:
            raise SetQMError(f"attribute entries look like label:value, got {chunk!r}")
        try:
            values[label.strip()] = Fraction(value.strip())
        except ValueError:
            raise SetQMError(f"bad rational value in {chunk!r}") from None
    return Attribute.from_values(universe, values)


def _parse_pairs(text: str, dim: int):
    space = presets.pair_space() if dim == 2 else None
    if space is None:
        raise SetQMError("product states are only preset for --dim 2")
    pairs = re.findall(r"\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\)", text)
    if not pairs:
        raise SetQMError(f"no pairs found in {text!r}")
    return space.state(pairs)


def _emit(args, table_text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(table_text)


def _fmt_probs(probs: dict) -> str:
    return "\n".join(f"{label}  {value}" for label, value in probs.items())


def _cmd_ket_table(args) -> int:
    frames = _frames(args.dim)
    table = ket_table(args.dim, frames)
    _emit(args, table.to_text(), table.to_json())
    return 0


def _cmd_bracket(args) -> int:
    universe = _universe(args.dim)
    t = _parse_subset(args.t, universe)
    s = _parse_subset(args.s, universe)
    value = bracket(t, s)
    _emit(args, str(value), {"bracket": value})
    return 0


def _cmd_born(args) -> int:
    universe = _universe(args.dim)
    frames = {f.name: f for f in _frames(args.dim)}
    if args.frame not in frames:
        raise SetQMError(f"unknown frame {args.frame!r}; choose from {sorted(frames)}")
    s = _parse_subset(args.state, universe)
    probs = born(s, frames[args.frame])
    _emit(
        args,
        _fmt_probs(probs),
        {"state": list(s.labels), "frame": args.frame,
         "probabilities": {k: _rat(v) for k, v in probs.items()}},
    )
    return 0


def _cmd_measure(args) -> int:
    universe = _universe(args.dim)
    f = _parse_attr(args.attr, universe)
    s = _parse_subset(args.state, universe)
    probs = measure_probs(f, s)
    outcome = measure(f, s, random.Random(args.seed))
    text = "\n".join(
        [
            "eigenvalue probabilities",
            *(f"{r}  {p}" for r, p in probs.items()),
            f"observed eigenvalue: {outcome.eigenvalue}",
            f"probability: {outcome.probability}",
            f"post state: {outcome.post_state}",
        ]
    )
    _emit(
        args,
        text,
        {
            "probabilities": {_rat(r): _rat(p) for r, p in probs.items()},
            "eigenvalue": _rat(outcome.eigenvalue),
            "probability": _rat(outcome.probability),
            "post_state": list(outcome.post_state.labels),
        },
    )
    return 0


def _cmd_entropy(args) -> int:
    universe = _universe(args.dim)
    p = _parse_partition(args.partition, universe)
    h = logical_entropy(p)
    hs = shannon_entropy(p)
    _emit(
        args,
        f"h = {h}\nH = {hs:.4f}",
        {"partition": p.to_json(), "logical": _rat(h), "shannon": hs},
    )
    return 0


def _cmd_density(args) -> int:
    universe = _universe(args.dim)
    if (args.partition is None) == (args.state is None):
        raise SetQMError("give exactly one of --partition or --state")
    if args.partition is not None:
        rho = rho_of_partition(_parse_partition(args.partition, universe))
    else:
        rho = rho_of_subset(_parse_subset(args.state, universe))
    text = "\n".join(
        [rho.to_text(), f"purity = {purity(rho)}", f"h = {logical_entropy_rho(rho)}"]
    )
    _emit(
        args,
        text,
        {"matrix": rho.to_json(), "purity": _rat(purity(rho)),
         "logical_entropy": _rat(logical_entropy_rho(rho))},
    )
    return 0


def _cmd_measure_density(args) -> int:
    universe = _universe(args.dim)
    f = _parse_attr(args.attr, universe)
    if args.partition is not None:
        before = rho_of_partition(_parse_partition(args.partition, universe))
    else:
        before = rho_of_partition(Partition.indiscrete(universe))
    after = measure_density(f, before)
    gain = entropy_increase(before, after)
    text = "\n".join(
        ["before", before.to_text(), "after", after.to_text(), f"entropy increase = {gain}"]
    )
    _emit(
        args,
        text,
        {"before": before.to_json(), "after": after.to_json(),
         "entropy_increase": _rat(gain)},
    )
    return 0


def _cmd_double_slit(args) -> int:
    cfg = presets.double_slit_setup()
    dist = double_slit(cfg, args.measure_at_slits)
    _emit(
        args,
        _fmt_probs(dist),
        {"measured_at_slits": args.measure_at_slits,
         "distribution": {k: _rat(v) for k, v in dist.items()}},
    )
    return 0


def _cmd_bell(args) -> int:
    state = _parse_pairs(args.state, 2) if args.state else presets.bell_state()
    u, u1, u2 = presets.frames_ab()
    universe = presets.universe_ab()
    given = [universe.subset(["a", "b"]), universe.subset(["b"]), universe.subset(["a"])]
    frames = [u, u1, u2]

    header = ["state"] + [label for f in frames for label in f.labels]
    rows = []
    for s in given:
        cells = [str(s)]
        for f in frames:
            probs = born(s, f)
            cells.extend(str(probs[label]) for label in f.labels)
        rows.append(cells)
    widths = [max(len(header[i]), *(len(r[i]) for r in rows)) for i in range(len(header))]
    table_lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    for r in rows:
        table_lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)))

    report = bell_violation(state, frames)
    seq_lines = [f"Pr{k} = {v}" for k, v in report.terms.items()]
    verdict = "VIOLATED" if report.violated else "SATISFIED"
    terms = list(report.terms.values())
    verdict_line = f"{terms[0]} + {terms[1]} ≥ {terms[2]} : {verdict}"

    text = "\n".join(
        ["state-outcome probabilities", *table_lines, "",
         f"sequential pair probabilities for {state}", *seq_lines, "", verdict_line]
    )
    payload = {
        "state": [list(p) for p in state.sorted_pairs()],
        "state_outcome": {
            str(s): {label: _rat(born(s, f)[label]) for f in frames for label in f.labels}
            for s in given
        },
        **report.to_json(),
    }
    _emit(args, text, payload)
    return 0


def _cmd_teleport(args) -> int:
    rng = random.Random(args.seed)
    trace = teleport(args.alpha, args.beta, rng)
    ok = trace.bob == trace.input
    text = "\n".join(
        [
            f"input: ({trace.input[0]}, {trace.input[1]})",
            f"phi0 = {trace.phi0}",
            f"phi1 = {trace.phi1}",
            f"phi2 = {trace.phi2}",
            f"classical bit M = {trace.measured}",
            f"bob: ({trace.bob[0]}, {trace.bob[1]})",
            "teleported" if ok else "FAILED",
        ]
    )
    _emit(args, text, {**trace.to_json(), "teleported": ok})
    return 0


def _cmd_parity_sat(args) -> int:
    n = len(args.table)
    if n < 2 or n & (n - 1) or set(args.table) - {"0", "1"}:
        raise SetQMError("truth table must be a power-of-two string of 0/1 bits")
    f = BooleanFunction.from_bits(args.table)
    result = parity_sat(f)
    parity_word = "odd" if result.parity else "even"
    lines = [
        f"measured |{result.measured_bits}>",
        "slices: " + ", ".join(
            f"prefix {j} {'odd' if b else 'even'}"
            for j, b in enumerate(result.slice_parities)
        ),
        f"parity: {parity_word}",
    ]
    if f.arity == 1:
        lines.append(f"deutsch: {'balanced' if result.parity else 'constant'}")
    _emit(args, "\n".join(lines), {**result.to_json(), "table": args.table})
    return 0


def _cmd_run(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        text = fh.read()
    result = dsl.run(dsl.parse(text), seed=args.seed)
    lines = [f"{entry.label}: {entry.register}" for entry in result.trace]
    for m in result.measurements:
        lines.append(f"line {m.line} -> {m.outcome} (p = {m.probability})")
    _emit(args, "\n".join(lines), result.to_json())
    return 0


def _add_common(sub, dim: bool = True) -> None:
    sub.add_argument("--format", choices=("table", "json"), default="table")
    if dim:
        sub.add_argument("--dim", type=int, choices=(2, 3), default=3)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="setqm",
        description="Exact toy quantum mechanics on subsets of a finite universe.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("ket-table", help="every ket expressed in each preset basis")
    _add_common(p)
    p.set_defaults(fn=_cmd_ket_table)

    p = subs.add_parser("bracket", help="overlap |T ∩ S| of two subsets")
    p.add_argument("t")
    p.add_argument("s")
    _add_common(p)
    p.set_defaults(fn=_cmd_bracket)

    p = subs.add_parser("born", help="outcome probabilities of a state in a frame")
    p.add_argument("state")
    p.add_argument("--frame", required=True, help="U, U', or U''")
    _add_common(p)
    p.set_defaults(fn=_cmd_born)

    p = subs.add_parser("measure", help="measure an attribute on a state")
    p.add_argument("--attr", required=True, help="label:value pairs, e.g. a:1,b:2,c:3")
    p.add_argument("--state", required=True)
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(fn=_cmd_measure)

    p = subs.add_parser("entropy", help="logical and Shannon entropy of a partition")
    p.add_argument("--partition", required=True, help='blocks joined by |, e.g. "{a,b}|{c}"')
    _add_common(p)
    p.set_defaults(fn=_cmd_entropy)

    p = subs.add_parser("density", help="density matrix of a partition or state")
    p.add_argument("--partition")
    p.add_argument("--state")
    _add_common(p)
    p.set_defaults(fn=_cmd_density)

    p = subs.add_parser("measure-density", help="join-action of an attribute on a density matrix")
    p.add_argument("--attr", required=True)
    p.add_argument("--partition", help="initial mixed state; defaults to the blob")
    _add_common(p)
    p.set_defaults(fn=_cmd_measure_density)

    p = subs.add_parser("double-slit", help="wall distribution of the two-slit setup")
    p.add_argument("--measure-at-slits", action="store_true")
    _add_common(p, dim=False)
    p.set_defaults(fn=_cmd_double_slit)

    p = subs.add_parser("bell", help="state-outcome table and inequality violation")
    p.add_argument("--state", help='product state, e.g. "{(a,a),(b,b)}"')
    _add_common(p, dim=False)
    p.set_defaults(fn=_cmd_bell)

    p = subs.add_parser("teleport", help="one-classical-bit teleportation protocol")
    p.add_argument("--alpha", type=int, choices=(0, 1), required=True)
    p.add_argument("--beta", type=int, choices=(0, 1), required=True)
    p.add_argument("--seed", type=int, default=0)
    _add_common(p, dim=False)
    p.set_defaults(fn=_cmd_teleport)

    p = subs.add_parser("parity-sat", help="one-evaluation parity of a Boolean function")
    p.add_argument("--table", required=True, help="truth table bits, e.g. 1101")
    _add_common(p, dim=False)
    p.set_defaults(fn=_cmd_parity_sat)

    p = subs.add_parser("run", help="execute a .qc2 circuit file")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    _add_common(p, dim=False)
    p.set_defaults(fn=_cmd_run)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
        return 1
    except SetQMError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
