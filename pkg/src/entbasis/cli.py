"""Command-line front end: ``entbasis {gen,enumerate,verify,bench}``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from pathlib import Path
from typing import Optional

from . import __version__
from .analysis import (
    DENSE_MAX_QUBITS,
    basis_labels,
    closed_form_state,
    verify_complete_basis,
    verify_index,
)
from .basis_index import (
    BasisIndex,
    as_pattern,
    from_ordinal,
    make_index,
    parse_sign,
    pattern_str,
    random_index,
    sign_str,
    to_ordinal,
)
from .circuit import build_basis_circuit, gate_counts
from .errors import EntBasisError, TooManyQubits
from .qasm_io import export_qasm
from .statevector import MAX_QUBITS, apply_gate, check_width, run, zero_state


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")


def _resolve_index(args, required: bool = True) -> tuple[Optional[BasisIndex], Optional[int]]:
    """Turn the selection flags into ``(index, seed)``."""
    n = args.n
    if n < 2:
        raise UsageError("--n", f"TooFewQubits: need at least 2 qubits, got {n}")
    by_pattern = args.pattern is not None or args.sign is not None
    sources = [by_pattern, args.ordinal is not None, args.seed is not None]
    if sum(sources) > 1:
        raise UsageError("--pattern/--sign, --ordinal, --seed", "choose exactly one index source")
    if sum(sources) == 0:
        if required:
            raise UsageError("--pattern/--sign, --ordinal, --seed", "an index source is required")
        return None, None

    if by_pattern:
        if args.pattern is None or args.sign is None:
            raise UsageError("--pattern/--sign", "both --pattern and --sign are required")
        try:
            pattern = as_pattern(args.pattern)
        except EntBasisError as exc:
            raise UsageError("--pattern", str(exc)) from None
        if len(pattern) != n - 1:
            raise UsageError("--pattern", f"expected {n - 1} bits for n={n}, got {len(pattern)}")
        try:
            sign = parse_sign(args.sign)
        except EntBasisError as exc:
            raise UsageError("--sign", str(exc)) from None
        return make_index(sign, pattern), None
    if args.ordinal is not None:
        try:
            return from_ordinal(args.ordinal, n), None
        except EntBasisError as exc:
            raise UsageError("--ordinal", str(exc)) from None
    try:
        return random_index(n, args.seed), args.seed
    except EntBasisError as exc:
        raise UsageError("--seed", str(exc)) from None


def _provenance(index: BasisIndex, seed: Optional[int]) -> str:
    s = "none" if seed is None else str(seed)
    return f"pattern={pattern_str(index.pattern)} sign={sign_str(index.sign)} seed={s}"


def _write(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    index, seed = _resolve_index(args)
    circuit = build_basis_circuit(index)
    state = closed_form_state(index)
    counts = gate_counts(index)
    fmt = args.format or "qasm"

    if fmt == "json":
        doc = {
            "n": index.n_qubits,
            "sign": sign_str(index.sign),
            "pattern": pattern_str(index.pattern),
            "seed": seed,
            "ordinal": to_ordinal(index),
            "circuit": circuit.render().splitlines(),
            "qasm": export_qasm(circuit),
            "state": str(state),
            "counts": {"cnot": counts.cnot_type, "single": counts.single_qubit},
        }
        text = json.dumps(doc, indent=2) + "\n"
    elif fmt == "qasm":
        text = (
            export_qasm(circuit, provenance=_provenance(index, seed))
            + f"// state: {state}\n"
            + f"// counts: cnot={counts.cnot_type} single={counts.single_qubit}\n"
        )
    else:
        text = (
            f"n={index.n_qubits} ordinal={to_ordinal(index)} {_provenance(index, seed)}\n"
            + circuit.render()
            + f"state: {state}\n"
            + f"counts: cnot={counts.cnot_type} single={counts.single_qubit}\n"
        )
    _write(args, text)
    return 0


def cmd_enumerate(args) -> int:
    n = args.n
    if n < 2:
        raise UsageError("--n", f"TooFewQubits: need at least 2 qubits, got {n}")
    fmt = args.format or "text"
    if fmt != "text" and n > DENSE_MAX_QUBITS and not args.force:
        raise UsageError("--n", f"--format {fmt} is limited to n <= {DENSE_MAX_QUBITS}")
    if n > MAX_QUBITS and not args.force:
        raise UsageError("--n", f"listing 2^{n} labels needs --force")

    if fmt == "qasm":
        if not args.out:
            raise UsageError("--out", "--format qasm writes one file per index into --out DIR")
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        width = len(str(2**n - 1))
        for k in range(2**n):
            index = from_ordinal(k, n)
            text = export_qasm(build_basis_circuit(index), provenance=_provenance(index, None))
            (outdir / f"basis_{k:0{width}d}.qasm").write_text(text, encoding="utf-8", newline="\n")
        return 0

    if fmt == "json":
        doc = []
        for k in range(2**n):
            index = from_ordinal(k, n)
            doc.append({
                "ordinal": k,
                "sign": sign_str(index.sign),
                "pattern": pattern_str(index.pattern),
                "state": str(closed_form_state(index)),
            })
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = "".join(_label_lines(n))
    _write(args, text)
    return 0


def _label_lines(n: int):
    """``<ordinal> <sign><pattern> <state>`` lines without building index objects."""
    idx_a, idx_b, sign = basis_labels(n)
    low = 2 ** (n - 1) - 1
    for k, a, b, s in zip(range(2**n), idx_a.tolist(), idx_b.tolist(), sign.tolist()):
        pattern = format(k & low, f"0{n - 1}b")[::-1]
        sym = "+" if s == 1 else "-"
        yield f"{k} {sym}{pattern} (|{a:0{n}b}> {sym} |{b:0{n}b}>)/sqrt(2)\n"


def cmd_verify(args) -> int:
    if args.format == "qasm":
        raise UsageError("--format", "verify reports are text or json")
    if args.all:
        if args.n < 2:
            raise UsageError("--n", f"TooFewQubits: need at least 2 qubits, got {args.n}")
        try:
            report = verify_complete_basis(args.n, args.mode, jobs=args.jobs, force=args.force)
        except TooManyQubits as exc:
            raise UsageError("--n", str(exc)) from None
    else:
        index, seed = _resolve_index(args)
        try:
            report = verify_index(index, seed=seed, force=args.force)
        except TooManyQubits as exc:
            raise UsageError("--n", str(exc)) from None
    text = report.to_json() if args.format == "json" else report.to_text()
    _write(args, text)
    return 0 if report.passed else 1


def cmd_bench(args) -> int:
    n = args.n
    if n < 2:
        raise UsageError("--n", f"TooFewQubits: need at least 2 qubits, got {n}")
    try:
        check_width(n, args.force)
    except TooManyQubits as exc:
        raise UsageError("--n", str(exc)) from None
    index, seed = _resolve_index(args, required=False)
    if index is None:
        index = make_index(1, [1] * (n - 1))
    circuit = build_basis_circuit(index)
    runs = max(args.runs, 5)

    per_gate = [[] for _ in circuit.gates]
    state = zero_state(n, force=args.force)
    for _ in range(runs):
        for i, g in enumerate(circuit.gates):
            t0 = time.perf_counter()
            apply_gate(state, g)
            per_gate[i].append(time.perf_counter() - t0)
    full = []
    for _ in range(runs):
        t0 = time.perf_counter()
        run(circuit, force=args.force)
        full.append(time.perf_counter() - t0)

    lines = [f"bench n={n} gates={len(circuit)} runs={runs} {_provenance(index, seed)}"]
    for g, times in zip(circuit.gates, per_gate):
        med = statistics.median(times)
        lines.append(f"gate {g.render():<12} median_s={med:.6e} amplitudes_per_s={2**n / med:.3e}")
    med = statistics.median(full)
    lines.append(
        f"circuit median_s={med:.6e} amplitudes_per_s={2**n * len(circuit) / med:.3e}"
    )
    _write(args, "\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entbasis", description="GHZ-type maximally entangled basis: circuits and checks."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default=None):
        p.add_argument("--n", type=int, required=True, help="number of qubits")
        p.add_argument("--format", choices=("text", "json", "qasm"), default=fmt_default)
        p.add_argument("--out", help="write output to this path instead of stdout")
        p.add_argument("--force", action="store_true", help="override memory guards")

    def selection(p):
        p.add_argument("--pattern", help="control pattern over {0,1}, qubit 1 first")
        p.add_argument("--sign", help="'+' or '-' (Z after the Hadamard)")
        p.add_argument("--ordinal", type=int, help="basis ordinal in [0, 2^n)")
        p.add_argument("--seed", type=int, help="64-bit PRNG seed (PCG64)")

    p = sub.add_parser("gen", help="build the circuit for one basis vector")
    common(p)
    selection(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("enumerate", help="list all 2^n basis vectors")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="verify one index or the complete basis")
    common(p)
    selection(p)
    p.add_argument("--all", action="store_true", help="verify all 2^n basis vectors")
    p.add_argument("--mode", choices=("dense", "sparse"), default="dense")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the statevector kernel on a basis circuit")
    common(p)
    selection(p)
    p.add_argument("--runs", type=int, default=5)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"entbasis {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (EntBasisError, OSError) as exc:
        print(f"entbasis {args.command}: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
