"""Command-line entry point: ``virbialg run <script>`` and ``virbialg selfcheck``."""
from __future__ import annotations

import argparse
import hashlib
import sys
from dataclasses import dataclass, field

from . import bialgebra, cohomology
from .bialgebra import Cobracket
from .cohomology import DerivationSpec, box_window
from .errors import VirBialgError
from .script import Script, ScriptSyntaxError, ScriptTypeError, _as_int, parse
from .tensor import antisym_defect

PASSING = {"OK", "TriangularCoboundary"}
REDUCE_PROBE = "x.r+twist(x.r)"


@dataclass
class Config:
    window: int = 5
    budget: int = 64
    verbosity: int = 1


@dataclass
class Certificate:
    command: str
    input_hash: str
    config: Config
    verdict: str = ""
    witness: list = field(default_factory=list)  # (key, value)
    defects: list = field(default_factory=list)
    probes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.verdict in PASSING

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def render(self) -> str:
        lines = [
            "INPUT",
            f"command: {self.command}",
            f"sha256: {self.input_hash}",
            f"window: {self.config.window}",
            f"budget: {self.config.budget}",
            "VERDICT",
            f"verdict: {self.verdict}",
        ]
        for title, items in (("WITNESS", self.witness), ("DEFECTS", self.defects), ("PROBES", self.probes)):
            lines.append(title)
            if not items:
                lines.append("count: 0")
            for k, v in items:
                lines.append(f"{k}: {v}")
        return "\n".join(lines) + "\n"


def _table_spec(table: dict) -> DerivationSpec:
    return DerivationSpec(list(table), table)


def _window_radius(args: dict, cfg: Config) -> int:
    if "radius" in args:
        return _as_int(args["radius"])
    return cfg.window


def _defect_lines(cert: Certificate, report, cfg: Config):
    groups = (
        ("anticommutativity", report.anticommutativity),
        ("co_jacobi", report.co_jacobi),
        ("compatibility", report.compatibility),
    )
    for name, d in groups:
        nz = [(k, v) for k, v in d.items() if v]
        cert.defects.append((f"{name}.checked", len(d)))
        cert.defects.append((f"{name}.nonzero", len(nz)))
        shown = d.items() if cfg.verbosity >= 2 else nz
        for k, v in shown:
            key = f"{k[0]},{k[1]}" if isinstance(k, tuple) else str(k)
            cert.defects.append((f"{name}[{key}]", v))
    if report.skipped:
        cert.defects.append(("skipped", len(report.skipped)))


def _probe_lines(cert: Certificate, probes, quantity: str = "x.c"):
    """quantity names what each probe x computes; a hit means it came out nonzero."""
    for i, (x, hit) in enumerate(probes):
        cert.probes.append((f"probe[{i}]", f"{x}: {quantity} {'!= 0' if hit else '= 0'}"))


def _cmd_cybe(cert, a, cfg):
    r = a["r"]
    c = bialgebra.cybe_residual(r)
    cert.witness.append(("r", r))
    cert.defects.append(("c(r)", c))
    cert.verdict = "OK" if not c else "CYBEFails"


def _cmd_mybe(cert, a, cfg):
    r = a["r"]
    c = bialgebra.cybe_residual(r)
    cert.witness.append(("r", r))
    if "x" in a:
        d = bialgebra.mybe_defect(r, a["x"])
        cert.witness.append(("x", a["x"]))
        cert.defects.append(("x.c(r)", d))
        cert.verdict = "OK" if not d else "MYBEFails"
        return
    if not c:
        cert.defects.append(("c(r)", c))
        cert.verdict = "OK"
        return
    w = cohomology.centralizer_witness(c, cfg.budget)
    _probe_lines(cert, w.probes, "x.c(r)")
    cert.witness.append(("x", w.x))
    cert.defects.append(("x.c(r)", w.image))
    cert.verdict = "MYBEFails"


def _cmd_cobracket(cert, a, cfg):
    delta = Cobracket.from_r(a["r"]) if "r" in a else Cobracket.tabulated(a["D"])
    v = bialgebra.cobracket_apply(delta, a["x"])
    cert.witness.append(("x", a["x"]))
    cert.witness.append(("delta(x)", v))
    cert.verdict = "OK"


def _cmd_michaelis(cert, a, cfg):
    r = bialgebra.michaelis_r(a["d"].to_cartan(), a["alpha"])
    cert.witness.append(("r", r))
    c = bialgebra.cybe_residual(r)
    anti = antisym_defect(r)
    cert.defects.append(("c(r)", c))
    cert.defects.append(("r+twist(r)", anti))
    cert.verdict = "OK" if not c and not anti else "Failed"


def _cmd_axioms(cert, a, cfg):
    if "r" in a:
        delta = Cobracket.from_r(a["r"])
        window = box_window(_window_radius(a, cfg))
        cert.witness.append(("r", a["r"]))
        report = bialgebra.check_cocommutator_axioms(delta, window)
    else:
        delta = Cobracket.tabulated(a["D"])
        window = list(a["D"])
        report = bialgebra.check_cocommutator_axioms(delta, window, skip_unevaluable=True)
    cert.witness.append(("window_size", len(window)))
    _defect_lines(cert, report, cfg)
    cert.verdict = "OK" if report.ok else "AxiomsFail"


def _cmd_innerize(cert, a, cfg):
    D = _table_spec(a["D"])
    w = cohomology.inner_witness_homogeneous(D, a["alpha"])
    cert.witness.append(("a", w.witness))
    cert.witness.append(("cartan", w.cartan))
    cert.witness.append(("verified", len(w.verified)))
    cert.verdict = "OK"


def _cmd_innerize0(cert, a, cfg):
    D = _table_spec(a["D"])
    w = cohomology.inner_witness_window(D)
    cert.witness.append(("u", w.witness))
    cert.witness.append(("rank", w.rank))
    cert.witness.append(("unknowns", w.unknowns))
    cert.witness.append(("equations", w.equations))
    cert.verdict = "OK"


def _cmd_witness(cert, a, cfg):
    c = a["c"]
    cert.witness.append(("c", c))
    if not c:
        cert.verdict = "ZeroTensor"
        return
    w = cohomology.centralizer_witness(c, cfg.budget)
    _probe_lines(cert, w.probes)
    cert.witness.append(("x", w.x))
    cert.defects.append(("x.c", w.image))
    cert.verdict = "OK"


def _cmd_reduce(cert, a, cfg):
    red = cohomology.reduce_to_antisymmetric(a["r"], cfg.budget)
    _probe_lines(cert, red.probes, REDUCE_PROBE)
    cert.witness.append(("r", a["r"]))
    if red.ok:
        cert.witness.append(("w", red.witness))
        cert.defects.append(("r-(1-twist)w", red.residual))
        cert.verdict = "OK" if not red.residual else "Failed"
    else:
        cert.witness.append(("probe", red.counterexample))
        cert.defects.append(("probe.r+twist(probe.r)", red.defect))
        cert.verdict = "NotAntisymmetric"


def _cmd_classify(cert, a, cfg):
    if "r" in a:
        D = DerivationSpec.inner(a["r"], box_window(cfg.window))
    else:
        D = _table_spec(a["D"])
    res = cohomology.classify(D, cfg.budget)
    cert.verdict = res.verdict
    cert.witness.append(("window_size", len(D.window)))
    cert.defects.append(("compatibility.checked", res.compatibility_checked))
    cert.defects.append(("compatibility.skipped", res.compatibility_skipped))
    if res.pair:
        cert.witness.append(("pair", f"{res.pair[0]},{res.pair[1]}"))
    if res.detail:
        cert.defects.append(("detail", res.detail))
    if res.r is not None:
        for alpha, piece in sorted(res.components.items(), key=lambda kv: kv[0].sort_key()):
            cert.witness.append((f"r[{alpha}]", piece))
        cert.witness.append(("r", res.r))
    for s, v in res.recovery_defects.items():
        cert.defects.append((f"recovery[{s}]", v))
    if res.reduction is not None:
        _probe_lines(cert, res.reduction.probes, REDUCE_PROBE)
        if res.reduction.ok:
            cert.defects.append(("r-(1-twist)w", res.reduction.residual))
        else:
            cert.witness.append(("probe", res.probe))
            cert.defects.append(("probe.r+twist(probe.r)", res.reduction.defect))
    if res.cr is not None:
        cert.defects.append(("c(r)", res.cr))
    if res.mybe_witness is not None:
        cert.witness.append(("mybe_x", res.mybe_witness.x))


DISPATCH = {
    "cybe": _cmd_cybe,
    "mybe": _cmd_mybe,
    "cobracket": _cmd_cobracket,
    "michaelis": _cmd_michaelis,
    "axioms": _cmd_axioms,
    "innerize": _cmd_innerize,
    "innerize0": _cmd_innerize0,
    "witness": _cmd_witness,
    "reduce": _cmd_reduce,
    "classify": _cmd_classify,
}


def run(script: Script, config: Config | None = None) -> Certificate:
    cfg = config or Config()
    cert = Certificate(
        command=script.command_text or "(none)",
        input_hash=hashlib.sha256(script.source.encode("utf-8")).hexdigest(),
        config=cfg,
    )
    if script.command is None:
        cert.verdict = "NoCommand"
        return cert
    try:
        env = script.evaluate(cfg.window)
        args = script.command_args(env, cfg.window)
        DISPATCH[script.command[0]](cert, args, cfg)
    except (VirBialgError, ScriptTypeError, ZeroDivisionError) as exc:
        cert.verdict = type(exc).__name__
        cert.defects.append(("error", str(exc)))
        if getattr(exc, "diagnostics", None):
            for k, v in exc.diagnostics.items():
                cert.defects.append((k, v))
        if getattr(exc, "probes", None):
            _probe_lines(cert, exc.probes)
    return cert


def run_source(source: str, config: Config | None = None) -> Certificate:
    return run(parse(source), config)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="virbialg", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)
    rp = sub.add_parser("run", help="run a script and print its certificate")
    rp.add_argument("script", help="script file, or - for stdin")
    rp.add_argument("--window", type=int, default=5, help="window box radius (default 5)")
    rp.add_argument("--budget", type=int, default=64, help="probe budget (default 64)")
    rp.add_argument("--out", help="write the certificate here instead of stdout")
    rp.add_argument("-v", "--verbosity", type=int, default=1)
    sp = sub.add_parser("selfcheck", help="run the embedded invariant suite")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--scale", type=float, default=1.0, help="multiply case counts")
    args = ap.parse_args(argv)

    if args.cmd == "selfcheck":
        from .selfcheck import run_selfcheck

        return run_selfcheck(seed=args.seed, scale=args.scale)

    source = sys.stdin.read() if args.script == "-" else open(args.script, encoding="utf-8").read()
    try:
        script = parse(source)
    except (ScriptSyntaxError, ScriptTypeError) as exc:
        print(f"{args.script}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    cert = run(script, Config(args.window, args.budget, args.verbosity))
    text = cert.render()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return cert.exit_code


if __name__ == "__main__":
    sys.exit(main())
