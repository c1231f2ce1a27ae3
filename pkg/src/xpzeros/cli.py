"""Command-line front end.

Every command writes one table, CSV by default, with numbers at 12
significant digits.  Column sets are fixed per command (see ``COLUMNS``).
Failures print a single line ``error: <kind>: <message>`` to stderr and exit
with status 2 for bad input and 1 for computation failures.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings

from xpzeros import classical, spectrum
from xpzeros.errors import DomainError, MissedRootWarning, NoSolutionError, XPError
from xpzeros.numbertheory import dirichlet, polya, riemann
from xpzeros.params import ModelParams

COLUMNS = {
    "classical": ["energy", "p0", "period", "period_closed_form", "turning_point",
                  "counting_smooth", "area_over_2pi_hbar", "energy_drift"],
    "spectrum": ["index", "energy", "average_level", "delta", "determinant_residual"],
    "polya": ["index", "zero", "real", "asymptotic_value"],
    "average-zeros": ["n", "average_zero", "true_zero", "delta"],
    "dirichlet": ["q", "character", "a", "epsilon", "n", "average_zero", "eigenvalue", "delta"],
    "compare": ["n", "true_zero", "average_zero", "eigenvalue", "polya_zero",
                "delta_average", "delta_eigenvalue", "delta_polya"],
    "verify": ["check", "status", "detail"],
}


class UsageError(Exception):
    kind = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _json_value(value):
    if isinstance(value, float):
        return float(f"{value:.12g}")
    return value


def render(command, rows, fmt):
    columns = COLUMNS[command]
    if fmt == "json":
        records = [{c: _json_value(r.get(c)) for c in columns} for r in rows]
        return json.dumps({"command": command, "columns": columns, "rows": records}, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow([_fmt(r.get(c)) for c in columns])
    return buf.getvalue()


def _params(args) -> ModelParams:
    if args.h is not None and args.lp is not None:
        raise UsageError("give at most one of --h and --lp")
    lp = args.lp if args.lp is not None else (args.h / args.lx if args.h is not None else 2 * math.pi * args.hbar / args.lx)
    return ModelParams(hbar=args.hbar, lx=args.lx, lp=lp, theta=args.theta)


def _scan(args, lo, hi, step=None):
    lo = args.emin if args.emin is not None else lo
    hi = args.emax if args.emax is not None else hi
    step = args.step if args.step is not None else step
    if not lo < hi:
        raise UsageError(f"need emin < emax, got {lo} and {hi}")
    if step is not None and not step > 0:
        raise UsageError(f"step must be positive, got {step}")
    return lo, hi, step


def _nearest_mutual(values, targets):
    """For each target, the value whose nearest target it is (or None)."""
    out = [None] * len(targets)
    for v in values:
        j = min(range(len(targets)), key=lambda k: abs(targets[k] - v))
        i = min(range(len(values)), key=lambda k: abs(values[k] - targets[j]))
        if values[i] == v:
            out[j] = v
    return out


def _diff(a, b):
    return None if a is None or b is None else a - b


def cmd_classical(args, params):
    lo, hi, step = _scan(args, 2.5 * params.h, 100.0 * params.h)
    if lo <= 2.0 * params.h:
        raise UsageError(f"closed orbits need E > 2h = {2 * params.h:.6g}")
    step = step or (hi - lo) / 9.0
    count = int(math.floor((hi - lo) / step * (1 + 1e-12))) + 1
    rows = []
    for k in range(count):
        E = lo + k * step
        p0 = classical.momentum_at_wall(E, params)
        orbit = classical.integrate_orbit(p0, params)
        rows.append({
            "energy": E, "p0": p0, "period": orbit.period,
            "period_closed_form": classical.period(E, params),
            "turning_point": classical.turning_point(E, params),
            "counting_smooth": classical.counting_smooth(E, params),
            "area_over_2pi_hbar": classical.area_numeric(E, params) / (2 * math.pi * params.hbar),
            "energy_drift": orbit.energy_drift,
        })
    return rows


def cmd_spectrum(args, params):
    lo, hi, step = _scan(args, 5.0, 60.0)
    res = spectrum.solve_spectrum(params, lo, hi, scan_step=step)
    positives = [e for e in res.energies if e > params.h]
    levels = []
    n = 0
    while positives:
        level = spectrum.average_level(n, params)
        levels.append(level)
        if level > max(positives) + 10.0:
            break
        n += 1
    rows = []
    for ev in res.eigenvalues:
        level = delta = None
        if levels and ev.energy > params.h:
            level, delta = spectrum.pair_with_levels([ev.energy], levels)[0]
        rows.append({"index": ev.index, "energy": ev.energy, "average_level": level, "delta": delta,
                     "determinant_residual": ev.determinant_residual})
    return rows


def cmd_polya(args, params):
    zeros = polya.polya_zeros(args.tmax)
    return [{"index": k, "zero": z, "real": True, "asymptotic_value": polya.polya_asymptotic(z)}
            for k, z in enumerate(zeros)]


def cmd_average_zeros(args, params):
    true = riemann.load_zero_fixture()
    rows = []
    for n in range(args.nmax):
        t = riemann.riemann_average_zero(n)
        z = true[n] if n < len(true) else None
        rows.append({"n": n, "average_zero": t, "true_zero": z, "delta": _diff(z, t)})
    return rows


def cmd_dirichlet(args, params):
    if args.q < 1:
        raise UsageError(f"q must be >= 1, got {args.q}")
    lo, hi, step = _scan(args, 0.5, 60.0)
    chars = dirichlet.primitive_real_characters(args.q)
    if not chars:
        raise NoSolutionError(f"no primitive character with real root number mod {args.q}")
    rows = []
    for chi in chars:
        inv = dirichlet.character_invariants(chi)
        p = dirichlet.params_for_character(chi, hbar=args.hbar, lx=args.lx)
        energies = list(spectrum.solve_spectrum(p, lo, hi, scan_step=step).energies)
        zeros = []
        n = -4
        while len(zeros) < args.nmax:
            try:
                zeros.append((n, dirichlet.l_average_zero(chi, n)))
            except NoSolutionError:
                pass
            n += 1
        paired = _nearest_mutual(energies, [z for _, z in zeros]) if energies else [None] * len(zeros)
        label = "-".join(str(j) for j in chi.label) or "0"
        for (n, z), e in zip(zeros, paired):
            rows.append({"q": args.q, "character": label, "a": inv.a_chi,
                         "epsilon": int(round(inv.epsilon_chi.real)), "n": n,
                         "average_zero": z, "eigenvalue": e, "delta": _diff(e, z)})
    return rows


def cmd_compare(args, params):
    true = riemann.load_zero_fixture()[: args.nmax]
    t_hi = true[-1] + 2.0
    energies = list(spectrum.solve_spectrum(params, 5.0, t_hi).energies)
    polya_zeros = list(polya.polya_zeros(t_hi))
    averages = [riemann.riemann_average_zero(n) for n in range(len(true))]
    eig = _nearest_mutual(energies, averages)
    pz = _nearest_mutual(polya_zeros, true)
    rows = []
    for n, (z, t, e, w) in enumerate(zip(true, averages, eig, pz)):
        rows.append({"n": n, "true_zero": z, "average_zero": t, "eigenvalue": e, "polya_zero": w,
                     "delta_average": t - z, "delta_eigenvalue": _diff(e, z), "delta_polya": _diff(w, z)})
    return rows


def cmd_verify(args, params):
    from xpzeros.verify import run_checks

    results = run_checks()
    args.failed = any(not r.ok for r in results)
    return [{"check": r.name, "status": r.status, "detail": r.detail} for r in results]


COMMANDS = {
    "classical": cmd_classical,
    "spectrum": cmd_spectrum,
    "polya": cmd_polya,
    "average-zeros": cmd_average_zeros,
    "dirichlet": cmd_dirichlet,
    "compare": cmd_compare,
    "verify": cmd_verify,
}


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--hbar", type=float, default=1.0)
    common.add_argument("--lx", type=float, default=1.0)
    common.add_argument("--lp", type=float, default=None, help="momentum scale (default 2 pi hbar / lx)")
    common.add_argument("--h", type=float, default=None, help="action lx*lp, alternative to --lp")
    common.add_argument("--theta", type=float, default=math.pi / 4)
    common.add_argument("--emin", type=float, default=None)
    common.add_argument("--emax", type=float, default=None)
    common.add_argument("--step", type=float, default=None)
    common.add_argument("--q", type=int, default=3)
    common.add_argument("--nmax", type=int, default=10)
    common.add_argument("--tmax", type=float, default=60.0)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", default=None, help="output path (default stdout)")

    parser = _Parser(prog="xpzeros", description="Spectrum of the regularized xp Hamiltonian and the average Riemann zeros.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def _validate(args):
    for name in ("hbar", "lx", "lp", "h", "theta", "emin", "emax", "step", "tmax"):
        value = getattr(args, name)
        if value is not None and not math.isfinite(value):
            raise UsageError(f"--{name} must be finite")
    if args.nmax < 1:
        raise UsageError(f"--nmax must be >= 1, got {args.nmax}")
    if not args.tmax > 0:
        raise UsageError(f"--tmax must be positive, got {args.tmax}")


def run(argv=None, stdout=None):
    """Parse ``argv``, run the command and write its table; returns the exit status."""
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        _validate(args)
        params = _params(args)
        args.failed = False
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", MissedRootWarning)
            rows = COMMANDS[args.command](args, params)
        text = render(args.command, rows, args.format)
        if args.output:
            with open(args.output, "w", newline="") as fh:
                fh.write(text)
        else:
            stdout.write(text)
        return 1 if args.failed else 0
    except (UsageError, DomainError) as exc:
        print(f"error: {exc.kind}: {exc}", file=sys.stderr)
        return 2
    except XPError as exc:
        print(f"error: {exc.kind}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
