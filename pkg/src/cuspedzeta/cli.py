"""Command-line front end.

JSON is the output contract (sorted keys, 17-significant-digit floats,
newline-terminated); text notes go to stderr.  Exit codes: 64 usage,
65 invalid input data, 70 computation failure; `verify` additionally
uses 0/2/3 for the report verdict.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import cuspterms, laplace, ruelle, spectrum, verdict
from .alexander import alexander_invariant, twisted_betti
from .errors import (ConvergenceRegionError, CuspedZetaError,
                     ExtrapolationUnstable, FormatError, NotTorsion,
                     PoleEvaluation, PoleOnAxis, PresentationSyntaxError,
                     QuadratureFailure, RealAlpha, UnsupportedAtom,
                     ValidationError)
from .laurent import format_poly
from .presentation import parse_presentation, peripheral_trivial

EX_USAGE = 64
EX_DATAERR = 65
EX_SOFTWARE = 70

_INPUT_ERRORS = (PresentationSyntaxError, ValidationError, FormatError,
                 PoleOnAxis, json.JSONDecodeError)
_COMPUTE_ERRORS = (NotTorsion, ConvergenceRegionError, QuadratureFailure,
                   PoleEvaluation, RealAlpha, UnsupportedAtom,
                   ExtrapolationUnstable)


def _fmt_float(x: float) -> str:
    return format(x, ".17g")


def _jdump(obj, out):
    """Deterministic JSON: sorted keys, fixed float formatting."""
    def emit(o, indent):
        pad = "  " * indent
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = [f'{pad}  {json.dumps(k)}: {emit(o[k], indent + 1)}'
                     for k in sorted(o)]
            return "{\n" + ",\n".join(items) + "\n" + pad + "}"
        if isinstance(o, (list, tuple)):
            if not o:
                return "[]"
            items = [f"{pad}  {emit(v, indent + 1)}" for v in o]
            return "[\n" + ",\n".join(items) + "\n" + pad + "]"
        if isinstance(o, bool) or o is None or isinstance(o, (int, str)):
            return json.dumps(o)
        if isinstance(o, float):
            return _fmt_float(o)
        raise TypeError(f"not JSON-serializable: {type(o)}")
    out.write(emit(obj, 0) + "\n")


def threads() -> int:
    """Worker-count hint from CUSPED_ZETA_THREADS; results never depend
    on it (all reductions are deterministic)."""
    raw = os.environ.get("CUSPED_ZETA_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError:
        raise ValidationError(["CUSPED_ZETA_THREADS must be an integer"])
    if n < 1:
        raise ValidationError(["CUSPED_ZETA_THREADS must be at least 1"])
    return n


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_presentation(path: str):
    return parse_presentation(_read(path))


def _load_matrices(path: str):
    d = json.loads(_read(path))
    gens = [spectrum.MoebiusMatrix(*(complex(p[0], p[1]) for p in g))
            for g in d["generators"]]
    rho = [complex(p[0], p[1]) for p in d.get(
        "rho", [[1.0, 0.0]] * len(gens))]
    return gens, rho, float(d.get("covolume", 1.0)), float(d.get("volume", 1.0))


def _load_lattice(path: str):
    d = json.loads(_read(path))
    lat = cuspterms.Lattice2D(complex(d["b1"][0], d["b1"][1]),
                              complex(d["b2"][0], d["b2"][1]))
    chi_raw = d.get("chi", [[1.0, 0.0], [1.0, 0.0]])
    chi = cuspterms.LatticeCharacter(complex(chi_raw[0][0], chi_raw[0][1]),
                                     complex(chi_raw[1][0], chi_raw[1][1]))
    return lat, chi


def _mero_json(m: laplace.MeroSum) -> dict:
    return laplace.mero_to_json(m)


def _complex_json(z: complex):
    return [z.real, z.imag]


# ---------------------------------------------------------------------------
# subcommand bodies

def _cmd_alexander(args, out):
    p, eps, rho = _load_presentation(args.presentation)
    data = alexander_invariant(p, rho, eps)
    _jdump({
        "char0": format_poly(data.char0),
        "char1": format_poly(data.char1),
        "char2": format_poly(data.char2),
        "h0": data.h0,
        "h0InfinityVanishes": data.h0_infinity_vanishes,
        "h1": data.h1,
        "h1Divisors": [format_poly(d) for d in data.h1_divisors],
        "ordAtOne": data.ord_at_one,
        "semisimpleAtOne": data.semisimple_at_one,
    }, out)
    return 0


def _cmd_betti(args, out):
    p, eps, rho = _load_presentation(args.presentation)
    h0, h1 = twisted_betti(p, rho)
    _jdump({"deltaRho": peripheral_trivial(p, rho), "h0": h0, "h1": h1}, out)
    return 0


def _cmd_spectrum_enumerate(args, out):
    gens, rho, covolume, volume = _load_matrices(args.matrices)
    sp = spectrum.enumerate_classes(
        gens, rho, max_word_len=args.max_word_len,
        cutoff_length=args.cutoff, covolume=covolume, volume=volume,
        complete=args.complete)
    from .words import format_letters
    lines = [f"# cutoff={_fmt_float(sp.cutoff_length)} "
             f"covolume={_fmt_float(sp.lattice_covolume)} "
             f"volume={_fmt_float(sp.volume)}",
             f"# max_word_len={sp.max_word_len} "
             f"complete={1 if sp.complete else 0}"]
    for c in sp.classes:
        lines.append(",".join([
            _fmt_float(c.length), _fmt_float(c.holonomy),
            _fmt_float(c.char_value.real), _fmt_float(c.char_value.imag),
            _fmt_float(c.primitive_length), str(c.multiplicity),
            format_letters(c.word)]))
    out.write("\n".join(lines) + "\n")
    return 0


def _cmd_ruelle_eval(args, out):
    sp = spectrum.load_spectrum(args.spectrum)
    rep = ruelle.euler_product(sp, complex(args.z))
    _jdump({"tailBound": rep.tail_bound, "termsUsed": rep.terms_used,
            "value": _complex_json(rep.value)}, out)
    return 0


def _cmd_fried_check(args, out):
    sp = spectrum.load_spectrum(args.spectrum)
    z = complex(args.z)
    residual = ruelle.fried_residual(sp, z)
    tail = ruelle.euler_product(sp, z).tail_bound
    _jdump({"residual": residual, "tailBound": tail,
            "withinBound": residual <= tail + 1e-12}, out)
    return 0


def _cmd_terms(args, out):
    if args.term == "identity":
        m0, m1 = cuspterms.identity_lprime(args.vol)
        _jdump({"M0": _mero_json(m0), "M1": _mero_json(m1)}, out)
    elif args.term == "unipotent":
        if args.trivial:
            case = cuspterms.TrivialRestriction()
        else:
            if args.covolume is None or args.c_rho is None:
                raise ValidationError(
                    ["unipotent terms need --trivial or both --covolume and --c-rho"])
            case = cuspterms.NontrivialRestriction(args.covolume, args.c_rho)
        u0, u1, comb = cuspterms.unipotent_lprime(case)
        _jdump({"U0shifted": _mero_json(u0), "U1": _mero_json(u1),
                "combination": _mero_json(comb),
                "combinationIsZero": comb.is_zero()}, out)
    elif args.term == "threshold":
        _jdump(_mero_json(cuspterms.threshold_lprime()), out)
    else:  # scattering
        poles = cuspterms.ScatteringPoles.from_json(json.loads(_read(args.poles)))
        s0, s1 = cuspterms.scattering_lprime(poles)
        _jdump({"S0shifted": _mero_json(s0), "S1": _mero_json(s1)}, out)
    return 0


def _cmd_epstein(args, out):
    lat, chi = _load_lattice(args.lattice)
    if args.residue:
        res, const = cuspterms.epstein_residue_and_constant(lat, chi)
        _jdump({"constant": complex(const).real, "residue": res}, out)
    else:
        v = cuspterms.epstein(lat, chi, complex(args.s))
        _jdump({"value": _complex_json(v)}, out)
    return 0


def _cmd_verify(args, out):
    p, eps, rho = _load_presentation(args.presentation)
    report = verdict.main_conjecture_report(p, rho, eps)
    _jdump(report.to_json(), out)
    return report.exit_code


def _cmd_selftest(args, out):
    import cmath
    import random
    rng = random.Random(20260826)
    failures = []

    def check(name, ok):
        out.write(f"{'PASS' if ok else 'FAIL'} {name}\n")
        if not ok:
            failures.append(name)

    # order-prediction coherence across all small inputs
    ok = True
    for h0 in (0, 1):
        for h1 in range(11):
            for d in (False, True):
                if h0 == 1 and not d:
                    continue
                b0, b1 = verdict.l2_betti(h0, h1, d)
                ok &= verdict.ruelle_order_prediction(h0, h1, d) == 2 * (2 * b0 - b1)
    check("order prediction matches Betti route", ok)

    # transform closed forms vs quadrature
    ok = True
    for atom in (laplace.HeatAtom("exp", 1.0), laplace.HeatAtom("theta", 1.0),
                 laplace.HeatAtom("power", 0)):
        m = laplace.lprime_closed(atom)
        f = laplace.atom_function(atom)
        for z in (1.0, 2.0):
            ok &= abs(laplace.quadrature_lprime(f, z)
                      - laplace.evaluate(m, z)) < 1e-8
    check("closed transforms match quadrature", ok)

    # spectral transform symmetries
    e0 = [0.0] + [rng.uniform(0.1, 4) for _ in range(5)]
    e1 = [0.0, 0.0] + [rng.uniform(0.1, 4) for _ in range(5)]
    l0, l1 = laplace.spectral_lprime(e0, e1)
    z = complex(rng.uniform(0.2, 1), rng.uniform(-1, 1))
    ok = abs(laplace.evaluate(l1, -z) + laplace.evaluate(l1, z)) < 1e-9
    ok &= abs(laplace.evaluate(l0, 1 + z) + laplace.evaluate(l0, 1 - z)) < 1e-9
    ok &= abs(laplace.residue_at(l1, 0) - 2 * (2 - 1)) < 1e-12
    check("spectral transform symmetries", ok)

    # factorization identity on a synthetic orbit
    sp = ruelle.single_orbit_spectrum(1.0, 0.7, cmath.exp(0.4j), 50)
    ok = ruelle.fried_residual(sp, 4 + 0j) < 1e-12
    ok &= abs(ruelle.log_derivative(sp, 4 + 0j)
              - ruelle.log_derivative_series(sp, 4 + 0j)) < 1e-6
    check("factorization and log-derivative identities", ok)

    # vanishing combinations
    u = cuspterms.unipotent_lprime(cuspterms.NontrivialRestriction(2.0, 1.3))
    ut = cuspterms.unipotent_lprime(cuspterms.TrivialRestriction())
    check("unipotent combinations vanish structurally",
          u[2].is_zero() and ut[2].is_zero())

    out.write(f"{len(failures)} failure(s)\n")
    return EX_SOFTWARE if failures else 0


# ---------------------------------------------------------------------------
# argument wiring

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    ap = _Parser(prog="cuspedzeta",
                 description="Twisted Alexander invariants and Ruelle zeta "
                             "bookkeeping for one-cusped hyperbolic manifolds")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_output(p):
        p.add_argument("-o", "--output", help="write output to this file")
        return p

    p = with_output(sub.add_parser("alexander", help="twisted Alexander data"))
    p.add_argument("presentation")
    p.set_defaults(func=_cmd_alexander)

    p = with_output(sub.add_parser("betti", help="twisted Betti numbers"))
    p.add_argument("presentation")
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("spectrum", help="geodesic spectrum tools")
    ssub = p.add_subparsers(dest="subcommand", required=True)
    pe = with_output(ssub.add_parser("enumerate"))
    pe.add_argument("matrices")
    pe.add_argument("--max-word-len", type=int, required=True)
    pe.add_argument("--cutoff", type=float, required=True)
    pe.add_argument("--complete", action="store_true",
                    help="assert completeness up to the cutoff")
    pe.set_defaults(func=_cmd_spectrum_enumerate)

    p = sub.add_parser("ruelle", help="Ruelle function evaluation")
    rsub = p.add_subparsers(dest="subcommand", required=True)
    pr = with_output(rsub.add_parser("eval"))
    pr.add_argument("spectrum")
    pr.add_argument("--z", required=True)
    pr.set_defaults(func=_cmd_ruelle_eval)

    p = sub.add_parser("fried", help="factorization checks")
    fsub = p.add_subparsers(dest="subcommand", required=True)
    pf = with_output(fsub.add_parser("check"))
    pf.add_argument("spectrum")
    pf.add_argument("--z", required=True)
    pf.set_defaults(func=_cmd_fried_check)

    p = with_output(sub.add_parser("terms", help="trace-formula terms"))
    p.add_argument("term", choices=["identity", "unipotent", "threshold",
                                    "scattering"])
    p.add_argument("poles", nargs="?",
                   help="scattering poles JSON (scattering only)")
    p.add_argument("--vol", type=float, default=1.0)
    p.add_argument("--covolume", type=float)
    p.add_argument("--c-rho", type=float, dest="c_rho")
    p.add_argument("--trivial", action="store_true")
    p.set_defaults(func=_cmd_terms)

    p = with_output(sub.add_parser("epstein", help="lattice L-function"))
    p.add_argument("lattice")
    p.add_argument("--s", default="1.0")
    p.add_argument("--residue", action="store_true",
                   help="residue and constant term at s=0 instead of a value")
    p.set_defaults(func=_cmd_epstein)

    p = with_output(sub.add_parser("verify", help="main comparison report"))
    p.add_argument("presentation")
    p.set_defaults(func=_cmd_verify)

    p = with_output(sub.add_parser("selftest", help="run the property suites"))
    p.set_defaults(func=_cmd_selftest)
    return ap


def run(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EX_USAGE
    try:
        threads()  # validate the env knob early
        if args.command == "terms" and args.term == "scattering" \
                and not args.poles:
            raise ValidationError(["scattering needs a poles JSON file"])
        if getattr(args, "output", None):
            with open(args.output, "w", encoding="utf-8") as out:
                return args.func(args, out)
        return args.func(args, sys.stdout)
    except FileNotFoundError as exc:
        sys.stderr.write(f"cuspedzeta: {exc}\n")
        return EX_DATAERR
    except _INPUT_ERRORS as exc:
        sys.stderr.write(f"cuspedzeta: invalid input: {exc}\n")
        return EX_DATAERR
    except _COMPUTE_ERRORS as exc:
        sys.stderr.write(f"cuspedzeta: computation failed: {exc}\n")
        return EX_SOFTWARE
    except CuspedZetaError as exc:
        sys.stderr.write(f"cuspedzeta: {exc}\n")
        return EX_SOFTWARE


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()
