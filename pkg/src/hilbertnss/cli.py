"""Command-line front end.

Every subcommand reads an ideal file (or a built-in fixture), delegates to
the library and prints JSON with sorted keys, so identical inputs and seeds
give byte-identical output.  Exit codes: 0 success or bound holds, 1
violated or unsatisfiable within the bound, 2 input error, 3 a hypothesis
could not be certified.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from .bounds import (
    HypothesisViolation,
    certified_section,
    fixture_c_n_delta,
    fixture_hypersurface_in_subspace,
    fixture_rational_normal_curve,
    section_threshold,
    sweep_bound,
)
from .core import QQ, Field, ParseError, Polynomial, Ring, RingMismatch, affine_ring, format_polynomial, graded_ring
from .core import random_polynomial
from .groebner import Ideal, MonomialOrder, NotHomogeneous
from .hilbert import UnitIdealError, hilbert_data
from .io import load_system
from .nullstellensatz import (
    BoundExceeded,
    Inadmissible,
    certify_nss_thm44,
    example41_system,
    geometric_degree_estimate,
    represent_ci_thm43,
)
from .regseq import NotWeakRegular, RetryExhausted, straighten_affine_cor32, straighten_prop32

EXIT_OK, EXIT_VIOLATED, EXIT_INPUT, EXIT_HYPOTHESIS = 0, 1, 2, 3

FIXTURES = {
    "rnc:<n>": "rational normal curve of degree n in P^n",
    "cndelta:<n>:<d1,d2,...>": "disjoint rational normal curves of degrees d_j in P^n",
    "hyp:<n>:<d>:<e>": "degree-e hypersurface inside a d+1 dimensional coordinate subspace of P^n",
    "example31[:<d>]": "affine sequence (x1, x1^(d+1) + x2, x1^(d+1) + x3), default d = 2",
    "example41:<seed>": "unit system h_i + u_i with inner degree 2 and input degree 10",
}


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    field: Field
    order: MonomialOrder
    seed: int
    fmt: str


def _fixture(spec: str, field: Field, seed: int) -> tuple[Ring, list[Polynomial], dict]:
    parts = spec.split(":")
    name = parts[0]
    try:
        if name == "rnc":
            fx = fixture_rational_normal_curve(int(parts[1]), field)
            return fx.ideal.ring, list(fx.ideal.gens), {"irr": fx.irr, "hypothesis": "certified"}
        if name == "cndelta":
            delta = [int(x) for x in parts[2].split(",")]
            fx = fixture_c_n_delta(int(parts[1]), delta, field)
            return fx.ideal.ring, list(fx.ideal.gens), {"irr": fx.irr, "hypothesis": "certified"}
        if name == "hyp":
            fx = fixture_hypersurface_in_subspace(int(parts[1]), int(parts[2]), int(parts[3]), seed, field)
            return fx.ideal.ring, list(fx.ideal.gens), {"irr": fx.irr, "hypothesis": "certified"}
        if name == "example31":
            d = int(parts[1]) if len(parts) > 1 else 2
            A = affine_ring(3, field)
            fs = [A.parse("x1"), A.parse(f"x1^{d + 1} + x2"), A.parse(f"x1^{d + 1} + x3")]
            return A, fs, {}
        if name == "example41":
            A = affine_ring(3, field)
            _, fs = example41_system(A, int(parts[1]) if len(parts) > 1 else seed)
            return A, fs, {}
    except (IndexError, ValueError) as exc:
        raise InputError(f"bad fixture {spec!r}: {exc}") from None
    raise InputError(f"unknown fixture {spec!r}; see --fixtures")


def _load(args, cfg: RunConfig, graded=None) -> tuple[Ring, list[Polynomial], dict]:
    if args.fixture:
        return _fixture(args.fixture, cfg.field, cfg.seed)
    if not args.input:
        raise InputError("an input file or --fixture is required")
    ring, polys = load_system(args.input, graded, cfg.field if args.field else None)
    return ring, polys, {"hypothesis": "asserted-by-user"}


def _emit(obj, cfg: RunConfig):
    if cfg.fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        _print_text(obj)


def _print_text(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and not all(isinstance(x, (str, int, bool)) for x in v):
                print(f"{pad}{k}:")
                _print_text(v, indent + 1)
            else:
                print(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                print(f"{pad}-")
                _print_text(v, indent + 1)
            else:
                print(f"{pad}- {v}")


def _scalar(v):
    if isinstance(v, list):
        return ", ".join(str(x) for x in v)
    return v


# ---------------------------------------------------------------------------
# subcommands


def cmd_gb(args, cfg):
    ring, polys, _ = _load(args, cfg)
    G = Ideal(ring, polys).gb(cfg.order)
    _emit({"ring": ring.header(), "order": str(cfg.order), "basis": [format_polynomial(g) for g in G]}, cfg)
    return EXIT_OK


def cmd_hilbert(args, cfg):
    ring, polys, _ = _load(args, cfg, graded=True)
    I = Ideal(ring, polys)
    try:
        data = hilbert_data(I)
    except UnitIdealError:
        _emit({"error": "unit ideal: dimension and degree are undefined"}, cfg)
        return EXIT_VIOLATED
    _emit(data.to_json(args.upto), cfg)
    return EXIT_OK


def _random_ideals(count: int, seed: int, field: Field):
    out = []
    for k in range(count):
        rng = random.Random(f"{seed}:ideal:{k}")
        nv = rng.randint(2, 4)
        R = graded_ring(nv, field)
        gens = [random_polynomial(R, rng.randint(1, 4), True, seed=rng.randrange(2**63)) for _ in range(rng.randint(1, 4))]
        out.append((f"random:{seed}:{k}", Ideal(R, gens)))
    return out


def cmd_bounds(args, cfg):
    name = {"2.1": "thm2.1", "2.2": "thm2.2", "2.3": "thm2.3", "2.4": "thm2.4"}.get(args.thm, args.thm)
    if args.random:
        targets = [(d, I, {"hypothesis": "certified"}) for d, I in _random_ideals(args.random, cfg.seed, cfg.field)]
    else:
        ring, polys, meta = _load(args, cfg, graded=True)
        targets = [(args.fixture or args.input, Ideal(ring, polys), meta)]
    needs_structure = name in ("thm2.1", "thm2.2", "thm2.4", "chardin", "sandwich", "lemma2.6")
    code = EXIT_OK
    for desc, I, meta in targets:
        hyp = meta.get("hypothesis", "asserted-by-user") if needs_structure else "certified"
        data = hilbert_data(I)
        if data.projective_dimension < 0 and name != "thm2.4":
            _emit({"ideal": desc, "bound_name": name, "verdict": "not-applicable", "reason": "dimension -1"}, cfg)
            continue
        section = None
        m_range = None
        if args.mmax:
            m_range = (1, args.mmax)
        if name == "thm2.4":
            try:
                section = certified_section(I, args.section_degree, cfg.seed)
            except HypothesisViolation as exc:
                _emit({"ideal": desc, "bound_name": name, "verdict": "hypothesis-uncertifiable", "reason": str(exc)}, cfg)
                code = max(code, EXIT_HYPOTHESIS)
                continue
            d = data.projective_dimension
            lo = section_threshold(d, data.degree) if d >= 1 else 1
            m_range = (lo, lo + 5)
        irr = args.irr if args.irr is not None else meta.get("irr")
        if name == "thm2.1" and irr is None:
            raise InputError("Theorem 2.1 needs --irr for non-fixture input")
        rep = sweep_bound(I, name, m_range, irr=irr, section=section, hypothesis=hyp, description=desc)
        out = rep.to_json()
        if section is not None:
            out["section"] = format_polynomial(section)
        _emit(out, cfg)
        if not rep.holds:
            code = max(code, EXIT_VIOLATED)
    return code


def cmd_regseq(args, cfg):
    ring, polys, _ = _load(args, cfg)
    try:
        if ring.graded:
            if not args.F:
                raise InputError("graded input needs --F")
            F = ring.parse(args.F)
            res = straighten_prop32(F, polys, cfg.seed)
        else:
            res = straighten_affine_cor32(polys, cfg.seed)
    except NotWeakRegular as exc:
        _emit({"error": str(exc), "status": "hypothesis-uncertifiable"}, cfg)
        return EXIT_HYPOTHESIS
    except RetryExhausted as exc:
        _emit({"error": str(exc), "status": "retry-exhausted"}, cfg)
        return EXIT_VIOLATED
    _emit(res.to_json(), cfg)
    ok = res.output_regular and res.within_caps and all(res.step_saturations_equal)
    return EXIT_OK if ok else EXIT_VIOLATED


def _parse_g(ring: Ring, text: str) -> Polynomial:
    if text is None or text.strip() == "1":
        return ring.one
    try:
        with open(text) as fh:
            lines = [ln for ln in fh.read().splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if lines and lines[0].lstrip().startswith("ring:"):
            lines = lines[1:]
        return ring.parse(lines[0])
    except FileNotFoundError:
        return ring.parse(text)


def cmd_certify(args, cfg):
    ring, polys, _ = _load(args, cfg, graded=False)
    char_mode = "charp" if args.charp else "char0"
    try:
        if args.mode == "thm44":
            run = certify_nss_thm44(polys, args.trials, cfg.seed, char_mode, args.budget)
        else:
            g = _parse_g(ring, args.g)
            run = represent_ci_thm43(g, polys, args.trials, cfg.seed, args.budget)
    except (Inadmissible, BoundExceeded) as exc:
        _emit({"error": str(exc), "status": "hypothesis-uncertifiable"}, cfg)
        return EXIT_HYPOTHESIS
    _emit(run.to_json(), cfg)
    return EXIT_OK if run.status == "certified" else EXIT_VIOLATED


def cmd_delta(args, cfg):
    ring, polys, _ = _load(args, cfg, graded=False)
    char_mode = "charp" if args.charp else "char0"
    try:
        rep = geometric_degree_estimate(polys, args.trials, cfg.seed, char_mode)
    except Inadmissible as exc:
        _emit({"error": str(exc), "status": "hypothesis-uncertifiable"}, cfg)
        return EXIT_HYPOTHESIS
    _emit(rep.to_json(), cfg)
    return EXIT_OK if rep.delta_estimate is not None else EXIT_HYPOTHESIS


def cmd_membership(args, cfg):
    ring, polys, _ = _load(args, cfg)
    f = _parse_g(ring, args.poly)
    G = Ideal(ring, polys).gb(cfg.order)
    nf = G.reduce(f)
    _emit({"polynomial": format_polynomial(f), "member": nf.is_zero, "normal_form": format_polynomial(nf)}, cfg)
    return EXIT_OK if nf.is_zero else EXIT_VIOLATED


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="ideal file ('ring:' header, one polynomial per line)")
    common.add_argument("--fixture", help="use a built-in fixture instead of a file (see --fixtures)")
    common.add_argument("--field", help="q or fp:<p>; overrides the file header")
    common.add_argument("--order", default="grevlex", choices=["grevlex", "grlex", "lex"])
    common.add_argument("--seed", type=int, default=0, help="master seed")
    common.add_argument("--format", dest="fmt", default="json", choices=["json", "text"])

    p = argparse.ArgumentParser(prog="hilbertnss", description=__doc__.splitlines()[0])
    p.add_argument("--fixtures", action="store_true", help="list built-in fixture generators and exit")
    sub = p.add_subparsers(dest="command")

    sp = sub.add_parser("gb", parents=[common], help="reduced Gröbner basis")
    sp.set_defaults(func=cmd_gb)

    sp = sub.add_parser("hilbert", parents=[common], help="Hilbert function, polynomial, dimension, degree")
    sp.add_argument("--upto", type=int, default=12)
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("bounds", parents=[common], help="check a Hilbert-function bound")
    sp.add_argument("--thm", default="2.3", choices=["2.1", "2.2", "2.3", "2.4", "chardin", "sandwich", "lemma2.6"])
    sp.add_argument("--irr", type=int, help="number of irreducible components (Theorem 2.1)")
    sp.add_argument("--mmax", type=int, help="largest m to check")
    sp.add_argument("--section-degree", type=int, default=2, help="degree of the section f for Theorem 2.4")
    sp.add_argument("--random", type=int, default=0, help="sweep this many seeded random ideals instead")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("regseq", parents=[common], help="straighten a weak regular sequence")
    sp.add_argument("--F", help="hypersurface to invert (graded input)")
    sp.set_defaults(func=cmd_regseq)

    sp = sub.add_parser("certify", parents=[common], help="Nullstellensatz or representation certificate")
    sp.add_argument("--g", default="1", help="file holding g, a polynomial, or 1")
    sp.add_argument("--trials", type=int, default=4)
    sp.add_argument("--mode", default="thm44", choices=["thm44", "thm43"])
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--char0", action="store_true", help="combine the f_i only (default)")
    grp.add_argument("--charp", action="store_true", help="combine the f_i and x_j f_i")
    sp.add_argument("--budget", type=int, help="cap on the searched D below the theorem bound")
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("delta", parents=[common], help="geometric degree estimate")
    sp.add_argument("--trials", type=int, default=4)
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--char0", action="store_true")
    grp.add_argument("--charp", action="store_true")
    sp.set_defaults(func=cmd_delta)

    sp = sub.add_parser("membership", parents=[common], help="ideal membership by normal form")
    sp.add_argument("--poly", required=True, help="polynomial or file")
    sp.set_defaults(func=cmd_membership)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.fixtures:
        for k, v in FIXTURES.items():
            print(f"{k}\t{v}")
        return EXIT_OK
    if not args.command:
        parser.print_help()
        return EXIT_INPUT
    try:
        field = Field.from_string(args.field) if args.field else QQ
        cfg = RunConfig(field, MonomialOrder(args.order), args.seed, args.fmt)
        return args.func(args, cfg)
    except (ParseError, RingMismatch, NotHomogeneous, InputError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
