"""gapforge command line.

Exit codes: 0 success, 1 verification/certification failure, 2 input error,
3 budget exceeded.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import io
from .amplify import amplify_to_gamma, compose_amplify
from .bridges import (force_unit_coefficients, mld_to_ncp, mld_to_ncp_report,
                      ncp_to_mld)
from .codes import (Code, build_random_code, build_rs_code, collision_number_exact,
                    distance_based_bounds, merge_code, random_code_params)
from .errors import BudgetError, InputError, NoInstanceFound, VerificationError
from .gap import colored_to_uncolored, gap_reduce, lift_yes_witness
from .instances import (ColoredMldInstance, MldInstance, NcpInstance,
                        gen_certified_no, gen_planted_yes, gen_random_mld,
                        gen_random_ncp, verify_witness)
from .instances import Witness
from .oracles import (BUDGET_EXCEEDED, NEITHER, NO_AT_GAMMA, YES, certify_gap,
                      exact_mld_min, exact_ncp_min)
from .report import dumps_report, emit_report


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _write(obj, path, indent=None):
    io.write_instance(obj, path, indent)
    print(f"wrote {path}")


def _witness_path(out: str) -> str:
    p = Path(out)
    return str(p.with_name(p.stem + ".witness" + (p.suffix or ".json")))


def _expect(obj, kinds, path):
    if not isinstance(obj, kinds):
        names = "/".join(k.__name__ for k in kinds)
        raise InputError(f"{path}: expected {names}, got {type(obj).__name__}")
    return obj


def cmd_gen(a, steps):
    if a.kind == "planted-yes":
        inst, wit = gen_planted_yes(a.p, a.k, a.d, a.n, a.seed)
        _write(inst, a.output)
        wpath = a.witness_out or _witness_path(a.output)
        _write(wit, wpath)
    elif a.kind == "certified-no":
        inst = gen_certified_no(a.p, a.k, a.d, a.n, a.seed, a.max_attempts)
        _write(inst, a.output)
    elif a.kind == "random-mld":
        _write(gen_random_mld(a.p, a.k, a.d, a.n, a.seed), a.output)
    else:
        _write(gen_random_ncp(a.p, a.n, a.d, a.k, a.seed), a.output)
    return 0


def cmd_code(a, steps):
    if a.action == "random":
        _write(build_random_code(a.n, a.sigma, a.m, a.seed), a.output)
    elif a.action == "rs":
        _write(build_rs_code(a.q, a.r, a.m, a.n), a.output)
    elif a.action == "merge":
        code = _expect(io.read_instance(a.code), (Code,), a.code)
        _write(merge_code(code, a.g), a.output)
    elif a.action == "colnum":
        code = _expect(io.read_instance(a.code), (Code,), a.code)
        s = collision_number_exact(code, a.eps, a.max_s, a.budget)
        steps.append({"type": "colnum", "eps": a.eps, "max_s": a.max_s, "collision_number": s})
        if s is None:
            print(f"collision number greater than {a.max_s}")
        else:
            print(f"collision number = {s}")
    elif a.action == "bounds":
        res = distance_based_bounds(a.delta, a.eps, a.m, a.r)
        steps.append({"type": "bounds", **res})
        print(f"col_lower_bound = {res['col_lower_bound']:.6f}; "
              f"singleton_feasible = {str(res['singleton_feasible']).lower()}")
    elif a.action == "params":
        prm = random_code_params(a.n, a.k, a.c, a.eps)
        steps.append({"type": "code_params", "sigma": prm.sigma, "r": prm.r, "m": prm.m,
                      "epsilon": prm.epsilon, "c": prm.c})
        print(f"sigma = {prm.sigma}; r = {prm.r}; m = {prm.m}")
    return 0


def cmd_reduce(a, steps):
    inst = _expect(io.read_instance(a.inst), (ColoredMldInstance,), a.inst)
    code = None
    if a.code:
        code = _expect(io.read_instance(a.code), (Code,), a.code)
    out, rep = gap_reduce(inst, a.c, a.eps, a.seed, code=code, sigma=a.sigma, m=a.m)
    _write(out, a.output)
    steps.append(rep)
    if a.report:
        _write(rep, a.report, indent=2)
    print(f"k' = {rep.k_prime}; D' = {rep.D_prime}; sigma = {rep.sigma}; m = {rep.m}; w = {rep.w}")
    if a.witness:
        wit = _expect(io.read_instance(a.witness), (Witness,), a.witness)
        lifted = lift_yes_witness(inst, wit, rep.code)
        chk = verify_witness(out, lifted)
        if not chk.valid:
            raise VerificationError("lifted witness does not verify")
        _write(lifted, a.witness_out or _witness_path(a.output))
    return 0


def cmd_amplify(a, steps):
    if a.action == "compose":
        outer = _expect(io.read_instance(a.outer), (MldInstance,), a.outer)
        inner = _expect(io.read_instance(a.inner), (MldInstance,), a.inner)
        out, rep = compose_amplify(outer, inner, a.gamma_outer, a.gamma_inner)
        _write(out, a.output)
        steps.append(rep)
        print(f"k' = {rep.k_prime}; dim = {rep.out_dim}; gamma' = {rep.gamma_prime}")
    else:
        inst = _expect(io.read_instance(a.inst), (MldInstance,), a.inst)
        try:
            out, reps = amplify_to_gamma(inst, (a.k, a.gamma), a.target_gamma)
        except BudgetError as e:
            steps.extend(e.reports)
            raise
        steps.extend(reps)
        _write(out, a.output)
        print(f"{len(reps)} compositions; k' = {out.k}; gamma' = "
              f"{reps[-1].gamma_prime if reps else a.gamma}")
    return 0


def cmd_bridge(a, steps):
    inst = io.read_instance(a.inst)
    if a.action == "mld-to-ncp":
        inst = _expect(inst, (MldInstance,), a.inst)
        out = mld_to_ncp(inst, a.gamma)
        steps.append(mld_to_ncp_report(inst, a.gamma, out))
    elif a.action == "ncp-to-mld":
        inst = _expect(inst, (NcpInstance,), a.inst)
        out, rep = ncp_to_mld(inst)
        steps.append(rep)
        if a.report:
            _write(rep.to_json(), a.report, indent=2)
    else:
        inst = _expect(inst, (ColoredMldInstance,), a.inst)
        out = force_unit_coefficients(inst)
    _write(out, a.output)
    return 0


def cmd_solve(a, steps):
    inst = io.read_instance(a.inst)
    if isinstance(inst, NcpInstance):
        sol = exact_ncp_min(inst, a.budget)
        steps.append({"type": "ncp_min", "distance": sol.distance, "coeffs": list(sol.coeffs)})
        print(f"ncp minimum distance = {sol.distance}")
        return 0
    inst = _expect(inst, (MldInstance, ColoredMldInstance), a.inst)
    if isinstance(inst, ColoredMldInstance) and not a.restricted:
        inst = colored_to_uncolored(inst)
    sol = exact_mld_min(inst, a.cap, a.budget)
    if sol is None:
        steps.append({"type": "mld_min", "min": None, "size_cap": a.cap})
        print("no solution" + (f" of size <= {a.cap}" if a.cap is not None else ""))
        return 0
    steps.append({"type": "mld_min", "min": sol.weight, "size_cap": a.cap,
                  "witness": io.to_json(sol.witness)})
    print(f"mld minimum = {sol.weight}")
    if a.output:
        _write(sol.witness, a.output)
    return 0


def cmd_certify(a, steps):
    inst = _expect(io.read_instance(a.inst), (MldInstance, ColoredMldInstance), a.inst)
    card = certify_gap(inst, a.k, a.gamma, a.budget)
    steps.append(card)
    if a.output:
        _write(card, a.output, indent=2)
    print(f"class = {card.classification}; exact_min = {card.exact_min}; size_cap = {card.size_cap}")
    if card.classification == BUDGET_EXCEEDED:
        return 3
    if a.expect == "yes" and card.classification != YES:
        return 1
    if a.expect == "no" and card.classification != NO_AT_GAMMA:
        return 1
    return 1 if card.classification == NEITHER else 0


def cmd_verify(a, steps):
    inst = _expect(io.read_instance(a.inst), (MldInstance, ColoredMldInstance), a.inst)
    wit = _expect(io.read_instance(a.witness), (Witness,), a.witness)
    chk = verify_witness(inst, wit)
    steps.append({"type": "verify", "valid": chk.valid, "weight": chk.weight,
                  "restricted_shape": chk.restricted_shape})
    print(f"valid = {str(chk.valid).lower()}; weight = {chk.weight}")
    return 0 if chk.valid else 1


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="gapforge", description="Gap-creating reductions for parameterized MLD.")
    ap.add_argument("--budget", type=int, default=None,
                    help="oracle budget (default $GAPFORGE_BUDGET or 10^7)")
    ap.add_argument("--threads", type=int, default=None, help="worker cap (recorded in reports)")
    ap.add_argument("--run-report", default=None, help="write a consolidated run report here")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate instances")
    g.add_argument("--kind", required=True,
                   choices=["planted-yes", "certified-no", "random-mld", "random-ncp"])
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--d", type=int, required=True, help="dimension (code length m for random-ncp)")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--max-attempts", type=int, default=1000)
    g.add_argument("-o", "--output", required=True)
    g.add_argument("--witness-out", default=None)
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("code", help="build and analyse codes")
    csub = c.add_subparsers(dest="action", required=True, parser_class=_Parser)
    cr = csub.add_parser("random")
    cr.add_argument("--n", type=int, required=True)
    cr.add_argument("--sigma", type=int, required=True)
    cr.add_argument("--m", type=int, required=True)
    cr.add_argument("--seed", type=int, required=True)
    cr.add_argument("-o", "--output", required=True)
    rs = csub.add_parser("rs")
    rs.add_argument("--q", type=int, required=True)
    rs.add_argument("--r", type=int, required=True)
    rs.add_argument("--m", type=int, required=True)
    rs.add_argument("--n", type=int, default=None)
    rs.add_argument("-o", "--output", required=True)
    mg = csub.add_parser("merge")
    mg.add_argument("--code", required=True)
    mg.add_argument("--g", type=int, required=True)
    mg.add_argument("-o", "--output", required=True)
    cn = csub.add_parser("colnum")
    cn.add_argument("--code", required=True)
    cn.add_argument("--eps", type=float, required=True)
    cn.add_argument("--max-s", type=int, required=True)
    bd = csub.add_parser("bounds")
    bd.add_argument("--delta", type=float, required=True)
    bd.add_argument("--eps", type=float, required=True)
    bd.add_argument("--m", type=int, required=True)
    bd.add_argument("--r", type=int, required=True)
    pr = csub.add_parser("params")
    pr.add_argument("--n", type=int, required=True)
    pr.add_argument("--k", type=int, required=True)
    pr.add_argument("--c", type=float, required=True)
    pr.add_argument("--eps", type=float, required=True)
    c.set_defaults(func=cmd_code)

    r = sub.add_parser("reduce", help="gap-creating reduction")
    rsub = r.add_subparsers(dest="action", required=True, parser_class=_Parser)
    rg = rsub.add_parser("gap")
    rg.add_argument("--inst", required=True)
    rg.add_argument("--c", type=float, default=2.0)
    rg.add_argument("--eps", type=float, required=True)
    rg.add_argument("--seed", type=int, required=True)
    rg.add_argument("--code", default=None, help="use this code instead of a random one")
    rg.add_argument("--sigma", type=int, default=None,
                    help="with --m: seeded random code of this shape, skipping the formula")
    rg.add_argument("--m", type=int, default=None)
    rg.add_argument("-o", "--output", required=True)
    rg.add_argument("--report", default=None)
    rg.add_argument("--witness", default=None, help="YES witness of the input to lift")
    rg.add_argument("--witness-out", default=None)
    r.set_defaults(func=cmd_reduce)

    am = sub.add_parser("amplify", help="gap amplification by composition")
    asub = am.add_subparsers(dest="action", required=True, parser_class=_Parser)
    ac = asub.add_parser("compose")
    ac.add_argument("--outer", required=True)
    ac.add_argument("--inner", required=True)
    ac.add_argument("--gamma-outer", type=float, default=None)
    ac.add_argument("--gamma-inner", type=float, default=None)
    ac.add_argument("-o", "--output", required=True)
    at = asub.add_parser("to-gamma")
    at.add_argument("--inst", required=True)
    at.add_argument("--k", type=int, required=True)
    at.add_argument("--gamma", type=float, required=True)
    at.add_argument("--target-gamma", type=float, required=True)
    at.add_argument("-o", "--output", required=True)
    am.set_defaults(func=cmd_amplify)

    b = sub.add_parser("bridge", help="MLD/NCP bridges and the unit-coefficient gadget")
    bsub = b.add_subparsers(dest="action", required=True, parser_class=_Parser)
    b1 = bsub.add_parser("mld-to-ncp")
    b1.add_argument("--inst", required=True)
    b1.add_argument("--gamma", type=float, required=True)
    b1.add_argument("-o", "--output", required=True)
    b2 = bsub.add_parser("ncp-to-mld")
    b2.add_argument("--inst", required=True)
    b2.add_argument("-o", "--output", required=True)
    b2.add_argument("--report", default=None)
    b3 = bsub.add_parser("force-unit")
    b3.add_argument("--inst", required=True)
    b3.add_argument("-o", "--output", required=True)
    b.set_defaults(func=cmd_bridge)

    s = sub.add_parser("solve", help="exact minimum by exhaustive search")
    s.add_argument("--inst", required=True)
    s.add_argument("--cap", type=int, default=None)
    s.add_argument("--restricted", action="store_true",
                   help="colored instances: one coefficient-1 pick per class")
    s.add_argument("-o", "--output", default=None, help="write the witness here")
    s.set_defaults(func=cmd_solve)

    ce = sub.add_parser("certify", help="classify against a (k, gamma) promise")
    ce.add_argument("--inst", required=True)
    ce.add_argument("--k", type=int, required=True)
    ce.add_argument("--gamma", type=float, required=True)
    ce.add_argument("--expect", choices=["yes", "no"], default=None)
    ce.add_argument("-o", "--output", default=None)
    ce.set_defaults(func=cmd_certify)

    v = sub.add_parser("verify", help="check a witness")
    v.add_argument("--inst", required=True)
    v.add_argument("--witness", required=True)
    v.set_defaults(func=cmd_verify)
    return ap


def _config(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "run_report")}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    steps = []
    t0 = time.perf_counter()
    code = 0
    try:
        code = args.func(args, steps)
    except VerificationError as e:
        print(f"verification failed: {e}", file=sys.stderr)
        code = 1
    except BudgetError as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        code = 3
    except NoInstanceFound as e:
        print(f"generation failed: {e}", file=sys.stderr)
        code = 1
    except InputError as e:
        print(f"input error: {e}", file=sys.stderr)
        code = 2
    if args.run_report:
        rep = emit_report(_config(args), steps,
                          {"wall_seconds": round(time.perf_counter() - t0, 6)})
        Path(args.run_report).write_text(dumps_report(rep))
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
