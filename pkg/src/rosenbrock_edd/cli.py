"""Command-line front end: JSON matrix documents in, JSON reports out.

Every subcommand reads one JSON document (a file path, or ``-`` for
standard input) and writes one JSON object to standard output.  Exit codes:
0 on success, 1 when the mathematics refuses (a domain error), 2 when the
input cannot be read or parsed.
"""

import argparse
import json
import sys

from .concrete import ring_by_name
from .coprime import completion_I0, coprime_check
from .errors import DomainError, ParseError
from .fof import (fof_assemble, fof_converse, fof_converse_from_system, fof_forward,
                  infinity_structure)
from .matrices import Matrix, base_ring, det, is_field, transfer_function
from .normal_forms import determinantal_divisors, smith, smith_mcmillan, smith_oracle
from .parse import format_value, matrix_from_doc, matrix_to_doc, parse_entry, parse_frac
from .system import (SystemMatrix, diagnose_reducible, is_irreducible, local_zero_structure,
                     minimal_realization, realization_dimension, reduce_system,
                     verify_rosenbrock)


class InputError(Exception):
    """Unreadable or malformed input; maps to exit code 2."""


def _fmt(v):
    if v is None:
        return None
    if isinstance(v, (list, tuple)):
        return [_fmt(x) for x in v]
    if isinstance(v, Matrix):
        return matrix_to_doc(v)
    return format_value(v)


def _load_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError, UnicodeDecodeError) as e:
        raise InputError(f"{path}: {e}") from None


def _load_matrix(path):
    doc = _load_json(path)
    try:
        return matrix_from_doc(doc)
    except (ParseError, DomainError) as e:
        raise InputError(f"{path}: {e}") from None


def _system(args, ring_valued=True):
    P = _load_matrix(args.input)
    if ring_valued and is_field(P.dom):
        raise InputError("system matrix entries must lie in the ring")
    return SystemMatrix.from_matrix(P, args.n)


def _blocks(P, n):
    N, M = P.nrows, P.ncols
    if not 0 <= n <= min(N, M):
        raise InputError(f"--n {n} does not fit a {N}x{M} matrix")
    return P.slice(0, n, 0, n), P.slice(0, n, n, M), P.slice(n, N, 0, n), P.slice(n, N, n, M)


def _transforms(out, args, **mats):
    if not args.no_transforms:
        for k, M in mats.items():
            out[k] = matrix_to_doc(M)
    return out


# -- subcommands -------------------------------------------------------------------

def cmd_smith(args):
    A = _load_matrix(args.input)
    sd = smith(A)
    out = {"ring": base_ring(A.dom).name, "rank": sd.rank,
           "inv_factors": _fmt(sd.inv_factors), "det_divisors": _fmt(sd.det_divisors),
           "S": matrix_to_doc(sd.S)}
    return _transforms(out, args, U=sd.U, V=sd.V)


def cmd_smith_mcmillan(args):
    G = _load_matrix(args.input)
    sm = smith_mcmillan(G)
    out = {"ring": sm.ring.name, "rank": sm.rank, "lcd": _fmt(sm.phi),
           "eps": _fmt(sm.eps), "psi": _fmt(sm.psi), "fractions": _fmt(sm.fractions),
           "g": sm.g, "form": matrix_to_doc(sm.form)}
    return _transforms(out, args, U=sm.U, V=sm.V)


def cmd_detdiv(args):
    A = _load_matrix(args.input)
    return {"ring": base_ring(A.dom).name, "det_divisors": _fmt(determinantal_divisors(A)),
            "inv_factors": _fmt(smith_oracle(A))}


def cmd_coprime(args):
    G1, G2 = _load_matrix(args.first), _load_matrix(args.second)
    rep = coprime_check(G1, G2, args.side)
    out = {"side": rep.side, "coprime": rep.coprime,
           "inv_factors": _fmt(rep.smith.inv_factors)}
    if rep.coprime:
        X, Y = rep.witness_XY
        out["X"], out["Y"] = matrix_to_doc(X), matrix_to_doc(Y)
        return _transforms(out, args, U=rep.completion_U)
    Q1, Q2 = rep.quotients
    out["D"] = matrix_to_doc(rep.common_divisor)
    out["Q1"], out["Q2"] = matrix_to_doc(Q1), matrix_to_doc(Q2)
    return out


def cmd_complete_i0(args):
    M = _load_matrix(args.input)
    n = args.n
    if not 0 < n <= min(M.nrows, M.ncols) or M.nrows != n:
        raise InputError(f"expected an n x (n+m) document [A B] with n={n}, got {M.shape}")
    c = completion_I0(M.slice(0, n, 0, n), M.slice(0, n, n, M.ncols))
    return {"n": n, "U": matrix_to_doc(c.U), "Y11": matrix_to_doc(c.Y11),
            "Y12": matrix_to_doc(c.Y12), "Y21": matrix_to_doc(c.Y21),
            "Y22": matrix_to_doc(c.Y22)}


def cmd_transfer(args):
    P = _load_matrix(args.input)
    A, B, C, D = _blocks(P, args.n)
    return {"G": matrix_to_doc(transfer_function(A, B, C, D))}


def cmd_rosenbrock(args):
    rep = verify_rosenbrock(_system(args))
    return {"g": rep.g, "irreducible": rep.irreducible, "match": rep.match,
            "consistent": rep.consistent, "eps": _fmt(rep.sm_G.eps), "psi": _fmt(rep.sm_G.psi),
            "predicted_SP": _fmt(rep.predicted_SP), "predicted_SA": _fmt(rep.predicted_SA),
            "computed_SP": _fmt(rep.computed_SP), "computed_SA": _fmt(rep.computed_SA)}


def cmd_reduce(args):
    P = _system(args)
    factor = None
    if args.left_factor is not None:
        if args.order != "ef":
            raise InputError("--left-factor needs --order ef")
        factor = _parse_elem(args.left_factor, P.ring)
    red = reduce_system(P, order=args.order, left_factor=factor)
    P0 = red.P0
    return {"order": red.order, "det_E": _fmt(det(red.E)), "det_F": _fmt(det(red.F)),
            "irreducible": is_irreducible(P0).irreducible,
            "E": matrix_to_doc(red.E), "F": matrix_to_doc(red.F), "P0": matrix_to_doc(P0.P)}


def _evidence(ev):
    return {k: (v if k in ("n", "g", "reason") else _fmt(v)) for k, v in ev.items()}


def cmd_diagnose(args):
    d = diagnose_reducible(_system(args))
    return {"g": d.g, "r": d.r, "eps": _fmt(d.eps), "psi": _fmt(d.psi),
            "psi_tilde": _fmt(d.psi_tilde), "eps_tilde": _fmt(d.eps_tilde),
            "items": {k: {"holds": it.holds, "evidence": _evidence(it.evidence)}
                      for k, it in d.items.items()}}


def _parse_elem(text, ring):
    try:
        v = parse_entry(text, ring)
    except (ParseError, DomainError) as e:
        raise InputError(f"{text!r}: {e}") from None
    if not ring.contains(v):
        raise InputError(f"{text!r} is not an element of {ring}")
    return v


def cmd_local(args):
    P = _system(args)
    loc = local_zero_structure(P, _parse_elem(args.prime, P.ring))
    return {"prime": _fmt(loc.prime), "P_mults": list(loc.P_mults),
            "eps_mults": list(loc.eps_mults), "match": loc.match}


def cmd_realize(args):
    real = minimal_realization(_load_matrix(args.input))
    s = real.system
    return {"n": real.n, "A": matrix_to_doc(s.A), "B": matrix_to_doc(s.B),
            "C": matrix_to_doc(s.C), "D": matrix_to_doc(s.D),
            "left_coprime": real.left.coprime, "right_coprime": real.right.coprime}


def cmd_realize_dim(args):
    return {"g": realization_dimension(_load_matrix(args.input))}


def _fof_system(args):
    P = _load_matrix(args.input)
    return fof_assemble(*_blocks(P, args.n))


def cmd_fof_assemble(args):
    s = _fof_system(args)
    return {"alpha": _fmt(s.alpha), "beta": _fmt(s.beta), "gamma": _fmt(s.gamma),
            "left_coprime": s.left.coprime, "right_coprime": s.right.coprime,
            "P": matrix_to_doc(s.P)}


def cmd_fof_forward(args):
    rep = fof_forward(_fof_system(args))
    keys = ("eps", "psi", "delta", "nu", "chi", "alpha_hat", "beta_hat", "alpha_tilde",
            "beta_tilde", "eps_tilde", "psi_tilde")
    out = {k: _fmt(getattr(rep, k)) for k in keys}
    out["g"] = rep.g
    for k in ("predicted_SA", "computed_SA", "predicted_SP", "computed_SP"):
        out[k] = _fmt(getattr(rep, k))
    out["match_A"], out["match_P"] = rep.match_A, rep.match_P
    return out


def _converse_out(rep):
    keys = ("mu", "sigma", "alpha_tilde", "beta_tilde", "delta_tilde", "nu_tilde",
            "predicted_SG", "computed_SG")
    out = {k: _fmt(getattr(rep, k)) for k in keys}
    out["match"] = rep.match
    return out


def cmd_fof_converse(args):
    doc = _load_json(args.input)
    if isinstance(doc, dict) and "sm_A" in doc:
        try:
            ring = ring_by_name(doc.get("ring", ""))
            sA = [parse_frac(t, ring) for t in doc["sm_A"]]
            sP = [parse_frac(t, ring) for t in doc["sm_P"]]
        except (ParseError, DomainError, KeyError, TypeError) as e:
            raise InputError(f"bad invariant-fraction document: {e}") from None
        n = len(sA)
        return _converse_out(fof_converse(sA, sP, n, len(sP) - n, ring=ring))
    if args.n is None:
        raise InputError("a matrix document needs --n")
    try:
        P = matrix_from_doc(doc)
    except (ParseError, DomainError) as e:
        raise InputError(str(e)) from None
    return _converse_out(fof_converse_from_system(fof_assemble(*_blocks(P, args.n))))


def cmd_infinity(args):
    inf = infinity_structure(_load_matrix(args.input))
    return {"degree": inf.degree, "zero_exponents": list(inf.zero_exponents),
            "orders": list(inf.orders_reversal), "orders_proper": list(inf.orders_proper),
            "agree": inf.agree}


def cmd_schur_smith(args):
    """Smith form of an irreducible P read off the Smith-McMillan form of its transfer."""
    P = _system(args)
    if is_irreducible(P).irreducible:
        sm = smith_mcmillan(P.transfer())
        R = P.ring
        inv = (R.one(),) * P.n + tuple(sm.eps)
        return {"method": "schur", "rank": len(inv), "inv_factors": _fmt(inv)}
    print("warning: system matrix is not irreducible; computing the Smith form directly",
          file=sys.stderr)
    sd = smith(P.P)
    return {"method": "direct", "rank": sd.rank, "inv_factors": _fmt(sd.inv_factors)}


# -- argument parsing ---------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(prog="rosenbrock", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, n=False, n_required=True, inputs=("input",)):
        sp = sub.add_parser(name)
        for i in inputs:
            sp.add_argument(i, nargs="?" if len(inputs) == 1 else None, default="-")
        if n:
            sp.add_argument("--n", type=int, required=n_required, help="size of the A block")
        sp.add_argument("--no-transforms", action="store_true",
                        help="omit unimodular transformation matrices")
        sp.set_defaults(func=func)
        return sp

    add("smith", cmd_smith)
    add("smith-mcmillan", cmd_smith_mcmillan)
    add("detdiv", cmd_detdiv)
    sp = add("coprime", cmd_coprime, inputs=("first", "second"))
    sp.add_argument("--side", choices=("left", "right"), default="right")
    add("complete-i0", cmd_complete_i0, n=True)
    add("transfer", cmd_transfer, n=True)
    add("rosenbrock", cmd_rosenbrock, n=True)
    sp = add("reduce", cmd_reduce, n=True)
    sp.add_argument("--order", choices=("ef", "fe"), default="ef")
    sp.add_argument("--left-factor", default=None,
                    help="peel only this part of the left divisor into E")
    add("diagnose", cmd_diagnose, n=True)
    sp = add("local", cmd_local, n=True)
    sp.add_argument("--prime", required=True)
    add("realize", cmd_realize)
    add("realize-dim", cmd_realize_dim)
    add("fof-assemble", cmd_fof_assemble, n=True)
    add("fof-forward", cmd_fof_forward, n=True)
    add("fof-converse", cmd_fof_converse, n=True, n_required=False)
    add("infinity", cmd_infinity)
    add("schur-smith", cmd_schur_smith, n=True)
    return ap


def dumps(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except DomainError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    sys.stdout.write(dumps(out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
