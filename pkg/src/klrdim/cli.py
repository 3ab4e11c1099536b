"""Command line front end.

Every command validates its whole request before dispatching, emits either
a human-readable text document or versioned JSON (``"schema": "klr/1"``),
and is deterministic: identical requests produce byte-identical output.

Exit codes: 0 on success, 1 on domain errors (bad Cartan data, incompatible
tuples, exceeded time budgets, ...), 2 on usage errors.  Verification
mismatches are data, not errors: ``verify`` exits 0 and reports them.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import basis as basis_mod
from . import dims, idempotents, levelred
from .budget import Deadline
from .cartan import (
    CartanData,
    RootElement,
    Weight,
    builtin_cartan,
    builtin_names,
    cartan_from_json,
)
from .errors import BadShape, KlrError, OutOfRange, PreconditionFail
from .perms import block_form_of
from .qpoly import LaurentPoly
from .verify import SCOPES, verify_suite

SCHEMA = "klr/1"


@dataclass
class Context:
    cartan: CartanData
    labels: list[int]
    fmt: str
    deadline: Deadline | None
    threads: int

    def index_of(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise OutOfRange(
                f"unknown node label {label}; known labels: {self.labels}"
            ) from None

    def label_of(self, index: int) -> int:
        return self.labels[index]


def _parse_int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise PreconditionFail(f"expected a comma list of integers, got {text!r}") from None


def _load_cartan(spec: str) -> tuple[CartanData, list[int]]:
    if spec.endswith(".json") or "/" in spec:
        try:
            with open(spec, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise BadShape(f"cannot read Cartan file {spec}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise BadShape(f"invalid JSON in Cartan file {spec}: {exc}") from None
        return cartan_from_json(doc)
    c = builtin_cartan(spec)
    return c, list(range(1, c.n + 1))


def _context(args) -> Context:
    c, labels = _load_cartan(args.cartan)
    deadline = Deadline(args.time_budget) if args.time_budget else None
    return Context(c, labels, args.format, deadline, args.threads)


def _weight(ctx: Context, args) -> Weight:
    coeffs = _parse_int_list(args.weight)
    if len(coeffs) != ctx.cartan.n:
        raise PreconditionFail(
            f"weight needs {ctx.cartan.n} coefficients (node order), got {len(coeffs)}"
        )
    w = Weight(tuple(coeffs))
    if not w.is_dominant:
        raise PreconditionFail("weight coefficients must be non-negative")
    return w


def _tuple(ctx: Context, text: str) -> tuple[int, ...]:
    return tuple(ctx.index_of(x) for x in _parse_int_list(text))


def _beta(ctx: Context, text: str) -> RootElement:
    coeffs = _parse_int_list(text)
    if len(coeffs) != ctx.cartan.n:
        raise PreconditionFail(
            f"block needs {ctx.cartan.n} multiplicities (node order), got {len(coeffs)}"
        )
    return RootElement(tuple(coeffs))


def _labels_of(ctx: Context, nu) -> list[int]:
    return [ctx.label_of(i) for i in nu]


def _poly_json(p: LaurentPoly) -> dict:
    return {"pairs": p.to_pairs(), "display": str(p)}


def _emit(ctx: Context, doc: dict, text: str) -> None:
    if ctx.fmt == "json":
        print(json.dumps({"schema": SCHEMA, **doc}, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _cmd_gdim(args) -> int:
    ctx = _context(args)
    lam = _weight(ctx, args)
    nu = _tuple(ctx, args.nu)
    nuprime = _tuple(ctx, args.nuprime if args.nuprime is not None else args.nu)
    p = dims.graded_dim(ctx.cartan, lam, nu, nuprime, deadline=ctx.deadline)
    _emit(
        ctx,
        {
            "command": "gdim",
            "nu": _labels_of(ctx, nu),
            "nuprime": _labels_of(ctx, nuprime),
            "value": _poly_json(p),
        },
        str(p),
    )
    return 0


def _pair_table(ctx: Context, lam: Weight, beta: RootElement):
    tuples = list(dims.tuples_with_content(beta))
    rows = []
    total = 0
    for nu in tuples:
        for nuprime in tuples:
            v = dims.dim(ctx.cartan, lam, nu, nuprime, deadline=ctx.deadline)
            rows.append((nu, nuprime, v))
            total += v
    return rows, total


def _cmd_dim(args) -> int:
    ctx = _context(args)
    lam = _weight(ctx, args)
    if args.nu is not None and args.nuprime is not None:
        nu = _tuple(ctx, args.nu)
        nuprime = _tuple(ctx, args.nuprime)
        v = dims.dim(ctx.cartan, lam, nu, nuprime, deadline=ctx.deadline)
        _emit(
            ctx,
            {
                "command": "dim",
                "nu": _labels_of(ctx, nu),
                "nuprime": _labels_of(ctx, nuprime),
                "value": v,
            },
            str(v),
        )
        return 0
    if args.beta is None:
        raise PreconditionFail("need either --nu/--nuprime or --beta")
    beta = _beta(ctx, args.beta)
    if not args.all_pairs:
        v = dims.block_dim(ctx.cartan, lam, beta, deadline=ctx.deadline, threads=ctx.threads)
        _emit(
            ctx,
            {"command": "dim", "beta": list(beta.coeffs), "value": v},
            str(v),
        )
        return 0
    rows, total = _pair_table(ctx, lam, beta)
    lines = [
        f"e({','.join(map(str, _labels_of(ctx, nu)))}) "
        f"e({','.join(map(str, _labels_of(ctx, nuprime)))})  {v}"
        for nu, nuprime, v in rows
    ]
    lines.append(f"total  {total}")
    _emit(
        ctx,
        {
            "command": "dim",
            "beta": list(beta.coeffs),
            "pairs": [
                {
                    "nu": _labels_of(ctx, nu),
                    "nuprime": _labels_of(ctx, nuprime),
                    "value": v,
                }
                for nu, nuprime, v in rows
            ],
            "total": total,
        },
        "\n".join(lines),
    )
    return 0


def _cmd_block(args) -> int:
    ctx = _context(args)
    lam = _weight(ctx, args)
    beta = _beta(ctx, args.beta)
    g = dims.block_graded_dim(ctx.cartan, lam, beta, deadline=ctx.deadline, threads=ctx.threads)
    u = dims.block_dim(ctx.cartan, lam, beta, deadline=ctx.deadline, threads=ctx.threads)
    _emit(
        ctx,
        {
            "command": "block",
            "beta": list(beta.coeffs),
            "graded": _poly_json(g),
            "ungraded": u,
        },
        f"graded   {g}\nungraded {u}",
    )
    return 0


def _cmd_algebra(args) -> int:
    ctx = _context(args)
    lam = _weight(ctx, args)
    n = args.n
    if n < 0:
        raise PreconditionFail("--n must be >= 0")
    blocks = []
    total_g = LaurentPoly.zero()
    total_u = 0
    for beta in dims.blocks_of_size(ctx.cartan, n):
        g = dims.block_graded_dim(
            ctx.cartan, lam, beta, deadline=ctx.deadline, threads=ctx.threads
        )
        u = dims.block_dim(ctx.cartan, lam, beta, deadline=ctx.deadline, threads=ctx.threads)
        blocks.append((beta, g, u))
        total_g = total_g + g
        total_u += u
    lines = [
        f"beta={','.join(map(str, beta.coeffs))}  graded {g}  ungraded {u}"
        for beta, g, u in blocks
    ]
    lines.append(f"total  graded {total_g}  ungraded {total_u}")
    _emit(
        ctx,
        {
            "command": "algebra",
            "n": n,
            "blocks": [
                {"beta": list(b.coeffs), "graded": _poly_json(g), "ungraded": u}
                for b, g, u in blocks
            ],
            "total": {"graded": _poly_json(total_g), "ungraded": total_u},
        },
        "\n".join(lines),
    )
    return 0


def _cmd_nonzero(args) -> int:
    ctx = _context(args)
    lam = _weight(ctx, args)
    nu = _tuple(ctx, args.nu)
    method = args.method
    if method == "direct":
        verdict = idempotents.nonzero_direct(ctx.cartan, lam, nu, deadline=ctx.deadline)
    elif method == "divided":
        verdict = idempotents.nonzero_divided(ctx.cartan, lam, nu, deadline=ctx.deadline)
    elif method in ("blockwise", "tilde"):
        method = "blockwise"
        verdict = idempotents.nonzero_blockwise(ctx.cartan, lam, nu)
    else:
        fundamentals = [i for i, k in enumerate(lam.coeffs) for _ in range(k)]
        verdict = idempotents.nonzero_by_shuffle(
            ctx.cartan, nu, fundamentals, deadline=ctx.deadline
        )
    witness = verdict.witness
    if method == "shuffle" and witness is not None:
        witness = [ _labels_of(ctx, piece) for piece in witness ]
    elif method == "blockwise":
        witness = [list(pair) for pair in witness]
    _emit(
        ctx,
        {
            "command": "nonzero",
            "nu": _labels_of(ctx, nu),
            "method": verdict.method,
            "nonzero": verdict.nonzero,
            "witness": witness,
        },
        f"{'nonzero' if verdict.nonzero else 'zero'} (method {verdict.method}, "
        f"witness {witness})",
    )
    return 0


def _cmd_basis(args) -> int:
    ctx = _context(args)
    lam = _weight(ctx, args)
    mu = _tuple(ctx, args.mu)
    letters = (
        tuple(ctx.index_of(x) for x in _parse_int_list(args.letters))
        if args.letters
        else None
    )
    form = block_form_of(mu, letters)
    mb = basis_mod.monomial_basis(ctx.cartan, lam, mu, form)
    bounds = basis_mod.exponent_bounds(ctx.cartan, lam, mu, form)
    doc = {
        "command": "basis",
        "mu": _labels_of(ctx, mu),
        "grouped": _labels_of(ctx, form.tuple),
        "bounds": list(bounds),
        "block_sizes": list(form.sizes),
        "empty": mb is None,
        "cardinality": 0 if mb is None else mb.cardinality,
    }
    lines = [
        f"grouped {','.join(map(str, doc['grouped']))}",
        f"bounds  {','.join(map(str, bounds))}",
        f"cardinality {doc['cardinality']}",
    ]
    if mb is not None and args.list:
        elements = []
        for w, r in mb.elements():
            if ctx.deadline is not None:
                ctx.deadline.check("basis enumeration")
            elements.append({"w": list(w), "r": list(r)})
            lines.append(f"w={list(w)} r={list(r)}")
        doc["elements"] = elements
    _emit(ctx, doc, "\n".join(lines))
    return 0


def _cmd_reduce(args) -> int:
    ctx = _context(args)
    lam = _weight(ctx, args)
    parts = []
    for chunk in args.split.split(";"):
        coeffs = _parse_int_list(chunk)
        if len(coeffs) != ctx.cartan.n:
            raise PreconditionFail(
                f"each split part needs {ctx.cartan.n} coefficients"
            )
        parts.append(Weight(tuple(coeffs)))
    if args.nu is not None and args.mu is not None:
        nu = _tuple(ctx, args.nu)
        mu = _tuple(ctx, args.mu)
        reduced = levelred.reduce_pair_dim_multi(
            ctx.cartan, lam, nu, mu, parts, deadline=ctx.deadline
        )
        direct = dims.dim(ctx.cartan, lam, nu, mu, deadline=ctx.deadline)
        doc = {
            "command": "reduce",
            "nu": _labels_of(ctx, nu),
            "mu": _labels_of(ctx, mu),
        }
    elif args.beta is not None:
        beta = _beta(ctx, args.beta)
        reduced = levelred.reduce_block_dim(
            ctx.cartan, lam, beta, parts, deadline=ctx.deadline
        )
        direct = dims.block_dim(ctx.cartan, lam, beta, deadline=ctx.deadline)
        doc = {"command": "reduce", "beta": list(beta.coeffs)}
    else:
        raise PreconditionFail("need either --nu/--mu or --beta")
    doc.update(
        {
            "split": [list(w.coeffs) for w in parts],
            "reduced": reduced,
            "direct": direct,
            "match": reduced == direct,
        }
    )
    _emit(
        ctx,
        doc,
        f"reduced {reduced}\ndirect  {direct}\n"
        f"{'match' if reduced == direct else 'MISMATCH'}",
    )
    return 0


def _cmd_tilde(args) -> int:
    ctx = _context(args)
    mu = _tuple(ctx, args.mu)
    letters = (
        tuple(ctx.index_of(x) for x in _parse_int_list(args.letters))
        if args.letters
        else None
    )
    form = block_form_of(mu, letters)
    from .perms import sorting_perm

    d = sorting_perm(mu, form)
    doc = {
        "command": "tilde",
        "mu": _labels_of(ctx, mu),
        "grouped": _labels_of(ctx, form.tuple),
        "letters": _labels_of(ctx, form.letters),
        "block_sizes": list(form.sizes),
        "sorting_perm": list(d),
    }
    text = (
        f"grouped {','.join(map(str, doc['grouped']))}\n"
        f"blocks  {','.join(map(str, form.sizes))}\n"
        f"sorting permutation {list(d)}"
    )
    if args.weight is not None:
        lam = _weight(ctx, args)
        bounds = basis_mod.exponent_bounds(ctx.cartan, lam, mu, form)
        doc["bounds"] = list(bounds)
        text += f"\nbounds  {','.join(map(str, bounds))}"
    _emit(ctx, doc, text)
    return 0


def _cmd_verify(args) -> int:
    ctx = _context(args)
    lam = _weight(ctx, args)
    reports = verify_suite(
        args.suite, ctx.cartan, lam, max_n=args.max_n, deadline=ctx.deadline
    )
    doc = {
        "command": "verify",
        "suite": args.suite,
        "ok": all(r.ok for r in reports),
        "reports": [r.to_json() for r in reports],
    }
    text = "\n".join(f"[{r.suite}] {r.summary()}" for r in reports)
    _emit(ctx, doc, text)
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klrdim",
        description=(
            "Exact dimensions, idempotent tests, level reduction and "
            "monomial-basis indexing for cyclotomic quiver Hecke algebras."
        ),
        epilog=(
            "Cartan sources: a registry name (" + builtin_names() + ") or a "
            'JSON file {"matrix": [[...]], "labels": [...]}. Builtin labels '
            "are 1..rank in node order; weights and blocks are comma lists "
            "in node order; tuples are comma lists of node labels. "
            "Exit codes: 0 success, 1 domain error, 2 usage error."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, weight_required=True):
        p.add_argument("--cartan", required=True, help="registry name or JSON file")
        p.add_argument(
            "--weight",
            required=weight_required,
            default=None,
            help="dominant weight coefficients, comma list in node order",
        )
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument(
            "--time-budget",
            type=float,
            default=None,
            metavar="SECONDS",
            help="abort enumerations after this wall-clock budget",
        )
        p.add_argument(
            "--threads",
            type=int,
            default=1,
            help="fan block sums out over worker threads (results identical)",
        )

    p = sub.add_parser("gdim", help="graded dimension of one pair")
    common(p)
    p.add_argument("--nu", required=True)
    p.add_argument("--nuprime", default=None, help="defaults to --nu")
    p.set_defaults(func=_cmd_gdim)

    p = sub.add_parser("dim", help="ungraded dimension of a pair or block")
    common(p)
    p.add_argument("--nu", default=None)
    p.add_argument("--nuprime", default=None)
    p.add_argument("--beta", default=None, help="block multiplicities, node order")
    p.add_argument("--all-pairs", action="store_true", dest="all_pairs")
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("block", help="graded and ungraded dimension of a block")
    common(p)
    p.add_argument("--beta", required=True)
    p.set_defaults(func=_cmd_block)

    p = sub.add_parser("algebra", help="whole-algebra dimensions at size n")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_algebra)

    p = sub.add_parser("nonzero", help="decide whether e(nu) vanishes")
    common(p)
    p.add_argument("--nu", required=True)
    p.add_argument(
        "--method",
        choices=("direct", "divided", "blockwise", "tilde", "shuffle"),
        default="direct",
        help="'tilde' is an alias for 'blockwise' (grouped-tuple criterion)",
    )
    p.set_defaults(func=_cmd_nonzero)

    p = sub.add_parser("basis", help="monomial basis index set for --mu")
    common(p)
    p.add_argument("--mu", required=True)
    p.add_argument("--letters", default=None, help="explicit letter order")
    p.add_argument("--list", action="store_true", help="emit every (w, r) element")
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("reduce", help="level-reduce a pair or block dimension")
    common(p)
    p.add_argument(
        "--split",
        required=True,
        help="weight parts separated by ';', e.g. '1,0;0,1;0,1'",
    )
    p.add_argument("--nu", default=None)
    p.add_argument("--mu", default=None)
    p.add_argument("--beta", default=None)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("tilde", help="canonical grouped form of a tuple")
    common(p, weight_required=False)
    p.add_argument("--mu", required=True)
    p.add_argument("--letters", default=None)
    p.set_defaults(func=_cmd_tilde)

    p = sub.add_parser(
        "verify",
        help="run a self-verification suite (mismatches are reported, not raised)",
    )
    common(p)
    p.add_argument("--suite", choices=SCOPES, default="all")
    p.add_argument("--max-n", type=int, default=3, dest="max_n")
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except KlrError as exc:
        if getattr(args, "format", "text") == "json":
            print(
                json.dumps(
                    {
                        "schema": SCHEMA,
                        "error": {"type": type(exc).__name__, "message": str(exc)},
                    },
                    sort_keys=True,
                )
            )
        else:
            print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
