"""Batch command line front end.

Subcommands cover the library surface: weight enumeration, building ladders
from divided-power sequences, closed evaluation, the web form and its Gram
matrices, relation sweeps, factorization compilation, and EXT dimensions.
Scalar parameters are passed as key=value tokens (`enumerate m=2 d=2 N=2`);
webs are passed in the one-line ladder text format, quoted as a single shell
argument. Output is plain text, one record per line, identical bytes for
identical inputs; --json switches to a structured dump with the same content.

Exit codes: 0 on success, 1 on any validation or parse error, 2 when a
relation sweep printed at least one FAIL line, 3 when an EXT computation
cannot reduce its input to a finite quotient.

Divided-power sequences are written as *-joined factors, rightmost acting
first: `E1^2*F1^1` means apply F at position 1, then a thickness-2 E. A bare
`1` (or nothing) is the empty product. A list of sequences is separated by
semicolons.
"""

from __future__ import annotations

import argparse
import json
import sys

from .mfcore import IrreducibleToFinite, compile_web, dump_mf, ext_qdim
from .relations import RULES, verify_report
from .repfun import ev_closed, web_form
from .webs import Ladder, Rung, Zero, enumerate_weights, ladder_from_sequence


class CliError(ValueError):
    """Bad command line input; reported on stderr with exit code 1."""


class _Parser(argparse.ArgumentParser):
    # argparse wants to sys.exit(2) on usage errors; 2 is taken.
    def error(self, message):
        raise CliError(message)


# ------------------------------------------------------------- input parsing


def _parse_int(text):
    try:
        return int(text)
    except ValueError:
        raise CliError(f"expected an integer, got {text!r}") from None


def _parse_int_list(text):
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise CliError(f"expected a bracketed list like [0,2], got {text!r}")
    body = text[1:-1].strip()
    if not body:
        return []
    return [_parse_int(x) for x in body.split(",")]


def _parse_seq(text):
    """One divided-power sequence: *-joined E/F tokens, `1` for identity."""
    text = text.strip()
    if not text or text == "1":
        return []
    out = []
    for tok in text.split("*"):
        tok = tok.strip()
        if "^" not in tok:
            tok += "^1"
        try:
            r = Rung.parse(tok)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        out.append((r.sign, r.pos, r.thickness))
    return out


def _parse_seqs(text):
    return [_parse_seq(part) for part in text.split(";")]


def _parse_web(text):
    try:
        return Ladder.parse(text)
    except ValueError as exc:
        raise CliError(str(exc)) from None


_CONVERTERS = {
    "N": _parse_int,
    "m": _parse_int,
    "d": _parse_int,
    "lambda": _parse_int_list,
    "seq": _parse_seq,
    "seqs": _parse_seqs,
    "rules": lambda t: tuple(x.strip() for x in t.split(",") if x.strip()),
}


def _params(tokens, required, optional=()):
    """Read key=value tokens against a fixed key set; every key at most once."""
    allowed = tuple(required) + tuple(optional)
    out = {}
    for tok in tokens:
        key, sep, val = tok.partition("=")
        if not sep:
            raise CliError(f"expected key=value, got {tok!r}")
        if key not in allowed:
            raise CliError(f"unknown parameter {key!r} (expected {', '.join(allowed)})")
        if key in out:
            raise CliError(f"duplicate parameter {key!r}")
        out[key] = _CONVERTERS[key](val)
    for key in required:
        if key not in out:
            raise CliError(f"missing parameter {key}=")
    return out


def _weight_str(k):
    return "[" + ",".join(str(x) for x in k) + "]"


def _emit(text):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(obj):
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


# ----------------------------------------------------------------- handlers


def _cmd_enumerate(ns):
    p = _params(ns.params, ("m", "d", "N"))
    weights = enumerate_weights(p["m"], p["d"], p["N"])
    if ns.json:
        _emit_json({"weights": [list(k) for k in weights]})
    else:
        for k in weights:
            _emit(_weight_str(k))
    return 0


def _cmd_ladder(ns):
    p = _params(ns.params, ("N", "m", "d", "lambda", "seq"))
    lad = ladder_from_sequence(p["seq"], p["lambda"], p["m"], p["d"], p["N"])
    text = "ZERO" if lad is Zero else str(lad)
    if ns.json:
        _emit_json({"ladder": text})
    else:
        _emit(text)
    return 0


def _cmd_eval(ns):
    value = ev_closed(_parse_web(ns.web))
    if ns.json:
        _emit_json({"value": str(value)})
    else:
        _emit(str(value))
    return 0


def _cmd_form(ns):
    value = web_form(_parse_web(ns.left), _parse_web(ns.right))
    if ns.json:
        _emit_json({"value": str(value)})
    else:
        _emit(str(value))
    return 0


def _cmd_gram(ns):
    p = _params(ns.params, ("N", "m", "d", "lambda", "seqs"))
    lads = [
        ladder_from_sequence(s, p["lambda"], p["m"], p["d"], p["N"])
        for s in p["seqs"]
    ]
    tops = {tuple(l.top) for l in lads if l is not Zero}
    if len(tops) > 1:
        raise CliError(
            "sequences land in different weight spaces: "
            + ", ".join(_weight_str(t) for t in sorted(tops, reverse=True))
        )
    n = len(lads)
    entries = []
    for i in range(n):
        for j in range(n):
            v = web_form(lads[i], lads[j])
            if not v.is_zero():
                entries.append((i, j, v))
    gens = ["ZERO" if l is Zero else str(l) for l in lads]
    if ns.json:
        _emit_json({
            "size": n,
            "gens": gens,
            "entries": [{"row": i, "col": j, "value": str(v)} for i, j, v in entries],
        })
    else:
        lines = [f"size {n}"]
        lines += [f"gen {i} {g}" for i, g in enumerate(gens)]
        lines += [f"entry {i} {j} {v}" for i, j, v in entries]
        _emit("\n".join(lines))
    return 0


def _cmd_verify_relations(ns):
    p = _params(ns.params, ("N",), ("rules",))
    rules = p.get("rules")
    if rules:
        bad = [r for r in rules if r not in RULES]
        if bad:
            raise CliError(
                f"unknown rule(s) {', '.join(bad)} (available: {', '.join(RULES)})"
            )
    lines = verify_report(p["N"], rules)
    failed = sum(1 for line in lines if line.endswith(" FAIL"))
    summary = f"summary: {len(lines)} checked, {len(lines) - failed} passed, {failed} failed"
    if ns.json:
        _emit_json({"lines": lines, "checked": len(lines),
                    "passed": len(lines) - failed, "failed": failed})
    else:
        _emit("\n".join(lines + [summary]))
    return 2 if failed else 0


def _cmd_compile_mf(ns):
    mf = compile_web(_parse_web(ns.web))
    if ns.json:
        _emit_json({
            "N": mf.N,
            "ring": [
                {"var": f"{name}.{j}", "degree": 2 * j, "alphabet": name}
                for name, idx in mf.gr.alphabets
                for j in idx
            ],
            "rows": [{"p": str(p), "q": str(q)} for p, q, _, _ in mf.rows],
            "qshift": mf.qshift,
            "hshift": mf.hshift,
            "basemodule": list(mf.basemodule),
            "boundary": dict(mf.boundary),
        })
    else:
        _emit(dump_mf(mf))
    return 0


def _cmd_ext_dim(ns):
    left = compile_web(_parse_web(ns.left))
    right = compile_web(_parse_web(ns.right))
    if left.boundary != right.boundary:
        raise CliError("webs have different boundaries")
    h0, h1 = ext_qdim(left, right)
    if ns.json:
        _emit_json({"dim0": str(h0), "dim1": str(h1)})
    else:
        _emit(f"dim0: {h0}\ndim1: {h1}")
    return 0


# ----------------------------------------------------------------- dispatch


def _build_parser():
    parser = _Parser(prog="qwebs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, handler, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--json", action="store_true",
                        help="structured output instead of plain lines")
        sp.set_defaults(handler=handler)
        return sp

    sp = add("enumerate", _cmd_enumerate, "list the N-bounded weights with m parts summing to d")
    sp.add_argument("params", nargs="*", metavar="m= d= N=")

    sp = add("ladder", _cmd_ladder, "ladder (or ZERO) for a divided-power sequence at a weight")
    sp.add_argument("params", nargs="*", metavar="N= m= d= lambda= seq=")

    sp = add("eval", _cmd_eval, "closed evaluation of a web")
    sp.add_argument("web", help="ladder text, quoted")

    sp = add("form", _cmd_form, "web form of two webs with common boundary")
    sp.add_argument("left", help="ladder text, quoted")
    sp.add_argument("right", help="ladder text, quoted")

    sp = add("gram", _cmd_gram, "Gram matrix of the web form over generated ladders")
    sp.add_argument("params", nargs="*", metavar="N= m= d= lambda= seqs=")

    sp = add("verify-relations", _cmd_verify_relations, "sweep diagram relations, PASS/FAIL per instance")
    sp.add_argument("params", nargs="*", metavar="N= [rules=]")

    sp = add("compile-mf", _cmd_compile_mf, "compile a web and dump the factorization")
    sp.add_argument("web", help="ladder text, quoted")

    sp = add("ext-dim", _cmd_ext_dim, "graded EXT dimensions between two compiled webs")
    sp.add_argument("left", help="ladder text, quoted")
    sp.add_argument("right", help="ladder text, quoted")

    return parser


def run(argv):
    """Parse argv (no program name), execute, return the exit code."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
        return ns.handler(ns)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except IrreducibleToFinite as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
