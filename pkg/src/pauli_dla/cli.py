"""Command line front end: classify instance files, generate families, run oracle tools."""

from __future__ import annotations

import argparse
import json
import random
import sys
import warnings
from typing import List, Optional, Sequence, Tuple

from . import instances, oracle
from .classifier import Classification, check_generates_full, classify, forbidden_witness, render
from .gf2 import QuadraticForm
from .graphs import connected_components, frustration_graph, recognize_root
from .pauli import InvalidGeneratorError, PauliError, PauliString, from_vector, generator_vectors, parse_pauli, render_pauli

EXIT_PARSE, EXIT_INVALID, EXIT_MISMATCH = 1, 2, 3


class InstanceError(Exception):
    pass


def parse_instance(text: str) -> List[PauliString]:
    """Pauli tokens separated by whitespace; '#' starts a comment; optional ``n=<count>`` header."""
    n = None
    tokens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("n="):
            if n is not None or tokens:
                raise InstanceError(f"line {lineno}: n= header must come first")
            try:
                n = int(line[2:])
            except ValueError:
                raise InstanceError(f"line {lineno}: bad header {line!r}") from None
            if n < 1:
                raise InstanceError(f"line {lineno}: n must be positive")
            continue
        tokens += [(lineno, t) for t in line.split()]
    if not tokens:
        raise InstanceError("no Pauli strings in input")
    if n is None:
        n = max(len(t.lstrip("+-i")) for _, t in tokens)
    out = []
    for lineno, t in tokens:
        try:
            out.append(parse_pauli(t, n))
        except PauliError as e:
            raise InstanceError(f"line {lineno}: {e}") from None
    return out


def read_instance(path: str) -> List[PauliString]:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as e:
        raise InstanceError(str(e)) from None
    return parse_instance(text)


def format_instance(gens: Sequence[PauliString], hermitian: bool = True) -> str:
    """Instance file text; with ``hermitian`` the phase is dropped and I is written '.'."""
    n = gens[0].n
    lines = [f"n={n}"]
    for p in gens:
        if hermitian:
            p = PauliString(p.n, p.a, p.b, (p.a & p.b).bit_count())
            lines.append(render_pauli(p).replace("I", "."))
        else:
            lines.append(render_pauli(p))
    return "\n".join(lines) + "\n"


def _vec_text(v: int, n: int) -> str:
    from .pauli import PauliVector

    return render_pauli(from_vector(PauliVector(n, v)))


def _prepare(path: str, strict: bool) -> Tuple[List[PauliString], List[int], List[int], QuadraticForm]:
    gens = read_instance(path)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        vecs, first = generator_vectors(gens, strict)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return gens, vecs, first, QuadraticForm.pauli(gens[0].n)


def classification_report(gens: Sequence[PauliString], c: Classification) -> dict:
    comps = []
    for rep in c.components:
        diag = {k: v for k, v in sorted(rep.diagnostics.items()) if k not in ("tree", "r0")}
        comps.append(
            {
                "generators": rep.generators,
                "branch": rep.branch,
                "summand": {"kind": rep.summand.kind, "k": rep.summand.k, "r": rep.summand.r,
                            "label": rep.summand.label, "dimension": rep.summand.total_dim},
                "diagnostics": diag,
            }
        )
    return {
        "n": gens[0].n,
        "generators": [render_pauli(p) for p in gens],
        "components": comps,
        "canonical": render([rep.summand for rep in c.components], alias_abelian=True),
        "isomorphism_type": render(c.canonical, alias_abelian=True),
        "total_dim": c.total_dim,
    }


def _emit(obj: dict, plain: bool, plain_text: Optional[str] = None) -> None:
    if plain and plain_text is not None:
        print(plain_text)
    else:
        print(json.dumps(obj, indent=2, ensure_ascii=False))


def cmd_classify(args) -> int:
    gens, vecs, _, form = _prepare(args.file, args.strict)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # lifting was already reported by _prepare
        c = classify(gens, strict=args.strict)
    report = classification_report(gens, c)
    code = 0
    if args.verify:
        v = oracle.verify_classification(vecs, c, form, cap=args.cap)
        if v.status == "unverified":
            report["verified"] = None
        else:
            report["verified"] = v.passed
            if not v.passed:
                for line in v.details:
                    print(f"verification failed: {line}", file=sys.stderr)
                code = EXIT_MISMATCH
    lines = [f"{i}: {r['branch']:<8} {r['summand']['label']}  generators {r['generators']}" for i, r in enumerate(report["components"])]
    lines.append(f"canonical: {report['canonical']}")
    lines.append(f"isomorphic to: {report['isomorphism_type']}")
    lines.append(f"dimension: {report['total_dim']}")
    if "verified" in report:
        lines.append(f"verified: {report['verified']}")
    _emit(report, args.plain, "\n".join(lines))
    return code


def _parse_pairs(text: str) -> List[Tuple[int, int]]:
    out = []
    for item in text.replace(";", ",").split(","):
        item = item.strip()
        if not item:
            continue
        u, v = item.split("-")
        out.append((int(u) - 1, int(v) - 1))
    return out


def cmd_generate(args) -> int:
    kind = args.kind
    try:
        if kind == "qaoa-path":
            gens = instances.qaoa_path(args.n)
        elif kind == "qaoa-cycle":
            gens = instances.qaoa_cycle(args.n)
        elif kind == "qaoa-graph":
            if args.edges is None:
                raise ValueError("qaoa-graph needs --edges")
            gens = instances.qaoa_graph(args.n, _parse_pairs(args.edges))
        else:
            subsets = [[int(x) - 1 for x in s.split(",") if x.strip()] for s in args.subset or []]
            gens = instances.parity_basis(args.n, subsets)
    except ValueError as e:
        raise InstanceError(str(e)) from None
    sys.stdout.write(format_instance(gens, hermitian=kind != "parity-basis"))
    return 0


def tool_closure(args) -> int:
    gens, vecs, _, form = _prepare(args.file, args.strict)
    pts = oracle.closure(vecs, form, cap=args.cap)
    n = gens[0].n
    obj = {"n": n, "size": len(pts), "points": [_vec_text(v, n) for v in sorted(pts.points)]}
    _emit(obj, args.plain, f"{len(pts)} points")
    return 0


def tool_root_graph(args) -> int:
    gens, vecs, first, form = _prepare(args.file, args.strict)
    g = frustration_graph(vecs, form)
    comps = []
    for comp in connected_components(g):
        cert = recognize_root(g.induced(comp))
        entry = {"generators": [first[i] for i in comp], "line_graph": cert is not None}
        if cert is not None:
            entry.update(
                k=cert.root.k,
                edges=[list(e) for e in cert.root.edges],
                vertex_to_edge=[list(e) for e in cert.vertex_to_edge],
                verified=cert.verified,
            )
        comps.append(entry)
    _emit({"n": gens[0].n, "components": comps}, args.plain,
          "\n".join(f"{e['generators']}: " + (f"root on {e['k']} vertices {e['edges']}" if e["line_graph"] else "not a line graph") for e in comps))
    return 0


def tool_witness(args) -> int:
    gens, vecs, first, form = _prepare(args.file, args.strict)
    w = forbidden_witness(vecs, form)
    idx = None if w is None else [first[i] for i in w]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        full = check_generates_full(gens, strict=args.strict)
    obj = {"n": gens[0].n, "witness": idx, "connected": full.connected, "spans": full.spans, "generates_full": full.full}
    _emit(obj, args.plain, f"witness: {idx}\ngenerates su(2^{gens[0].n}): {full.full}")
    return 0


def tool_commutator_graph(args) -> int:
    gens, vecs, _, form = _prepare(args.file, args.strict)
    n = gens[0].n
    try:
        comps = oracle.commutator_graph(vecs, n)
    except ValueError as e:
        raise InstanceError(str(e)) from None
    gset = set(vecs)
    obj = {
        "n": n,
        "component_count": len(comps),
        "singletons": sum(len(c) == 1 for c in comps),
        "components": [{"size": len(c), "contains_generators": bool(gset & set(c)),
                        "points": [_vec_text(v, n) for v in c]} for c in comps],
    }
    _emit(obj, args.plain, f"{len(comps)} components, {obj['singletons']} singletons")
    return 0


def tool_cartan(args) -> int:
    gens, vecs, _, form = _prepare(args.file, args.strict)
    n = gens[0].n
    if args.functional is not None:
        bits = args.functional.strip()
        if len(bits) != form.dim or set(bits) - {"0", "1"}:
            raise InstanceError(f"--functional needs {form.dim} bits laid out (a|b|r)")
        func = sum(1 << i for i, ch in enumerate(bits) if ch == "1")
    else:
        func = random.Random(args.seed).getrandbits(form.dim)
    pts = oracle.closure(vecs, form, cap=args.cap)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        split = oracle.cartan_split(pts.points, func, form)
    obj = {
        "n": n,
        "functional": "".join(str((func >> i) & 1) for i in range(form.dim)),
        "l": [_vec_text(v, n) for v in sorted(split.l_part)],
        "m": [_vec_text(v, n) for v in sorted(split.m_part)],
        "valid": split.valid,
    }
    _emit(obj, args.plain, f"|l| = {len(split.l_part)}, |m| = {len(split.m_part)}, valid: {split.valid}")
    return 0 if split.valid else EXIT_MISMATCH


def tool_catalog(args) -> int:
    graphs = oracle.catalog_forbidden()
    obj = {"count": len(graphs), "graphs": [g.adjacency_lists() for g in graphs]}
    _emit(obj, args.plain, "\n".join(str(g.adjacency_lists()) for g in graphs))
    return 0


TOOLS = {
    "closure": tool_closure,
    "root-graph": tool_root_graph,
    "witness": tool_witness,
    "commutator-graph": tool_commutator_graph,
    "cartan": tool_cartan,
    "catalog": tool_catalog,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pauli-dla", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, needs_file=True):
        if needs_file:
            sp.add_argument("file", help="instance file, or - for standard input")
        sp.add_argument("--strict", action="store_true", help="reject Hermitian strings instead of lifting them")
        sp.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP, help="point limit for closure computations")
        fmt = sp.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="plain", action="store_false", help="JSON output (default)")
        fmt.add_argument("--plain", dest="plain", action="store_true", help="short text output")
        sp.set_defaults(plain=False)
        sp.add_argument("--seed", type=int, default=0, help="seed for randomized tools")

    c = sub.add_parser("classify", help="decompose the generated Lie algebra")
    common(c)
    c.add_argument("--verify", action="store_true", help="check against brute-force closure")
    c.set_defaults(func=cmd_classify)

    g = sub.add_parser("generate", help="write a generator family as an instance file")
    g.add_argument("kind", choices=["qaoa-path", "qaoa-cycle", "qaoa-graph", "parity-basis"])
    g.add_argument("--n", type=int, required=True, help="number of qubits")
    g.add_argument("--edges", help="qaoa-graph edges as 1-2,2-3,... (1-based)")
    g.add_argument("--subset", action="append", help="parity-basis subset as 1,2,3 (1-based); repeatable")
    g.set_defaults(func=cmd_generate)

    t = sub.add_parser("tools", help="oracle and graph utilities")
    tsub = t.add_subparsers(dest="tool", required=True)
    for name, fn in TOOLS.items():
        sp = tsub.add_parser(name)
        common(sp, needs_file=name != "catalog")
        if name == "cartan":
            sp.add_argument("--functional", help="2n+1 bits (a|b|r); random from --seed if omitted")
        sp.set_defaults(func=fn)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InstanceError, PauliError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidGeneratorError as e:
        print(f"invalid generator: {e}", file=sys.stderr)
        return EXIT_INVALID
    except oracle.ClosureCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
