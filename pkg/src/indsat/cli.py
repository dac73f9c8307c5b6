"""Command-line front end.

JSON goes to stdout, diagnostics to stderr.  Exit status: 0 success or
holds, 1 negative verdict, 2 usage error, 3 resource cap hit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import experiments
from .classifier import chipped_witnesses, class_a_witnesses, class_b_witnesses, classify
from .coloring import DEFAULT_PATH_BUDGET, dimension_with_witness, format_dimension
from .constructions import (corollary3_coloring, find_class_f, proposition4_suite,
                            recognize_class_h, theorem_a_embedding, theorem_a_s3_coloring,
                            theorem_b_embedding, theorem_b_s3_coloring)
from .decomposition import decompose, min_k
from .errors import ContractError, Graph6Error, ResourceLimitError
from .graph import Graph, parse_graph6, to_graph6
from .hamming import build
from .modular import homogeneous_sets, is_prime, theorem20_check
from .saturation import (SEARCH_MAX_N, read_corpus, search_saturating, verify, verify_hamming)

SCHEMA = "indsat/1"
OK, NEGATIVE, USAGE, RESOURCE = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    graphs: list[str] = field(default_factory=list)
    max_n: int | None = None
    max_k: int | None = None
    budget_paths: int = DEFAULT_PATH_BUDGET
    budget_vertices: int | None = None
    jobs: int = 1
    all_witnesses: bool = False
    corpus: str | None = None
    output: str = "json"
    options: dict = field(default_factory=dict)

    def check(self) -> None:
        for name in ("max_n", "max_k", "budget_paths", "budget_vertices", "jobs"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise ContractError(f"--{name.replace('_', '-')} must be positive")


def read_graph(text: str) -> Graph:
    """A graph6 string, or a path to a file whose first graph6 line is used."""
    p = Path(text)
    if p.is_file():
        gs = read_corpus(p.read_text().splitlines())
        if not gs:
            raise ContractError(f"{text}: no graph found")
        return gs[0]
    return parse_graph6(text)


def _need(cfg: RunConfig, count: int) -> list[Graph]:
    if len(cfg.graphs) != count:
        raise ContractError(f"{cfg.command} takes {count} graph argument(s)")
    return [read_graph(t) for t in cfg.graphs]


# ---------------------------------------------------------------------------
# commands; each returns (status, report)


def cmd_dim(cfg: RunConfig):
    (g,) = _need(cfg, 1)
    d, coloring = dimension_with_witness(g, cfg.budget_paths)
    out = {"graph6": to_graph6(g), "dimension": format_dimension(d)}
    if coloring is not None:
        out["coloring"] = coloring.as_triples()
    return OK, out


def cmd_decompose(cfg: RunConfig):
    (g,) = _need(cfg, 1)
    dec = decompose(g)
    if dec is None:
        return NEGATIVE, {"graph6": to_graph6(g), "two_hamming": False}
    k, opt = min_k(g)
    return OK, {"graph6": to_graph6(g), "two_hamming": True, "decomposition": dec.as_dict(),
                "optimal": opt.as_dict(), "min_k": k}


def cmd_classify(cfg: RunConfig):
    (g,) = _need(cfg, 1)
    v = classify(g)
    out = {"graph6": to_graph6(g), **v.as_dict()}
    if cfg.all_witnesses:
        out["chipped_witnesses"] = [w.as_dict() for w in chipped_witnesses(g)]
        out["class_a_witnesses"] = [w.as_dict() for w in class_a_witnesses(g)]
        out["class_b_witnesses"] = [w.as_dict() for w in class_b_witnesses(g)]
    return (OK if v.good else NEGATIVE), out


def cmd_verify(cfg: RunConfig):
    hamming = cfg.options.get("hamming")
    if hamming:
        (h,) = _need(cfg, 1)
        n, k = hamming
        hg = build(n, k, cfg.budget_vertices)
        rep = verify(hg.graph, h, cfg.all_witnesses) if cfg.all_witnesses else verify_hamming(hg, h)
        out = {"host": {"n": n, "k": k}, "pattern": to_graph6(h), **rep.as_dict()}
    else:
        g, h = _need(cfg, 2)
        rep = verify(g, h, cfg.all_witnesses)
        out = {"graph6": to_graph6(g), "pattern": to_graph6(h), **rep.as_dict()}
    return (OK if rep.holds else NEGATIVE), out


def cmd_search(cfg: RunConfig):
    (h,) = _need(cfg, 1)
    max_n = cfg.max_n or 6
    corpus = None
    if cfg.corpus:
        corpus = read_corpus(Path(cfg.corpus).read_text().splitlines())
    found = search_saturating(h, max_n, corpus, allow_large=cfg.options.get("allow_large", False))
    return OK, {"pattern": to_graph6(h), "caps": {"max_n": max_n, "search_max_n": SEARCH_MAX_N},
                "corpus": cfg.corpus, "found": len(found), "graphs": [to_graph6(g) for g in found]}


def cmd_construct(cfg: RunConfig):
    family = cfg.options.get("family")
    n = cfg.options.get("n")
    if family == "prop4":
        entries = [e.as_dict() for e in proposition4_suite(cfg.max_k or 8)]
        ok = all(e["verified"] for e in entries)
        return (OK if ok else NEGATIVE), {"family": family, "entries": entries}
    if family == "subdivision":
        (h,) = _need(cfg, 1)
        sp = corollary3_coloring(h, cfg.options.get("vertex", 0))
        return OK, {"graph6": to_graph6(sp.graph), "family": family, "n": sp.n,
                    "f_vertices": sp.f_vertices, "coloring": sp.coloring.as_triples(),
                    "witness": sp.witness.as_dict() if sp.witness else None}
    if n is None:
        raise ContractError("--n is required for this family")
    (h,) = _need(cfg, 1)
    if family == "classH":
        hw = recognize_class_h(h, n)
        if hw is None:
            return NEGATIVE, {"graph6": to_graph6(h), "family": family, "member": False}
        emb = {}
        for q in range(2, n + 1):
            sigma, extra, plan = theorem_a_embedding(h, hw, q)
            emb[str(q)] = {"k": plan.k, "extra": [list(x) for x in extra],
                           "sigma": [list(sigma[v]) for v in range(h.n)]}
        plus, coloring = theorem_a_s3_coloring(h, hw)
        return OK, {"graph6": to_graph6(h), "family": family, "member": True,
                    "witness": hw.as_dict(), "embeddings": emb,
                    "plus_graph6": to_graph6(plus), "coloring": coloring.as_triples()}
    if family == "classF":
        fw = find_class_f(h, n)
        if fw is None:
            return NEGATIVE, {"graph6": to_graph6(h), "family": family, "member": False}
        emb = {}
        for q in range(2, n + 1):
            sigma, extra, k = theorem_b_embedding(h, fw, q, cfg.max_k)
            emb[str(q)] = {"k": k, "extra": [list(x) for x in extra],
                           "sigma": [list(sigma[v]) for v in range(h.n)]}
        plus, coloring, how = theorem_b_s3_coloring(h, fw)
        return OK, {"graph6": to_graph6(h), "family": family, "member": True,
                    "witness": fw.as_dict(), "embeddings": emb, "plus_graph6": to_graph6(plus),
                    "coloring": coloring.as_triples(), "coloring_source": how}
    raise ContractError(f"unknown family {family!r}")


def cmd_prime(cfg: RunConfig):
    (g,) = _need(cfg, 1)
    p = is_prime(g)
    out = {"graph6": to_graph6(g), "prime": p}
    if not p:
        out["homogeneous_sets"] = [list(s) for s in homogeneous_sets(g)]
    return (OK if p else NEGATIVE), out


def cmd_blowup(cfg: RunConfig):
    g, h = _need(cfg, 2)
    rep = theorem20_check(g, h)
    return (OK if rep.passed else NEGATIVE), {"graph6": to_graph6(g), "pattern": to_graph6(h),
                                              **rep.as_dict()}


def cmd_experiment(cfg: RunConfig):
    name = cfg.options.get("name")
    runner = experiments.RUNNERS.get(name)
    if runner is None:
        raise ContractError(f"unknown experiment {name!r}; choose from {sorted(experiments.RUNNERS)}")
    kwargs = {}
    params = runner.__code__.co_varnames[:runner.__code__.co_argcount]
    if cfg.max_n is not None and "max_n" in params:
        kwargs["max_n"] = cfg.max_n
    if cfg.max_k is not None:
        for key in ("max_k", "k_cap"):
            if key in params:
                kwargs[key] = cfg.max_k
    if cfg.corpus and "corpus" in params:
        kwargs["corpus"] = read_corpus(Path(cfg.corpus).read_text().splitlines())
    report = runner(**kwargs)
    negative = (report.get("found") or report.get("violations") or report.get("failures")
                or report.get("mismatches") or report.get("ok") is False
                or report.get("all_passed") is False or report.get("all_verified") is False)
    return (NEGATIVE if negative else OK), report


COMMANDS = {
    "dim": cmd_dim,
    "decompose": cmd_decompose,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "search": cmd_search,
    "construct": cmd_construct,
    "prime": cmd_prime,
    "blowup": cmd_blowup,
    "experiment": cmd_experiment,
}


def run(cfg: RunConfig) -> tuple[int, dict]:
    saved = os.environ.get("INDSAT_BUDGET_VERTICES")
    try:
        cfg.check()
        if cfg.budget_vertices is not None:
            os.environ["INDSAT_BUDGET_VERTICES"] = str(cfg.budget_vertices)
        status, report = COMMANDS[cfg.command](cfg)
    except ResourceLimitError as exc:
        return RESOURCE, {"schema": SCHEMA, "command": cfg.command, "error": "resource",
                          "message": str(exc), "limit": exc.limit}
    except (ContractError, Graph6Error) as exc:
        return USAGE, {"schema": SCHEMA, "command": cfg.command, "error": "usage", "message": str(exc)}
    finally:
        if cfg.budget_vertices is not None:
            if saved is None:
                os.environ.pop("INDSAT_BUDGET_VERTICES", None)
            else:
                os.environ["INDSAT_BUDGET_VERTICES"] = saved
    report = {"schema": SCHEMA, "command": cfg.command, **report}
    return status, report


# ---------------------------------------------------------------------------
# argument parsing


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-n", type=int)
    common.add_argument("--max-k", type=int)
    common.add_argument("--budget-paths", type=int, default=DEFAULT_PATH_BUDGET)
    common.add_argument("--budget-vertices", type=int)
    common.add_argument("--jobs", type=int, default=1,
                        help="accepted for compatibility; all runs are sequential and deterministic")
    common.add_argument("--all-witnesses", action="store_true")
    common.add_argument("--corpus", metavar="FILE")
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--json", dest="output", action="store_const", const="json")
    mode.add_argument("--human", dest="output", action="store_const", const="human")
    common.set_defaults(output="json")

    p = argparse.ArgumentParser(prog="indsat", description="Induced saturation toolkit")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("dim", "decompose", "classify", "prime"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("graph")
    s = sub.add_parser("verify", parents=[common])
    s.add_argument("graphs", nargs="+", help="G H, or just H with --hamming N K")
    s.add_argument("--hamming", type=int, nargs=2, metavar=("N", "K"))
    s = sub.add_parser("search", parents=[common])
    s.add_argument("graph")
    s.add_argument("--allow-large", action="store_true")
    s = sub.add_parser("construct", parents=[common])
    s.add_argument("--family", required=True, choices=["classH", "classF", "prop4", "subdivision"])
    s.add_argument("--n", type=int)
    s.add_argument("--vertex", type=int, default=0)
    s.add_argument("graph", nargs="?")
    s = sub.add_parser("blowup", parents=[common])
    s.add_argument("graphs", nargs=2, metavar="G")
    s = sub.add_parser("experiment", parents=[common])
    s.add_argument("name", choices=sorted(experiments.RUNNERS))
    return p


def config_from_args(argv: list[str] | None = None) -> RunConfig:
    a = _parser().parse_args(argv)
    graphs = list(getattr(a, "graphs", None) or [])
    if getattr(a, "graph", None):
        graphs = [a.graph]
    options = {}
    for key in ("hamming", "allow_large", "family", "n", "vertex", "name"):
        if getattr(a, key, None) is not None:
            options[key] = getattr(a, key)
    return RunConfig(a.command, graphs, a.max_n, a.max_k, a.budget_paths, a.budget_vertices,
                     a.jobs, a.all_witnesses, a.corpus, a.output, options)


def _human(report: dict, indent: str = "") -> str:
    lines = []
    for k, v in report.items():
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.append(_human(v, indent + "  "))
        else:
            lines.append(f"{indent}{k}: {json.dumps(v) if isinstance(v, list) else v}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    try:
        cfg = config_from_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    status, report = run(cfg)
    if status in (USAGE, RESOURCE):
        print(report.get("message", ""), file=sys.stderr)
    if cfg.output == "human":
        print(_human(report))
    else:
        print(json.dumps(report, sort_keys=True))
    return status


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
