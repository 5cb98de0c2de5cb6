"""DOT, TSV and JSON emitters. Output is byte-deterministic for fixed input."""
from __future__ import annotations

import json

from .charged_fock import FockParam, signatures
from .crystal import f_op
from .heisenberg import f_inf, inf_labels
from .partitions import multipartitions_upto, render, total

SCHEMA_VERSION = 1
TSV_COLUMNS = ("lambda", "n", "p", "q", "dim", "finite_dim")


def _fmt(value) -> str:
    return str(value)


def emit_crystal_dot(p: FockParam, n_max: int, which: str = "km") -> str:
    """Crystal graph on all labels of size at most ``n_max``; edges point along ``f``."""
    nodes = list(multipartitions_upto(n_max, p.ell))
    lines = [f'digraph "{which}" {{', "  node [shape=box];"]
    lines += [f'  "{render(lam)}";' for lam in nodes]
    for lam in nodes:
        if which == "km":
            addable = sorted(z for z, sig in signatures(lam, p).items() if any(s > 0 for s, _ in sig))
            for z in addable:
                mu = f_op(lam, z, p)
                if mu is not None and total(mu) <= n_max:
                    lines.append(f'  "{render(lam)}" -> "{render(mu)}" [label="{_fmt(z)}"];')
        elif which == "heis":
            if total(lam) + p.e > n_max:
                continue
            for i in inf_labels(lam, p, p.e):
                mu = f_inf(lam, i, p)
                if mu is not None:
                    lines.append(f'  "{render(lam)}" -> "{render(mu)}" [label="{i}"];')
        else:
            raise ValueError(f"unknown crystal {which!r}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def results_tsv(results) -> str:
    rows = ["\t".join(TSV_COLUMNS)]
    for r in results:
        rows.append("\t".join([render(r.lam), str(r.n), str(r.p), str(r.q),
                               str(r.dim_support), str(r.finite_dim).lower()]))
    return "\n".join(rows) + "\n"


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def results_json(results, p: FockParam) -> str:
    return dumps({"schema": SCHEMA_VERSION, "param": param_dict(p),
                  "rows": [r.as_dict() for r in results]})


def param_dict(p: FockParam) -> dict:
    out = {"kappa": str(p.kappa), "s": [str(s) for s in p.charges]}
    if p.h is not None:
        out["h"] = [str(v) for v in p.h]
    return out
