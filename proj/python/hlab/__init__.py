"""Python front end for the hlab verification lab.

Graphs may be given as graph6 text, builtin names ("K3", "C4", ...), JSON
text, or dicts {"n", "r", "edges"}. Exact rationals come back as "num/den"
strings; use :func:`fraction` to turn them into ``fractions.Fraction``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, Sequence

from . import _core
from ._core import (  # noqa: F401
    ConstructionError,
    DegenerateSubsetError,
    Error,
    FeasibilityError,
    JsonError,
    MalformedSubsetError,
    OverflowError,
    ParameterError,
    ParseError,
    SizeLimitError,
    rank_subset,
    unrank_subset,
)

__all__ = [
    "Error", "fraction", "graph", "graph6", "count_induced", "contains_induced",
    "forb", "contains", "min_edges", "max_edges", "exact_measure", "mc_measure",
    "cn_sequence", "greedy_system", "nibble_system", "best_greedy", "verify_system",
    "check_maximal", "lemma_report", "partition_table", "tail_mass", "x_set",
    "counting_floor", "tau", "predicted_c_half", "exstar", "witness_check", "cli",
    "rank_subset", "unrank_subset",
]


def fraction(text: str) -> Fraction:
    return Fraction(text)


def _q(p: Any) -> str:
    q = Fraction(p)
    return f"{q.numerator}/{q.denominator}"


def _graph_text(g: Any) -> str:
    return json.dumps(g) if isinstance(g, dict) else str(g)


def graph(g: Any) -> dict:
    """Normalised {"n", "r", "edges"} form of any accepted graph spelling."""
    return json.loads(_core.parse_graph(_graph_text(g)))


def graph6(g: Any) -> str:
    return _core.to_graph6(_graph_text(g))


def _family_text(fam: Any) -> str:
    if isinstance(fam, (str, dict)):
        fam = [fam]
    return json.dumps([graph(g) for g in fam])


def forb(*graphs: Any) -> dict:
    return {"kind": "forb", "family": json.loads(_family_text(list(graphs)))}


def contains(*graphs: Any) -> dict:
    return {"kind": "contains", "family": json.loads(_family_text(list(graphs)))}


def min_edges(k: int) -> dict:
    return {"kind": "min_edges", "k": k}


def max_edges(k: int) -> dict:
    return {"kind": "max_edges", "k": k}


def count_induced(g: Any, family: Any) -> int:
    return _core.count_induced(_graph_text(g), _family_text(family))


def contains_induced(g: Any, family: Any) -> bool:
    return _core.contains_induced(_graph_text(g), _family_text(family))


def exact_measure(n: int, r: int, p: Any, predicate: dict, workers: int = 1, exact_cap: int = 0) -> dict:
    return json.loads(_core.exact_measure(n, r, _q(p), json.dumps(predicate), workers, exact_cap))


def mc_measure(n: int, r: int, p: Any, predicate: dict, samples: int, seed: int,
               ci: float = 0.95, workers: int = 1) -> dict:
    return json.loads(_core.mc_measure(n, r, _q(p), json.dumps(predicate), samples, seed, ci, workers))


def cn_sequence(family: Any, p: Any, ns: Iterable[int], workers: int = 1, exact_cap: int = 0) -> list:
    return json.loads(_core.cn_sequence(_family_text(family), _q(p), list(ns), workers, exact_cap))


def greedy_system(r: int, m: int, n: int, seed: int) -> dict:
    return json.loads(_core.greedy_system(r, m, n, seed))


def nibble_system(r: int, m: int, n: int, seed: int, bite: float = 0.1, rounds: int = 10) -> dict:
    return json.loads(_core.nibble_system(r, m, n, seed, bite, rounds))


def best_greedy(r: int, m: int, n: int, restarts: int, seed: int, workers: int = 1) -> dict:
    return json.loads(_core.best_greedy(r, m, n, restarts, seed, workers))


def verify_system(system: dict) -> dict:
    return json.loads(_core.verify_system(json.dumps(system)))


def check_maximal(system: dict) -> dict:
    return json.loads(_core.check_maximal(json.dumps(system)))


def lemma_report(predicate: dict, system: dict, family: Any, p: Any, nu: Any,
                 gamma: Any = None, lambda_: Any = None, workers: int = 1) -> dict:
    return json.loads(_core.lemma_report(
        json.dumps(predicate), json.dumps(system), _family_text(family), _q(p), _q(nu),
        None if gamma is None else _q(gamma), None if lambda_ is None else _q(lambda_), workers))


def partition_table(predicate: dict, system: dict, family: Any, p: Any, workers: int = 1) -> dict:
    return json.loads(_core.partition_table(
        json.dumps(predicate), json.dumps(system), _family_text(family), _q(p), workers))


def tail_mass(nu: Any, d: int, mu: Any) -> Fraction:
    return Fraction(_core.tail_mass(_q(nu), d, _q(mu)))


def x_set(predicate: dict, family: Any, m: int, gamma: Any, n: int, p: Any, workers: int = 1) -> dict:
    return json.loads(_core.x_set(json.dumps(predicate), _family_text(family), m, _q(gamma), n, _q(p), workers))


def counting_floor(n: int, m: int, t: int, gamma: Any, eta: Any) -> dict:
    return json.loads(_core.counting_floor(n, m, t, _q(gamma), _q(eta)))


def tau(g: Any) -> dict:
    return json.loads(_core.tau(_graph_text(g)))


def predicted_c_half(g: Any) -> Fraction:
    return Fraction(_core.predicted_c_half(_graph_text(g)))


def exstar(n: int, g: Any, workers: int = 1) -> dict:
    return json.loads(_core.exstar(n, _graph_text(g), workers))


def witness_check(n: int, g: Any, e: Sequence[Sequence[int]], e0: Sequence[Sequence[int]]) -> dict:
    return json.loads(_core.witness_check(n, _graph_text(g), json.dumps([list(x) for x in e]),
                                          json.dumps([list(x) for x in e0])))


def cli(*args: str) -> tuple[int, str, str]:
    """Runs one hlab command line; returns (exit code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
