"""Verification suites over an :class:`~hopfcyc.zoo.Example`, emitting JSON-ready dicts.

Every suite result has ``ok`` plus per-object entries; construction errors are
caught and reported with their witness instead of aborting the run.
"""

from __future__ import annotations

import time

from .bialgebroid import (check_left_bialgebroid, check_right_bialgebroid, check_translation_left,
                          check_translation_right)
from .complexes import (build_cocyclic_module_algebra, build_cyclic_module_algebra,
                        build_cyclic_module_coring, phi_identification)
from .cyclic import cyclic_dual, cyclic_homology, same_operators, verify_cocyclic, verify_cyclic
from .galois import build_galois, omega, transfer_sayd
from .report import Report
from .sayd import check_ayd_left_right, check_ayd_right_left, check_stability
from .zoo import Example

SUITES = ("bialgebroid", "sayd", "complexes", "galois")


def _error(exc: Exception) -> dict:
    w = getattr(exc, "witness", None)
    return {"ok": False, "error": type(exc).__name__, "message": str(exc),
            "witness": list(w) if isinstance(w, tuple) else w}


def _rep(rep: Report) -> dict:
    d = rep.to_json()
    d["checks"] = sorted(d["checks"])
    return d


def run_bialgebroid(ex: Example, N: int) -> dict:
    out = []
    for h in ex.lefts:
        out.append({"name": h.name, "side": "left",
                    "axioms": _rep(check_left_bialgebroid(h.bialgebroid)),
                    "translation": _rep(check_translation_left(h))})
    for h in ex.rights:
        out.append({"name": h.name, "side": "right",
                    "axioms": _rep(check_right_bialgebroid(h.bialgebroid)),
                    "translation": _rep(check_translation_right(h))})
    for d in out:
        d["ok"] = d["axioms"]["ok"] and d["translation"]["ok"]
    return {"ok": all(d["ok"] for d in out), "objects": out}


def run_sayd(ex: Example, N: int) -> dict:
    out = []
    for s in ex.sayds:
        check = check_ayd_right_left if s.chirality == "RL" else check_ayd_left_right
        rep = check(s.hopf, s.module, s.comodule)
        stable = check_stability(s)
        out.append({"name": s.name, "chirality": s.chirality, "dim": s.dim, "ayd": _rep(rep),
                    "stable": stable, "ok": rep.ok and stable})
    return {"ok": all(d["ok"] for d in out), "objects": out}


def run_complexes(ex: Example, N: int) -> dict:
    out = []
    for T, M in ex.algebra_data:
        d: dict = {"kind": "module algebra", "algebra": T.name, "coefficients": M.name}
        try:
            cc = build_cocyclic_module_algebra(T, M, N)
            cy = build_cyclic_module_algebra(T, M, N)
            r1, r2 = verify_cocyclic(cc), verify_cyclic(cy)
            d.update(dims=list(cy.dims), cocyclic=_rep(r1), cyclic=_rep(r2),
                     duality=same_operators(cyclic_dual(cc, verify=False), cy))
            d["homology"] = cyclic_homology(cy, verify=False).to_json() if N >= 1 else None
            d["ok"] = r1.ok and r2.ok and d["duality"]
        except ValueError as exc:
            d.update(_error(exc))
        out.append(d)
    for C, M in ex.coring_data:
        d = {"kind": "module coring", "hopf": C.hopf.name, "coefficients": M.name}
        try:
            cy = build_cyclic_module_coring(C, M, N)
            rep = verify_cyclic(cy)
            phis, invs, transported, displayed = phi_identification(C.hopf, M, N)
            inv_ok = all((p @ q).is_identity() and (q @ p).is_identity() for p, q in zip(phis, invs))
            d.update(dims=list(cy.dims), cyclic=_rep(rep), phi_inverse=inv_ok,
                     phi_transport=same_operators(transported, displayed))
            d["homology"] = cyclic_homology(cy, verify=False).to_json() if N >= 1 else None
            d["ok"] = rep.ok and inv_ok and d["phi_transport"]
        except ValueError as exc:
            d.update(_error(exc))
        out.append(d)
    return {"ok": all(d["ok"] for d in out), "objects": out}


def run_galois(ex: Example, N: int) -> dict:
    out = []
    for ca, K, T, Ms in ex.galois_data:
        d: dict = {"comodule_algebra": ca.name, "K": K.name}
        try:
            ext = build_galois(ca, K, T, strict=False)
        except ValueError as exc:
            d.update(_error(exc), galois=False)
            out.append(d)
            continue
        d.update(galois=True, equivariant=ext.report.checks.get("equivariant", False),
                 lemma_inverse=ext.lemma_flags(), coefficients=[])
        ok = d["equivariant"] and all(d["lemma_inverse"])
        for M in Ms:
            c: dict = {"name": M.name}
            try:
                tr = transfer_sayd(ext, M)
                c["transfer"] = {"ayd": tr.ayd, "stable": tr.stable, "dim": tr.sayd.dim}
                if tr.ayd and tr.stable:
                    om = omega(ext, M, N, tr, strict=False)
                    c["omega"] = {"iso": om.iso, "chain_map": om.chain_map, "up_to": N}
                    c["ok"] = om.iso and om.chain_map
                else:
                    c["ok"] = False
            except ValueError as exc:
                c.update(_error(exc))
            ok = ok and c["ok"]
            d["coefficients"].append(c)
        d["ok"] = ok
        out.append(d)
    return {"ok": all(d["ok"] for d in out), "objects": out}


RUNNERS = {"bialgebroid": run_bialgebroid, "sayd": run_sayd, "complexes": run_complexes,
           "galois": run_galois}


def run_example(ex: Example, suites, N: int) -> tuple[dict, dict]:
    """(result, wall times per suite in seconds)."""
    res: dict = {"name": ex.name, "suites": {}}
    times = {}
    for s in suites:
        t0 = time.perf_counter()
        res["suites"][s] = RUNNERS[s](ex, N)
        times[s] = round(time.perf_counter() - t0, 4)
    res["ok"] = all(v["ok"] for v in res["suites"].values())
    return res, times
