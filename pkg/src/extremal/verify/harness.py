"""Instance samplers, exhaustive/sampled sweeps, and reproducible reports.

Reports embed their full run configuration; re-running an embedded config
reproduces the result section byte-for-byte (timings live in a separate
field).  Budgets are counted in predicate evaluations, not wall time.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import combinations, product
from math import comb

from ..constructions import brace_daykin, build, frankl_family, full_star
from ..core import SetFamily, elems_of, enumerate_ksubsets
from ..core import _unit_predecessors
from ..measures import is_r_wise_t_intersecting
from ..order import kk_min_shadow
from ..shifting import ALWAYS, shift, shift_ad_extremis
from .registry import REGISTRY, Instance, StatementReport, check_statement

DEFAULT_BUDGET = 10**8
MAX_WITNESSES = 5


class BudgetError(ValueError):
    """Raised when a sweep would exceed the evaluation budget."""


def default_budget() -> int:
    return int(os.environ.get("EXTREMAL_BUDGET", DEFAULT_BUDGET))


def _rng_for(seed: int, idx: int) -> random.Random:
    mix = ((seed & 0xFFFFFFFFFFFFFFFF) * 0x9E3779B97F4A7C15 + idx * 0xBF58476D1CE4E5B9) & (
        2**64 - 1
    )
    return random.Random(mix)


def parse_param(value):
    if isinstance(value, str) and "/" in value:
        num, den = value.split("/")
        return Fraction(int(num), int(den))
    return value


def param_repr(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return value


# ---------------------------------------------------------------------------
# family generators
# ---------------------------------------------------------------------------


def _keep(rng: random.Random, masks, keep: float) -> list[int]:
    return [m for m in masks if rng.random() < keep]


def _full_shift(fams: tuple[SetFamily, ...]) -> tuple[SetFamily, ...]:
    out, _ = shift_ad_extremis(fams, ALWAYS)
    return out


def _prefix_shift(fams: tuple[SetFamily, ...], m: int) -> tuple[SetFamily, ...]:
    changed = True
    while changed:
        changed = False
        for i in range(1, m):
            for j in range(i + 1, m + 1):
                shifted = tuple(shift(f, i, j) for f in fams)
                if shifted != fams:
                    fams = shifted
                    changed = True
    return fams


def _saturate_random(fam: SetFamily, ok_add, rng: random.Random) -> SetFamily:
    members = set(fam.members)
    cands = list(enumerate_ksubsets(fam.n, fam.k))
    rng.shuffle(cands)
    changed = True
    while changed:
        changed = False
        for cand in cands:
            if cand not in members and ok_add(members, cand):
                members.add(cand)
                changed = True
    return SetFamily(fam.n, fam.k, sorted(members), _trusted=True)


def gen_family(rng: random.Random, spec: dict) -> SetFamily:
    mode = spec["mode"]
    if mode == "construction":
        return build(spec["name"], tuple(spec.get("params", ()))).single()
    n, k = spec["n"], spec["k"]
    if mode == "uniform":
        members = _keep(rng, enumerate_ksubsets(n, k), spec.get("density", 0.5))
        return SetFamily(n, k, members, _trusted=True)
    if mode == "star-perturbation":
        t = spec.get("t", 1)
        star = full_star(n, k, t)
        members = set(_keep(rng, star.members, spec.get("keep", 0.8)))
        star_set = set(star.members)
        outside = [m for m in enumerate_ksubsets(n, k) if m not in star_set]
        add_prob = spec.get("add_prob", 1.0)
        for _ in range(spec.get("adds", 0)):
            if outside and rng.random() < add_prob:
                members.add(rng.choice(outside))
        return SetFamily(n, k, sorted(members), _trusted=True)
    if mode == "shifted":
        base = gen_family(rng, {"mode": "uniform", "n": n, "k": k, "density": spec.get("density", 0.5)})
        return _full_shift((base,))[0]
    if mode == "shifted-star":
        base = gen_family(
            rng,
            {"mode": "star-perturbation", "n": n, "k": k, "t": spec.get("t", 1),
             "keep": spec.get("keep", 0.8), "adds": 0},
        )
        return _full_shift((base,))[0]
    if mode == "frankl-sub":
        fam = frankl_family(n, k, spec.get("t", 1))
        return SetFamily(n, k, _keep(rng, fam.members, spec.get("keep", 0.8)), _trusted=True)
    if mode == "bdslice-sub":
        slices = brace_daykin(n, spec["r"])
        chosen = next((s for s in slices if s.k == k), None)
        if chosen is None:
            raise ValueError(f"no Brace-Daykin slice of uniformity {k}")
        return SetFamily(n, k, _keep(rng, chosen.members, spec.get("keep", 0.9)), _trusted=True)
    if mode == "pseudo-filter":
        t = spec.get("t", 1)
        base = gen_family(rng, {"mode": "uniform", "n": n, "k": k, "density": spec.get("density", 0.5)})
        windows = [(((1 << min(2 * l + t, n)) - 1), l + t) for l in range(k - t + 1)]
        members = [
            m
            for m in base.members
            if any((m & w).bit_count() >= need for w, need in windows)
        ]
        return SetFamily(n, k, members, _trusted=True)
    if mode == "saturated-t":
        t = spec.get("t", 1)
        seed_fam = gen_family(
            rng,
            {"mode": "star-perturbation", "n": n, "k": k, "t": t,
             "keep": spec.get("keep", 0.4), "adds": 0},
        )

        def ok_add(members, cand):
            return all((cand & m).bit_count() >= t for m in members)

        return _saturate_random(seed_fam, ok_add, rng)
    if mode == "saturated-rwise":
        r = spec["r"]
        seed_fam = gen_family(
            rng, {"mode": "bdslice-sub", "n": n, "k": k, "r": r, "keep": spec.get("keep", 0.5)}
        )

        def ok_add(members, cand):
            trial = SetFamily(n, k, sorted(members | {cand}), _trusted=True)
            return is_r_wise_t_intersecting(trial, r, 1)

        return _saturate_random(seed_fam, ok_add, rng)
    raise ValueError(f"unknown family mode {mode!r}")


def _dual_members(a_fam: SetFamily, l: int, t: int) -> list[int]:
    return [
        c
        for c in enumerate_ksubsets(a_fam.n, l)
        if all((c & m).bit_count() >= t for m in a_fam.members)
    ]


def gen_pair(rng: random.Random, spec: dict) -> tuple[SetFamily, SetFamily]:
    mode = spec["mode"]
    if mode == "independent":
        return gen_family(rng, spec["a"]), gen_family(rng, spec["b"])
    if mode == "construction-pair":
        nf = build(spec["name"], tuple(spec.get("params", ())))
        if len(nf.families) != 2:
            raise ValueError(f"{spec['name']} is not a pair construction")
        return nf.families[0][1], nf.families[1][1]
    if mode == "star-pair":
        n, k, t = spec["n"], spec["k"], spec.get("t", 1)
        star = full_star(n, k, t)
        a = SetFamily(n, k, _keep(rng, star.members, spec.get("keep_a", 0.8)), _trusted=True)
        b = SetFamily(n, k, _keep(rng, star.members, spec.get("keep_b", 0.8)), _trusted=True)
        return a, b
    if mode in ("cross-dual", "cross-shifted", "cross-shifted-prefix"):
        a_fam = gen_family(rng, spec["base"])
        t = spec.get("t", 1)
        l = spec.get("l", a_fam.k)
        dual = _dual_members(a_fam, l, t)
        b_fam = SetFamily(
            a_fam.n, l, _keep(rng, dual, spec.get("density_b", 0.5)), _trusted=True
        )
        pair = (a_fam, b_fam)
        if mode == "cross-shifted":
            pair = _full_shift(pair)
        elif mode == "cross-shifted-prefix":
            pair = _prefix_shift(pair, a_fam.n - spec.get("suffix", 8))
        return pair
    if mode == "lem37":
        # cross pair with members anchored at the two top elements, initial on [n-8]
        n, k = spec["n"], spec["k"]
        low = n - 8
        anchored = []
        for top in (n - 1, n):
            bit = 1 << (top - 1)
            for rest in enumerate_ksubsets(low, k - 1):
                anchored.append(rest | bit)
        star = [m for m in enumerate_ksubsets(n, k) if m & 1]
        members = set(_keep(rng, anchored, spec.get("keep_anchor", 0.8)))
        members |= set(_keep(rng, star, spec.get("keep_star", 0.3)))
        a_fam = SetFamily(n, k, sorted(members), _trusted=True)
        dual = _dual_members(a_fam, k, 1)
        b_fam = SetFamily(n, k, _keep(rng, dual, spec.get("density_b", 0.6)), _trusted=True)
        return _prefix_shift((a_fam, b_fam), low)
    raise ValueError(f"unknown pair mode {mode!r}")


def gen_slices(rng: random.Random, spec: dict) -> tuple[SetFamily, ...]:
    if spec["mode"] != "bd-sub":
        raise ValueError(f"unknown slices mode {spec['mode']!r}")
    slices = brace_daykin(spec["n"], spec["r"])
    keep = spec.get("keep", 0.9)
    out = []
    for s in slices:
        kept = _keep(rng, s.members, keep)
        if kept:
            out.append(SetFamily(s.n, s.k, kept, _trusted=True))
    if not out:
        out = [slices[0]]
    return tuple(out)


def _draw_params(rng: random.Random, draws: dict, n: int) -> dict:
    out = {}
    for key, kind in draws.items():
        if kind == "subset":
            out[key] = [e for e in range(1, n + 1) if rng.random() < 0.5]
        elif kind == "element":
            out[key] = rng.randint(1, n)
        elif kind == "pair":
            a, b = rng.sample(range(1, n + 1), 2)
            names = key.split(",")
            if len(names) == 2:
                out[names[0]], out[names[1]] = min(a, b), max(a, b)
            else:
                out[key] = sorted((a, b))
        elif kind.startswith("disjoint-pair:"):
            other = out[kind.split(":", 1)[1]]
            pool = [e for e in range(1, n + 1) if e not in other]
            out[key] = sorted(rng.sample(pool, 2))
        elif kind.startswith("int:"):
            lo, hi = map(int, kind.split(":", 1)[1].split(","))
            out[key] = rng.randint(lo, hi)
        elif kind.startswith("leq-pair:"):
            lo, hi = map(int, kind.split(":", 1)[1].split(","))
            a, b = rng.randint(lo, hi), rng.randint(lo, hi)
            names = key.split(",")
            out[names[0]], out[names[1]] = min(a, b), max(a, b)
        else:
            raise ValueError(f"unknown draw kind {kind!r}")
    return out


class Sampler:
    """Deterministic instance stream: identical seed+spec yields identical instances."""

    def __init__(self, seed: int, inst_spec: dict):
        self.seed = seed
        self.inst_spec = inst_spec

    def instances(self, sid: str, count: int):
        for idx in range(count):
            yield make_instance(_rng_for(self.seed, idx), sid, self.inst_spec)


def make_instance(rng: random.Random, sid: str, inst_spec: dict) -> Instance:
    stmt = REGISTRY[sid]
    if stmt.kind == "family":
        fams: tuple[SetFamily, ...] = (gen_family(rng, inst_spec["family"]),)
    elif stmt.kind == "pair":
        fams = gen_pair(rng, inst_spec["pair"])
    elif stmt.kind == "slices":
        fams = gen_slices(rng, inst_spec["slices"])
    else:
        fams = ()
    params = {k: parse_param(v) for k, v in inst_spec.get("params", {}).items()}
    n = fams[0].n if fams else inst_spec.get("n", 8)
    params.update(_draw_params(rng, inst_spec.get("draw", {}), n))
    return Instance(fams, params)


# ---------------------------------------------------------------------------
# exhaustive instance spaces
# ---------------------------------------------------------------------------


def initial_families(n: int, k: int):
    """All initial families as ascending member-mask tuples (downset enumeration)."""
    masks = enumerate_ksubsets(n, k)
    index = {m: i for i, m in enumerate(masks)}
    preds = [tuple(index[p] for p in _unit_predecessors(m)) for m in masks]
    m_count = len(masks)
    out = []
    stack = [(0, 0)]
    while stack:
        i, chosen = stack.pop()
        if i == m_count:
            out.append(tuple(masks[b] for b in range(m_count) if chosen >> b & 1))
            continue
        stack.append((i + 1, chosen))
        if all(chosen >> p & 1 for p in preds[i]):
            stack.append((i + 1, chosen | (1 << i)))
    out.sort()
    return out


def _estimate_space(space: str, grid: dict, params: dict) -> int:
    """Exact (or near-exact) instance counts so refusals carry honest estimates."""
    n, k = grid["n"], grid["k"]
    m = comb(n, k)
    if space == "families":
        return 2**m
    # downset enumeration is output-sensitive, so exact counts stay cheap
    if space == "initial":
        return len(initial_families(n, k)) if m <= 70 else 2**m
    if space == "initial-pairs":
        l = grid.get("l", k)
        if max(m, comb(n, l)) > 70:
            return 2**m * 2 ** comb(n, l)
        left = len(initial_families(n, k))
        right = len(initial_families(n, l)) if l != k else left
        return left * right
    if space == "dual-pairs":
        if m > 22:
            return 4**m
        t = params.get("t", 1)
        l = grid.get("l", k)
        a_masks = enumerate_ksubsets(n, k)
        compat = []
        for bm in enumerate_ksubsets(n, l):
            row = 0
            for i, am in enumerate(a_masks):
                if (am & bm).bit_count() >= t:
                    row |= 1 << i
            compat.append(row)
        total = 0
        for abits in range(1 << m):
            total += 1 << sum(1 for row in compat if not abits & ~row)
        return total
    raise ValueError(f"unknown space {space!r}")


def _space_instances(space: str, grid: dict, params: dict):
    n, k = grid["n"], grid["k"]
    if space == "families":
        masks = enumerate_ksubsets(n, k)
        m_count = len(masks)
        for bits in range(1 << m_count):
            members = []
            bb = bits
            while bb:
                low = bb & -bb
                members.append(masks[low.bit_length() - 1])
                bb ^= low
            yield Instance((SetFamily(n, k, members, _trusted=True),), dict(params))
    elif space == "initial":
        for members in initial_families(n, k):
            yield Instance((SetFamily(n, k, members, _trusted=True),), dict(params))
    elif space == "initial-pairs":
        l = grid.get("l", k)
        left = initial_families(n, k)
        right = initial_families(n, l) if l != k else left
        for a in left:
            fa = SetFamily(n, k, a, _trusted=True)
            for b in right:
                yield Instance((fa, SetFamily(n, l, b, _trusted=True)), dict(params))
    elif space == "dual-pairs":
        t = params.get("t", 1)
        l = grid.get("l", k)
        a_masks = enumerate_ksubsets(n, k)
        b_masks = enumerate_ksubsets(n, l)
        compat = []
        for bm in b_masks:
            row = 0
            for i, am in enumerate(a_masks):
                if (am & bm).bit_count() >= t:
                    row |= 1 << i
            compat.append(row)
        m_count = len(a_masks)
        for abits in range(1 << m_count):
            a_members = []
            bb = abits
            while bb:
                low = bb & -bb
                a_members.append(a_masks[low.bit_length() - 1])
                bb ^= low
            fa = SetFamily(n, k, a_members, _trusted=True)
            # B may contain exactly the sets t-compatible with every chosen A-member
            dual = 0
            for bi in range(len(b_masks)):
                if not abits & ~compat[bi]:
                    dual |= 1 << bi
            sub = dual
            while True:
                b_members = []
                bb = sub
                while bb:
                    low = bb & -bb
                    b_members.append(b_masks[low.bit_length() - 1])
                    bb ^= low
                yield Instance((fa, SetFamily(n, l, b_members, _trusted=True)), dict(params))
                if sub == 0:
                    break
                sub = (sub - 1) & dual
    else:
        raise ValueError(f"unknown space {space!r}")


def _grid_instances(grid: dict, params: dict):
    keys = sorted(grid)
    ranges = [range(grid[key][0], grid[key][1] + 1) for key in keys]
    for combo in product(*ranges):
        p = dict(params)
        p.update(dict(zip(keys, combo)))
        yield Instance((), p)


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------


def _merge_extras(acc: dict, extras: dict) -> None:
    for key, val in extras.items():
        acc[key] = acc.get(key, 0) + val


def _finalize(sid, config, totals, witnesses, extras, budget_used, elapsed, halted):
    result = {
        "id": sid,
        "totals": totals,
        "witnesses": witnesses,
        "extras": dict(sorted(extras.items())),
        "budget_used": budget_used,
        "halted_on_fail": halted,
    }
    if "seed" in config:
        result["seed"] = config["seed"]
    if "grid" in config:
        result["grid"] = config["grid"]
    return {"config": config, "result": result, "timing": {"elapsed_s": round(elapsed, 6)}}


def _consume(sid, instances, config, budget, threads=1):
    """Run checkers over an instance stream; halt deterministically on first FAIL."""
    t0 = time.perf_counter()
    totals = {"pass": 0, "vacuous": 0, "fail": 0}
    witnesses = []
    extras: dict = {}
    budget_used = 0
    halted = False

    def handle(rep: StatementReport) -> bool:
        nonlocal halted
        _merge_extras(extras, rep.extras)
        if rep.verdict == "pass":
            totals["pass"] += 1
        elif rep.verdict == "vacuous":
            totals["vacuous"] += 1
        else:
            totals["fail"] += 1
            if len(witnesses) < MAX_WITNESSES and rep.witness:
                witnesses.append(rep.witness)
            halted = True
        return halted

    if threads > 1:
        # deterministic: instances are materialized in order, chunked, merged in order
        insts = list(instances)
        if 2 * len(insts) > budget:
            raise BudgetError(f"estimated {2 * len(insts)} evaluations exceed budget {budget}")
        chunk = max(1, len(insts) // threads + 1)
        parts = [insts[i : i + chunk] for i in range(0, len(insts), chunk)]
        pool = ThreadPoolExecutor(max_workers=threads)
        try:
            futures = [
                pool.submit(lambda p: [check_statement(sid, x) for x in p], part)
                for part in parts
            ]
            for fut in futures:
                for rep in fut.result():
                    if handle(rep):
                        break
                if halted:
                    break
        finally:
            # a FAIL cancels sibling chunks that have not started yet
            pool.shutdown(wait=True, cancel_futures=halted)
    else:
        for inst in instances:
            budget_used += 2
            if budget_used > budget:
                raise BudgetError(f"budget {budget} exhausted mid-sweep")
            if handle(check_statement(sid, inst)):
                break

    # canonical accounting: two evaluations per instance actually consumed,
    # identical across thread counts even when a FAIL halts the sweep
    budget_used = 2 * sum(totals.values())
    return _finalize(
        sid, config, totals, witnesses, extras, budget_used, time.perf_counter() - t0, halted
    )


def sample_sweep(sid, inst_spec, count, seed, threads=1, budget=None):
    """Deterministic seeded sampling sweep; identical seed gives identical result."""
    if sid not in REGISTRY:
        raise ValueError(f"unknown statement id {sid!r}")
    budget = budget if budget is not None else default_budget()
    if 2 * count > budget:
        raise BudgetError(f"{count} instances (~{2*count} evaluations) exceed budget {budget}")
    config = {
        "id": sid,
        "mode": "sample",
        "count": count,
        "seed": seed,
        "instance": inst_spec,
        "budget": budget,
    }
    instances = Sampler(seed, inst_spec).instances(sid, count)
    return _consume(sid, instances, config, budget, threads=threads)


def exhaustive_sweep(sid, grid, threads=1, budget=None):
    """Enumerate a whole instance space; any FAIL halts with a witness."""
    if sid not in REGISTRY:
        raise ValueError(f"unknown statement id {sid!r}")
    stmt = REGISTRY[sid]
    budget = budget if budget is not None else default_budget()
    grid = dict(grid)
    space = grid.pop("space", None) or (
        "grid" if stmt.kind == "numeric" else stmt.default_space
    )
    params = {k: parse_param(v) for k, v in grid.pop("params", {}).items()}
    config = {
        "id": sid,
        "mode": "exhaustive",
        "grid": {**grid, "space": space, "params": {k: param_repr(v) for k, v in params.items()}},
        "budget": budget,
    }
    if space == "grid":
        ranges = {k: v for k, v in grid.items() if isinstance(v, (list, tuple))}
        fixed = {k: v for k, v in grid.items() if not isinstance(v, (list, tuple))}
        est = 2
        for lo, hi in ranges.values():
            est *= hi - lo + 1
        if est > budget:
            raise BudgetError(f"estimated {est} evaluations exceed budget {budget}")
        params.update(fixed)
        instances = _grid_instances(ranges, params)
    else:
        if sid == "KRUSKAL_KATONA" and space == "families":
            return _kk_exhaustive(grid["n"], grid["k"], params.get("l", 1), config, budget)
        est = 2 * _estimate_space(space, grid, params)
        if est > budget:
            raise BudgetError(f"estimated {est} evaluations exceed budget {budget}")
        instances = _space_instances(space, grid, params)
    return _consume(sid, instances, config, budget, threads=threads)


def _kk_exhaustive(n, k, l, config, budget):
    """Bit-parallel sweep of all 2^C(n,k) families against the lex shadow minimum."""
    t0 = time.perf_counter()
    masks = enumerate_ksubsets(n, k)
    m_count = len(masks)
    if 2 * 2**m_count > budget:
        raise BudgetError(f"2^{m_count} families exceed budget {budget}")
    sub_index = {m: i for i, m in enumerate(enumerate_ksubsets(n, k - l))}
    shmasks = []
    for m in masks:
        sh = 0
        els = elems_of(m)
        for drop in combinations(els, l):
            d = m
            for e in drop:
                d ^= 1 << (e - 1)
            sh |= 1 << sub_index[d]
        shmasks.append(sh)
    kkmin = [kk_min_shadow(n, k, size, l) for size in range(m_count + 1)]
    table = [0] * (1 << m_count)
    totals = {"pass": 1, "vacuous": 0, "fail": 0}  # the empty family passes
    witnesses = []
    halted = False
    for bits in range(1, 1 << m_count):
        low = bits & -bits
        sh = table[bits ^ low] | shmasks[low.bit_length() - 1]
        table[bits] = sh
        if sh.bit_count() >= kkmin[bits.bit_count()]:
            totals["pass"] += 1
        else:
            totals["fail"] += 1
            members = [masks[i] for i in range(m_count) if bits >> i & 1]
            inst = Instance((SetFamily(n, k, members, _trusted=True),), {"l": l})
            witnesses.append(inst.to_witness("KRUSKAL_KATONA"))
            halted = True
            break
    return _finalize(
        "KRUSKAL_KATONA",
        config,
        totals,
        witnesses,
        {},
        2 * sum(totals.values()),
        time.perf_counter() - t0,
        halted,
    )


# ---------------------------------------------------------------------------
# suite driver and reproducibility
# ---------------------------------------------------------------------------


def run_recipe(recipe: dict, threads: int = 1, budget: int | None = None) -> dict:
    sid = recipe["id"]
    if recipe["mode"] == "sample":
        return sample_sweep(
            sid,
            recipe["instance"],
            recipe["count"],
            recipe["seed"],
            threads=threads,
            budget=budget if budget is not None else recipe.get("budget"),
        )
    if recipe["mode"] == "exhaustive":
        grid = dict(recipe["grid"])
        if "params" in recipe:
            grid["params"] = recipe["params"]
        return exhaustive_sweep(
            sid,
            grid,
            threads=threads,
            budget=budget if budget is not None else recipe.get("budget"),
        )
    raise ValueError(f"unknown sweep mode {recipe['mode']!r}")


def rerun_report(report: dict, threads: int = 1) -> dict:
    """Re-run a report's embedded config; the result section must reproduce exactly."""
    cfg = report["config"]
    if cfg["mode"] == "sample":
        return sample_sweep(
            cfg["id"], cfg["instance"], cfg["count"], cfg["seed"],
            threads=threads, budget=cfg.get("budget"),
        )
    grid = dict(cfg["grid"])
    return exhaustive_sweep(cfg["id"], grid, threads=threads, budget=cfg.get("budget"))


def load_suite(path) -> dict:
    with open(path, "r", encoding="utf-8") as fp:
        return json.load(fp)


def run_suite(config: dict, threads: int = 1, only: set | None = None) -> list[dict]:
    reports = []
    for recipe in config["entries"]:
        if only and recipe["id"] not in only:
            continue
        reports.append(run_recipe(recipe, threads=threads, budget=config.get("budget")))
    return reports
