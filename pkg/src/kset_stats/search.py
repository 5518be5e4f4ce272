"""Exact search for b, B, H and I of S_n / A_n on k-sets.

The stabilizer of a family depends only on its induced partition, so the
engine works on canonical block tuples (bitmasks, ordered by least point).

Symmetry (``fix_first=True``): relabelling points by any permutation maps
k-sets to k-sets and preserves every stabilizer relation, for A_n as well
since S_n normalizes A_n.  Two consequences are used:

* for ``I`` and ``b`` the remaining problem from a partition depends only
  on its type, so those are memoized on the type;
* for ``H`` and ``B`` the next member only matters up to its orbit under the
  Young subgroup of the current partition, and that orbit is determined by
  how many points it takes from each block.  The first member therefore
  is always ``{1..k}``.

With ``fix_first=False`` all of this is off: memo keys are the canonical
partitions themselves and candidate members are all k-sets.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .core import (
    GroundParams,
    GroupKind,
    KSetError,
    SetFamily,
    SetSequence,
    Subset,
    block_type,
    elements_of,
    full_mask,
    is_base,
    is_independent,
    is_irredundant,
    is_minimal_base,
    mask_of,
    order_of_type,
    refine_masks,
)

STATS = ("b", "B", "H", "I")
DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class SearchConfig:
    params: GroundParams
    kind: GroupKind
    stat: str
    node_budget: int = DEFAULT_BUDGET
    fix_first: bool = True
    deterministic: bool = True
    threads: int = 1

    def __post_init__(self):
        object.__setattr__(self, "kind", GroupKind.parse(self.kind))
        if self.stat not in STATS:
            raise KSetError(f"unknown statistic {self.stat!r}; expected one of {STATS}")
        if self.node_budget <= 0:
            raise KSetError("node_budget must be positive")
        if self.threads < 1:
            raise KSetError("threads must be >= 1")
        self.params.require_uniform()

    @classmethod
    def make(cls, n: int, k: int, kind, stat: str, **kw) -> "SearchConfig":
        return cls(GroundParams(n, k), GroupKind.parse(kind), stat, **kw)


@dataclass
class StatReport:
    """Outcome of one search.

    ``exhausted`` is True when the search finished and ``value`` is exact.
    Otherwise ``bound`` says which side ``value`` is on: a budget-limited
    maximisation gives a lower bound, the minimum base search an upper one.
    """

    config: SearchConfig
    value: int
    witness: SetFamily | SetSequence
    nodes_explored: int
    elapsed: float
    exhausted: bool
    bound: str = "exact"

    def to_dict(self, timing: bool = False) -> dict:
        c = self.config
        d = {
            "n": c.params.n,
            "k": c.params.k,
            "group": c.kind.value,
            "stat": c.stat,
            "value": self.value,
            "exhausted": self.exhausted,
            "bound": self.bound,
            "nodes_explored": self.nodes_explored,
            "fix_first": c.fix_first,
            "ordered": isinstance(self.witness, SetSequence),
            "witness": self.witness.as_lists(),
        }
        if timing:
            d["elapsed"] = self.elapsed
        return d


class BudgetExceeded(Exception):
    pass


def _lowest_bits(b: int, a: int) -> int:
    m = 0
    for _ in range(a):
        low = b & -b
        m |= low
        b ^= low
    return m


class _Engine:
    def __init__(self, n: int, k: int, kind: GroupKind, symmetric: bool, budget: int):
        self.n, self.k, self.kind = n, k, kind
        self.symmetric = symmetric
        self.budget = budget
        self.nodes = 0
        self.root = (full_mask(n),)
        self.all_ksets = [mask_of(c) for c in combinations(range(1, n + 1), k)]
        self._orders: dict[tuple, int] = {}
        self._reps: dict[tuple, list[int]] = {}

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded

    def order(self, blocks) -> int:
        t = block_type(blocks)
        o = self._orders.get(t)
        if o is None:
            o = self._orders[t] = order_of_type(t, self.kind)
        return o

    def key(self, blocks):
        return block_type(blocks) if self.symmetric else blocks

    def candidates(self, blocks) -> list[int]:
        """One k-set per Young-subgroup orbit, or every k-set."""
        if not self.symmetric:
            return self.all_ksets
        reps = self._reps.get(blocks)
        if reps is not None:
            return reps
        sizes = [b.bit_count() for b in blocks]
        tail = [0] * (len(sizes) + 1)
        for i in range(len(sizes) - 1, -1, -1):
            tail[i] = tail[i + 1] + sizes[i]
        out = []

        def rec(i, left, acc):
            if left == 0:
                out.append(acc)
                return
            if i == len(blocks) or tail[i] < left:
                return
            for a in range(min(sizes[i], left), -1, -1):
                rec(i + 1, left - a, acc | _lowest_bits(blocks[i], a))

        rec(0, self.k, 0)
        out.sort(key=elements_of)
        self._reps[blocks] = out
        return out

    def chain_bound(self, blocks) -> int:
        """Most further strict steps possible from a non-trivial stabilizer.

        Each step adds a part; for A_n the last non-trivial state has at most
        n - 2 parts.  If ``g = gcd(k, part sizes) > 1`` then steps that add
        exactly one part keep every part divisible by ``g``, so an all
        one-part run can never reach the end and one step is lost.
        """
        n, r = self.n, len(blocks)
        g = self.k
        for b in blocks:
            g = gcd(g, b.bit_count())
        if self.kind is GroupKind.SYM:
            return n - r - (1 if g > 1 else 0)
        return n - 1 - r - (1 if g > 1 and n >= 5 else 0)

    # -- I ----------------------------------------------------------------

    def longest(self, blocks, memo) -> int:
        key = self.key(blocks)
        v = memo.get(key)
        if v is not None:
            return v
        cur = self.order(blocks)
        if cur == 1:
            memo[key] = 0
            return 0
        ub = self.chain_bound(blocks)
        best = -1
        for w in self.candidates(blocks):
            self.tick()
            child = refine_masks(blocks, w)
            if self.order(child) >= cur:
                continue
            v = 1 + self.longest(child, memo)
            if v > best:
                best = v
                if best >= ub:
                    break
        memo[key] = best
        return best

    def longest_chain(self, blocks, memo) -> list[int]:
        out = []
        v = self.longest(blocks, memo)
        while v > 0:
            cur = self.order(blocks)
            for w in self.candidates(blocks):
                child = refine_masks(blocks, w)
                if self.order(child) < cur and self.longest(child, memo) == v - 1:
                    out.append(w)
                    blocks, v = child, v - 1
                    break
            else:  # pragma: no cover - memo is consistent by construction
                raise AssertionError("chain reconstruction lost its way")
        return out

    def greedy_chain(self) -> list[int]:
        blocks, out = self.root, []
        while self.order(blocks) > 1:
            cur = self.order(blocks)
            for w in self.all_ksets:
                child = refine_masks(blocks, w)
                if self.order(child) < cur:
                    out.append(w)
                    blocks = child
                    break
        return out

    # -- b ----------------------------------------------------------------

    def _reachable(self, r: int, depth: int) -> bool:
        # one k-set splits at most min(parts, k, n - k) parts
        target = self.n if self.kind is GroupKind.SYM else self.n - 1
        for _ in range(depth):
            if r >= target:
                return True
            r = min(self.n, r + min(r, self.k, self.n - self.k))
        return r >= target

    def base_within(self, blocks, depth, failed) -> list[int] | None:
        cur = self.order(blocks)
        if cur == 1:
            return []
        if depth == 0:
            return None
        key = self.key(blocks)
        if failed.get(key, -1) >= depth:
            return None
        if not self._reachable(len(blocks), depth):
            failed[key] = depth
            return None
        for w in self.candidates(blocks):
            self.tick()
            child = refine_masks(blocks, w)
            if self.order(child) >= cur:
                continue
            rest = self.base_within(child, depth - 1, failed)
            if rest is not None:
                return [w] + rest
        failed[key] = depth
        return None

    def greedy_minimal_base(self) -> list[int]:
        masks = list(self.all_ksets)
        for w in list(reversed(masks)):
            trial = [m for m in masks if m != w]
            if self.order(_blocks_of(self.n, trial)) == 1:
                masks = trial
        return masks

    # -- H / B ------------------------------------------------------------

    def independent_search(self, need_base: bool, start=None, best=-1):
        """Largest independent family (a base too if ``need_base``).

        ``removals[i]`` is the partition of the family without member ``i``;
        a new member keeps the family independent iff it still leaves every
        removal partition with a strictly larger stabilizer.  Independence is
        inherited by subfamilies, so a failing candidate is cut with its
        whole subtree.
        """
        found = [best, None]

        def grow(members, blocks, removals, last):
            d = len(members)
            cur = self.order(blocks)
            if d > found[0] and (cur == 1 or not need_base):
                found[0], found[1] = d, list(members)
            if cur == 1 or d + self.chain_bound(blocks) <= found[0]:
                return
            cands = self.candidates(blocks)
            for idx in range(0 if self.symmetric else last + 1, len(cands)):
                w = cands[idx]
                self.tick()
                child = refine_masks(blocks, w)
                co = self.order(child)
                if co >= cur:
                    continue
                if co > 1 and d + 1 + self.chain_bound(child) <= found[0]:
                    continue
                new_removals = []
                for rem in removals:
                    r2 = refine_masks(rem, w)
                    # r2 is coarser than child, so equal order = equal stabilizer
                    if self.order(r2) == co:
                        break
                    new_removals.append(r2)
                else:
                    new_removals.append(blocks)
                    members.append(w)
                    grow(members, child, new_removals, idx)
                    members.pop()

        if start is None:
            grow([], self.root, [], -1)
        else:
            members, blocks, removals, last = start
            grow(list(members), blocks, list(removals), last)
        return found[0], found[1]

    def frontier(self, need_base: bool, depth: int = 2):
        """Independent prefixes of length ``depth``, plus the best family above them."""
        tasks = []
        shallow = [-1, None]

        def walk(members, blocks, removals, last):
            d = len(members)
            cur = self.order(blocks)
            if d > shallow[0] and (cur == 1 or not need_base):
                shallow[:] = [d, list(members)]
            if cur == 1:
                return
            if d == depth:
                tasks.append((tuple(members), blocks, tuple(removals), last))
                return
            cands = self.candidates(blocks)
            for idx in range(0 if self.symmetric else last + 1, len(cands)):
                w = cands[idx]
                child = refine_masks(blocks, w)
                co = self.order(child)
                if co >= cur:
                    continue
                new_removals = [refine_masks(rem, w) for rem in removals]
                if all(self.order(r2) != co for r2 in new_removals):
                    walk(members + [w], child, new_removals + [blocks], idx)

        walk([], self.root, [], -1)
        return tasks, tuple(shallow)


def _blocks_of(n: int, masks) -> tuple[int, ...]:
    blocks = (full_mask(n),)
    for w in masks:
        blocks = refine_masks(blocks, w)
    return blocks


def _subsets(n, masks):
    return tuple(Subset.from_mask(n, m) for m in masks)


def _run_task(args):
    n, k, kind_value, symmetric, budget, need_base, task, best = args
    eng = _Engine(n, k, GroupKind(kind_value), symmetric, budget)
    try:
        value, members = eng.independent_search(need_base, start=task, best=best)
        return value, members, eng.nodes, True
    except BudgetExceeded:
        return -1, None, eng.nodes, False


def _independent(config: SearchConfig, need_base: bool):
    n, k = config.params.n, config.params.k
    eng = _Engine(n, k, config.kind, config.fix_first, config.node_budget)
    if config.threads > 1 and not config.deterministic:
        tasks, (best, members) = eng.frontier(need_base)
        args = [
            (n, k, config.kind.value, config.fix_first, config.node_budget, need_base, t, best)
            for t in tasks
        ]
        with ProcessPoolExecutor(max_workers=config.threads) as pool:
            results = list(pool.map(_run_task, args))
        done = all(r[3] for r in results)
        for value, found, _, _ in results:
            if found is not None and value > best:
                best, members = value, found
        return best, members, sum(r[2] for r in results), done
    try:
        best, members = eng.independent_search(need_base)
        return best, members, eng.nodes, True
    except BudgetExceeded:
        return -1, None, eng.nodes, False


# -- public entry points --------------------------------------------------

def _check_stat(config: SearchConfig, stat: str):
    if config.stat != stat:
        raise KSetError(f"config is for {config.stat!r}, not {stat!r}")


def compute_I(config: SearchConfig) -> StatReport:
    """Longest irredundant base."""
    _check_stat(config, "I")
    t0 = time.perf_counter()
    n, k = config.params.n, config.params.k
    eng = _Engine(n, k, config.kind, config.fix_first, config.node_budget)
    memo: dict = {}
    try:
        eng.longest(eng.root, memo)
        chain = eng.longest_chain(eng.root, memo)
        exhausted = True
    except BudgetExceeded:
        chain = eng.greedy_chain()
        exhausted = False
    seq = SetSequence(n, _subsets(n, chain))
    if not is_irredundant(seq, config.kind, require_base=True):
        raise AssertionError(f"witness {seq!r} is not an irredundant base")
    return StatReport(config, len(chain), seq, eng.nodes, time.perf_counter() - t0,
                      exhausted, "exact" if exhausted else "lower")


def _independent_report(config: SearchConfig, need_base: bool) -> StatReport:
    t0 = time.perf_counter()
    n = config.params.n
    value, members, nodes, exhausted = _independent(config, need_base)
    if members is None:
        # only reachable when the budget ran out before anything was recorded
        members = _Engine(n, config.params.k, config.kind, False, 1).greedy_minimal_base()
        value = len(members)
    fam = SetFamily(n, _subsets(n, members))
    ok = is_minimal_base(fam, config.kind) if need_base else is_independent(fam, config.kind)
    if not ok or len(fam) != value:
        raise AssertionError(f"witness {fam!r} fails re-verification")
    return StatReport(config, value, fam, nodes, time.perf_counter() - t0,
                      exhausted, "exact" if exhausted else "lower")


def compute_H(config: SearchConfig) -> StatReport:
    """Largest independent family (the height)."""
    _check_stat(config, "H")
    return _independent_report(config, need_base=False)


def compute_B(config: SearchConfig) -> StatReport:
    """Largest minimal base."""
    _check_stat(config, "B")
    return _independent_report(config, need_base=True)


def compute_b(config: SearchConfig) -> StatReport:
    """Smallest base, by iterative deepening on the family size."""
    _check_stat(config, "b")
    t0 = time.perf_counter()
    n, k = config.params.n, config.params.k
    eng = _Engine(n, k, config.kind, config.fix_first, config.node_budget)
    failed: dict = {}
    found = None
    try:
        for depth in range(0, len(eng.all_ksets) + 1):
            found = eng.base_within(eng.root, depth, failed)
            if found is not None:
                break
        exhausted = True
    except BudgetExceeded:
        found = eng.greedy_minimal_base()
        exhausted = False
    fam = SetFamily(n, _subsets(n, found))
    if not is_base(fam, config.kind) or not is_independent(fam, config.kind):
        raise AssertionError(f"witness {fam!r} is not a minimal base")
    return StatReport(config, len(fam), fam, eng.nodes, time.perf_counter() - t0,
                      exhausted, "exact" if exhausted else "upper")


_DISPATCH = {"I": compute_I, "H": compute_H, "B": compute_B, "b": compute_b}


def compute(config: SearchConfig) -> StatReport:
    return _DISPATCH[config.stat](config)


def compute_stat(n: int, k: int, kind, stat: str, **kw) -> StatReport:
    return compute(SearchConfig.make(n, k, kind, stat, **kw))
