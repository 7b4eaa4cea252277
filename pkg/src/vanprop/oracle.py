"""Entry-by-entry agreement between the Murnaghan-Nakayama tables and the generic engine.

Classes of the natural S_n / A_n actions are matched through the cycle
type of their representative; the two halves of a split A_n class are told
apart by whether they contain the canonical representative (cycles filled
with consecutive integers), which is the (+) half by convention.  Rows are
then matched as multisets of exact value vectors.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .groups.analysis import table_of
from .groups.builtins import alternating, symmetric
from .groups.perm import cycle_type
from .symchars import alt_table, canonical_representative, splits_in_alternating, sym_table


@dataclass
class Agreement:
    label: str
    classes_matched: bool
    unmatched_rows: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.classes_matched and not self.unmatched_rows


def compare_symmetric(n: int) -> Agreement:
    mn = sym_table(n)
    eng = table_of(symmetric(n))
    cols = {}
    for j, rep in enumerate(eng.classes.reps):
        cols[cycle_type(rep) or ()] = j
    classes_ok = (sorted(cols) == sorted(tuple(m) for m in mn.classes)
                  and all(eng.class_sizes[cols[tuple(m)]] == s for m, s in zip(mn.classes, mn.class_sizes)))
    if not classes_ok:
        return Agreement(f"S{n}", False)
    engine_rows = [tuple(row[cols[tuple(m)]].as_rational() for m in mn.classes) for row in eng.values]
    remaining = list(engine_rows)
    unmatched = []
    for lam, row in zip(mn.labels, mn.values):
        if tuple(row) in remaining:
            remaining.remove(tuple(row))
        else:
            unmatched.append(str(lam))
    return Agreement(f"S{n}", True, unmatched)


def alt_class_key(rep, members_contains_canonical: bool):
    mu = cycle_type(rep)
    if splits_in_alternating(mu) and len(rep) > 1:
        return (mu, 1 if members_contains_canonical else -1)
    return (mu, 0)


def compare_alternating(n: int) -> Agreement:
    mn = alt_table(n)
    G = alternating(n)
    eng = table_of(G)
    cols = {}
    for j, (rep, members) in enumerate(zip(eng.classes.reps, eng.classes.members)):
        canon = canonical_representative(cycle_type(rep))
        has_canon = G.index[canon] in set(members)
        cols[alt_class_key(rep, has_canon)] = j
    wanted = [(tuple(c.cycle_type), c.half) for c in mn.classes]
    classes_ok = (sorted(cols) == sorted(wanted)
                  and all(eng.class_sizes[cols[k]] == s for k, s in zip(wanted, mn.class_sizes)))
    if not classes_ok:
        return Agreement(f"A{n}", False)
    remaining = [[row[cols[k]] for k in wanted] for row in eng.values]
    unmatched = []
    for ch, row in zip(mn.labels, mn.values):
        exact = [v.to_cyclotomic() for v in row]
        hit = next((i for i, er in enumerate(remaining)
                    if all(a == b for a, b in zip(exact, er))), None)
        if hit is None:
            unmatched.append(ch.label())
        else:
            remaining.pop(hit)
    return Agreement(f"A{n}", True, unmatched)
