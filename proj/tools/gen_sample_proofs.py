#!/usr/bin/env python3
"""Writes binary resolution refutations of small clause sets to samples/proofs.

Each problem is saturated with given-clause binary resolution; the refutation
is printed in the import format (`id input clause.`, `id resolve(a, b, A) clause.`).
"""

import argparse
import itertools
import random
from pathlib import Path

# A term is a variable (str, upper case first) or (functor, args).
# A literal is (positive, predicate, args).


def is_var(t):
    return isinstance(t, str)


def parse_term(text, pos=0):
    start = pos
    while pos < len(text) and (text[pos].isalnum() or text[pos] == "_"):
        pos += 1
    name = text[start:pos]
    if pos < len(text) and text[pos] == "(":
        args, pos = parse_args(text, pos)
        return (name, args), pos
    if name[0].isupper():
        return name, pos
    return (name, ()), pos


def parse_args(text, pos):
    args = []
    pos += 1
    while True:
        t, pos = parse_term(text, pos)
        args.append(t)
        if text[pos] == ")":
            return tuple(args), pos + 1
        pos += 1


def parse_literal(text):
    text = text.replace(" ", "")
    positive = not text.startswith("~")
    if not positive:
        text = text[1:]
    (name, args), _ = parse_term(text)
    return (positive, name, args)


def parse_clause(text):
    return tuple(parse_literal(part) for part in text.split("|"))


def show_term(t):
    if is_var(t):
        return t
    name, args = t
    return name + ("(" + ",".join(show_term(a) for a in args) + ")" if args else "")


def show_atom(lit):
    _, name, args = lit
    return name + ("(" + ",".join(show_term(a) for a in args) + ")" if args else "")


def show_literal(lit):
    return ("" if lit[0] else "~") + show_atom(lit)


def show_clause(clause):
    return " | ".join(show_literal(l) for l in clause) if clause else "$false"


def walk(t, s):
    while is_var(t) and t in s:
        t = s[t]
    return t


def occurs(v, t, s):
    t = walk(t, s)
    if is_var(t):
        return t == v
    return any(occurs(v, a, s) for a in t[1])


def unify(a, b, s):
    a, b = walk(a, s), walk(b, s)
    if a == b:
        return s
    if is_var(a):
        return None if occurs(a, b, s) else {**s, a: b}
    if is_var(b):
        return unify(b, a, s)
    if a[0] != b[0] or len(a[1]) != len(b[1]):
        return None
    for x, y in zip(a[1], b[1]):
        s = unify(x, y, s)
        if s is None:
            return None
    return s


def subst(t, s):
    t = walk(t, s)
    if is_var(t):
        return t
    return (t[0], tuple(subst(a, s) for a in t[1]))


def subst_lit(lit, s):
    return (lit[0], lit[1], tuple(subst(a, s) for a in lit[2]))


def rename(t, names):
    if is_var(t):
        return names.get(t, t)
    return (t[0], tuple(rename(a, names) for a in t[1]))


def rename_lit(lit, names):
    return (lit[0], lit[1], tuple(rename(a, names) for a in lit[2]))


def term_vars(t, out):
    if is_var(t):
        out.append(t)
    else:
        for a in t[1]:
            term_vars(a, out)


def clause_vars(clause):
    out = []
    for lit in clause:
        for a in lit[2]:
            term_vars(a, out)
    return list(dict.fromkeys(out))


def normalize(clause):
    """Deduplicates literals and renames variables to X1, X2, ... in order."""
    lits = list(dict.fromkeys(clause))
    names = {v: f"X{i + 1}" for i, v in enumerate(clause_vars(lits))}
    return tuple(rename_lit(l, names) for l in lits)


def rename_apart(clause, suffix):
    return tuple(rename_lit(l, {v: v + suffix for v in clause_vars(clause)}) for l in clause)


def depth(t):
    return 0 if is_var(t) else 1 + max((depth(a) for a in t[1]), default=0)


def weight(clause):
    return sum(1 + sum(depth(a) for a in l[2]) for l in clause)


def tautology(clause):
    return any(l[0] and (False, l[1], l[2]) in clause for l in clause)


def match_term(p, t, s):
    if is_var(p):
        if p in s:
            return s if s[p] == t else None
        return {**s, p: t}
    if is_var(t) or p[0] != t[0] or len(p[1]) != len(t[1]):
        return None
    for x, y in zip(p[1], t[1]):
        s = match_term(x, y, s)
        if s is None:
            return None
    return s


def subsumes(c, d, s=None, i=0):
    s = {} if s is None else s
    if i == len(c):
        return True
    for lit in d:
        if lit[0] != c[i][0] or lit[1] != c[i][1] or len(lit[2]) != len(c[i][2]):
            continue
        t = s
        for x, y in zip(c[i][2], lit[2]):
            t = match_term(x, y, t)
            if t is None:
                break
        if t is not None and subsumes(c, d, t, i + 1):
            return True
    return False


def resolvents(a, b):
    """Binary resolvents with a positive literal of a and a negative one of b."""
    b = rename_apart(b, "_r")
    for l in a:
        if not l[0]:
            continue
        for m in b:
            if m[0] or m[1] != l[1] or len(m[2]) != len(l[2]):
                continue
            s = {}
            for x, y in zip(l[2], m[2]):
                s = unify(x, y, s)
                if s is None:
                    break
            if s is None:
                continue
            resolved = subst_lit(l, s)
            comp = (False, resolved[1], resolved[2])
            rest = [subst_lit(x, s) for x in a]
            rest = [x for x in rest if x != resolved]
            rest += [x for x in (subst_lit(y, s) for y in b) if x != comp]
            yield resolved, normalize(rest)


def refute(inputs, max_clauses=4000, max_weight=24):
    """Given-clause saturation. Returns the list of derivation records or None."""
    records = []  # (clause, rule, left, right, atom)
    for c in inputs:
        records.append((normalize(c), "input", None, None, None))
    unprocessed = list(range(len(records)))
    processed = []
    while unprocessed and len(records) < max_clauses:
        unprocessed.sort(key=lambda i: (weight(records[i][0]), i))
        given = unprocessed.pop(0)
        gc = records[given][0]
        if any(subsumes(records[p][0], gc) for p in processed):
            continue
        processed.append(given)
        for other in list(processed):
            oc = records[other][0]
            for left, right, lc, rc in ((given, other, gc, oc), (other, given, oc, gc)):
                for atom, r in resolvents(lc, rc):
                    if tautology(r) or weight(r) > max_weight:
                        continue
                    if any(subsumes(records[p][0], r) for p in processed):
                        continue
                    records.append((r, "resolve", left, right, atom))
                    if not r:
                        return records
                    unprocessed.append(len(records) - 1)
    return None


def proof_text(records, name):
    used = set()
    stack = [len(records) - 1]
    while stack:
        i = stack.pop()
        if i in used:
            continue
        used.add(i)
        if records[i][1] == "resolve":
            stack += [records[i][2], records[i][3]]
    order = sorted(used)
    ids = {i: str(k + 1) for k, i in enumerate(order)}
    lines = [f"% {name}"]
    for i in order:
        clause, rule, left, right, atom = records[i]
        if rule == "input":
            lines.append(f"{ids[i]} input {show_clause(clause)}.")
        else:
            lines.append(f"{ids[i]} resolve({ids[left]}, {ids[right]}, {show_atom(atom)}) {show_clause(clause)}.")
    return "\n".join(lines) + "\n"


def clauses(*texts):
    return [parse_clause(t) for t in texts]


def chain(n):
    cs = ["p0(a)"] + [f"~p{i}(X) | p{i + 1}(X)" for i in range(n)] + [f"~p{n}(a)"]
    return clauses(*cs)


def function_chain(n):
    goal = "a"
    for _ in range(n):
        goal = f"f({goal})"
    return clauses("p(a)", "~p(X) | p(f(X))", f"~p({goal})")


def transitivity(n):
    names = [chr(ord("a") + i) for i in range(n + 1)]
    cs = [f"r({names[i]},{names[i + 1]})" for i in range(n)]
    cs += ["~r(X,Y) | ~r(Y,Z) | r(X,Z)", f"~r({names[0]},{names[-1]})"]
    return clauses(*cs)


def pigeonhole(holes):
    pigeons = holes + 1
    cs = [" | ".join(f"h{p}_{h}" for h in range(holes)) for p in range(pigeons)]
    for h in range(holes):
        for p, q in itertools.combinations(range(pigeons), 2):
            cs.append(f"~h{p}_{h} | ~h{q}_{h}")
    return clauses(*cs)


def all_sign_patterns(n):
    atoms = [f"a{i}" for i in range(n)]
    return clauses(*(" | ".join(("" if s else "~") + a for s, a in zip(signs, atoms))
                     for signs in itertools.product([True, False], repeat=n)))


def satisfiable(cs):
    atoms = sorted({l[1] for c in cs for l in c})
    for values in itertools.product([False, True], repeat=len(atoms)):
        v = dict(zip(atoms, values))
        if all(any(v[l[1]] == l[0] for l in c) for c in cs):
            return True
    return False


def random_unsat(rng, atoms, width):
    while True:
        cs = []
        while True:
            lits = rng.sample(range(atoms), width)
            cs.append(tuple((rng.random() < 0.5, f"a{i}", ()) for i in lits))
            if len(cs) >= atoms and not satisfiable(cs):
                return cs


def horn_family(rng, size):
    """Datalog-style rules over binary relations with a refuted goal."""
    consts = ["a", "b", "c", "d"]
    cs = [f"e({x},{y})" for x, y in zip(consts, consts[1:])]
    cs += ["~e(X,Y) | path(X,Y)", "~path(X,Y) | ~e(Y,Z) | path(X,Z)"]
    if size > 1:
        cs += ["~path(X,Y) | reach(Y)", "~reach(X) | ~e(X,Y) | reach(Y)"]
        cs.append("~reach(d)")
    else:
        cs.append("~path(a,d)")
    return clauses(*cs)


def problems(seed):
    rng = random.Random(seed)
    out = {}
    for n in (2, 3, 4, 5):
        out[f"chain_{n:02d}"] = chain(n)
    for n in (2, 3, 4):
        out[f"function_chain_{n:02d}"] = function_chain(n)
    for n in (2, 3):
        out[f"transitivity_{n:02d}"] = transitivity(n)
    for holes in (1, 2):
        out[f"pigeonhole_{holes:02d}"] = pigeonhole(holes)
    for n in (2, 3):
        out[f"all_signs_{n:02d}"] = all_sign_patterns(n)
    for i in range(6):
        out[f"random_cnf_{i:02d}"] = random_unsat(rng, 3 + i % 3, 2 + i % 2)
    out["horn_path_01"] = horn_family(rng, 1)
    out["horn_path_02"] = horn_family(rng, 2)
    out["subsumption_01"] = clauses("p(X) | q(X)", "~p(a)", "~q(a)")
    out["two_sided_01"] = clauses("p(X)", "~p(X) | q(X)", "~q(a)")
    out["skolem_01"] = clauses("r(X,f(X))", "~r(X,Y) | s(Y)", "~s(f(a))")
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "samples" / "proofs"))
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, cs in problems(args.seed).items():
        records = refute(cs)
        if records is None:
            raise SystemExit(f"{name}: no refutation found")
        (out / f"{name}.proof").write_text(proof_text(records, name))
        print(f"{name}: {sum(1 for _ in proof_text(records, name).splitlines()) - 1} steps")


if __name__ == "__main__":
    main()
