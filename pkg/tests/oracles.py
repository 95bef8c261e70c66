"""Independent brute-force references.

Nothing here uses the library's ideal or decider code: everything works on
plain Python sets built from the Cayley tables.
"""

from __future__ import annotations

def tables(R):
    return R.add_table.tolist(), R.mul_table.tolist()


def naive_closure(R, gens) -> frozenset:
    """Smallest set containing 0 and gens closed under x+y and r*x."""
    add, mul = tables(R)
    members = {0, *gens}
    changed = True
    while changed:
        changed = False
        for x in list(members):
            for r in range(R.size):
                if mul[r][x] not in members:
                    members.add(mul[r][x])
                    changed = True
            for y in list(members):
                if add[x][y] not in members:
                    members.add(add[x][y])
                    changed = True
    return frozenset(members)


def additive_subgroups(R) -> set[frozenset]:
    """Every additive subgroup, by growing subgroups one element at a time."""
    add, _ = tables(R)
    start = frozenset({0})
    seen = {start}
    todo = [start]
    while todo:
        H = todo.pop()
        for x in range(R.size):
            if x in H:
                continue
            cur, t = set(H), x
            while t not in H:
                cur.update(add[h][t] for h in H)
                t = add[t][x]
            G = frozenset(cur)
            if G not in seen:
                seen.add(G)
                todo.append(G)
    return seen


def brute_ideals(R) -> set[frozenset]:
    _, mul = tables(R)
    return {H for H in additive_subgroups(R) if all(mul[r][h] in H for r in range(R.size) for h in H)}


def brute_zero_divisors(R) -> set[int]:
    _, mul = tables(R)
    return {x for x in range(R.size) if any(mul[x][y] == 0 for y in range(1, R.size))}


def brute_annihilator(R, members) -> set[int]:
    _, mul = tables(R)
    return {a for a in range(R.size) if all(mul[a][x] == 0 for x in members)}


def brute_property_a(R) -> bool:
    Z = brute_zero_divisors(R)
    return all(brute_annihilator(R, I) != {0} for I in brute_ideals(R) if I <= Z)


def zero_divisor_generated_ideals(R) -> set[frozenset]:
    """Every ideal generated by a finite set of zero-divisors, grown one
    generator at a time from the zero ideal."""
    Z = sorted(brute_zero_divisors(R))
    start = naive_closure(R, [])
    seen, todo = {start}, [start]
    while todo:
        J = todo.pop()
        for z in Z:
            if z in J:
                continue
            K = naive_closure(R, [*J, z])
            if K not in seen:
                seen.add(K)
                todo.append(K)
    return seen


def brute_strong_property_a(R) -> bool:
    return all(brute_annihilator(R, I) != {0} for I in zero_divisor_generated_ideals(R))


def brute_is_local(R) -> bool:
    add, mul = tables(R)
    units = {x for x in range(R.size) if R.one in mul[x]}
    nonunits = set(range(R.size)) - units
    return all(add[x][y] in nonunits for x in nonunits for y in nonunits)


def relabel_equal(R1, R2, phi) -> bool:
    """True iff phi (index map R1 -> R2) carries both tables of R1 onto R2."""
    a1, m1 = tables(R1)
    a2, m2 = tables(R2)
    n = R1.size
    if sorted(phi) != list(range(n)):
        return False
    return all(
        phi[a1[x][y]] == a2[phi[x]][phi[y]] and phi[m1[x][y]] == m2[phi[x]][phi[y]]
        for x in range(n)
        for y in range(n)
    )
