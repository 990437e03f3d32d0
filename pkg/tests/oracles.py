"""Independent brute-force oracles the tests freeze their numbers against.

Everything here works on plain nested lists and tuples with scalar loops,
deliberately sharing no table machinery with the package: counts and
witnesses produced by these functions are what the library must reproduce.
"""

from itertools import permutations, product


def idempotent_tables(n):
    """Every n x n table with x*x = x, as tuples of row tuples."""
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    for values in product(range(n), repeat=len(cells)):
        table = [[i] * n for i in range(n)]
        for (i, j), v in zip(cells, values):
            table[i][j] = v
        yield tuple(tuple(row) for row in table)


def is_associative(table):
    n = len(table)
    return all(
        table[table[x][y]][z] == table[x][table[y][z]]
        for x in range(n)
        for y in range(n)
        for z in range(n)
    )


def brute_force_bands(n):
    """All labeled idempotent associative tables of order n."""
    return [t for t in idempotent_tables(n) if is_associative(t)]


def relabel(table, perm):
    n = len(table)
    inverse = [0] * n
    for i, p in enumerate(perm):
        inverse[p] = i
    return tuple(
        tuple(perm[table[inverse[i]][inverse[j]]] for j in range(n))
        for i in range(n)
    )


def count_classes(tables):
    """Number of isomorphism classes, by explicit permutation orbits."""
    if not tables:
        return 0
    n = len(tables[0])
    seen = set()
    classes = 0
    for t in tables:
        if t in seen:
            continue
        classes += 1
        for perm in permutations(range(n)):
            seen.add(relabel(t, perm))
    return classes


def absorption_holds(meet, join):
    n = len(meet)
    for a in range(n):
        for b in range(n):
            if join[a][meet[a][b]] != a:
                return False
            if meet[a][join[a][b]] != a:
                return False
            if join[meet[a][b]][b] != b:
                return False
            if meet[join[a][b]][b] != b:
                return False
    return True


def brute_force_skew_lattices(n):
    """All labeled (meet, join) band pairs satisfying the absorption laws."""
    bands = brute_force_bands(n)
    return [
        (m, j) for m in bands for j in bands if absorption_holds(m, j)
    ]


def count_skew_classes(pairs):
    """Isomorphism classes of skew lattices, one permutation on both tables."""
    if not pairs:
        return 0
    n = len(pairs[0][0])
    seen = set()
    classes = 0
    for m, j in pairs:
        if (m, j) in seen:
            continue
        classes += 1
        for perm in permutations(range(n)):
            seen.add((relabel(m, perm), relabel(j, perm)))
    return classes


class PairOracle:
    """Scalar arithmetic on explicit (u, a) pairs for a group acting on a
    band pair; the yardstick for every semidirect construction."""

    def __init__(self, group, meet, join, act):
        self.group = [list(r) for r in group]
        self.meet = [list(r) for r in meet]
        self.join = [list(r) for r in join]
        self.act = [list(r) for r in act]
        n = len(self.group)
        self.identity = next(
            e for e in range(n)
            if all(self.group[e][x] == x and self.group[x][e] == x for x in range(n))
        )
        self.inv = [
            next(y for y in range(n) if self.group[x][y] == self.identity)
            for x in range(n)
        ]

    def pairs(self):
        return [
            (u, a) for u in range(len(self.group)) for a in range(len(self.meet))
        ]

    def mul(self, s, t, op):
        # (u,a)(v,b) = (uv, a^v . b)
        (u, a), (v, b) = s, t
        return (self.group[u][v], op[self.act[a][v]][b])

    def wedge(self, s, t):
        return self.mul(s, t, self.meet)

    def vee(self, s, t):
        return self.mul(s, t, self.join)

    def star(self, s):
        u, a = s
        w = self.inv[u]
        return (w, self.act[a][w])


def independent_band_count_check(tables, expected):
    """Belt-and-braces: a second count pass in reversed order."""
    return count_classes(list(reversed(tables))) == expected


def automorphism_perms(tables, n):
    """All permutations of range(n) preserving every table in the list."""
    out = []
    for perm in permutations(range(n)):
        if all(relabel(t, perm) == t for t in tables):
            out.append(perm)
    return out


def brute_force_action_maps(group, identity, meet, join):
    """Every right action of the group on the band pair, found by assigning
    a band automorphism to each group element and filtering the
    anti-homomorphism law directly; returns action tables act[a][u]."""
    ng, nb = len(group), len(meet)
    auts = automorphism_perms([tuple(tuple(r) for r in meet),
                               tuple(tuple(r) for r in join)], nb)
    ident = tuple(range(nb))
    out = []
    for assign in product(range(len(auts)), repeat=ng):
        f = [auts[k] for k in assign]
        if f[identity] != ident:
            continue
        # a^{uv} = (a^u)^v means f(uv) = f(v) after f(u)
        if any(
            f[group[u][v]] != tuple(f[v][f[u][a]] for a in range(nb))
            for u in range(ng)
            for v in range(ng)
        ):
            continue
        out.append(tuple(tuple(f[u][a] for u in range(ng)) for a in range(nb)))
    return out


def action_orbit_count(actions, group, meet, join):
    """Equivalence classes of actions under relabeling the group by one of
    its automorphisms and the band by one of its automorphisms."""
    if not actions:
        return 0
    ng, nb = len(group), len(meet)
    gauts = automorphism_perms([tuple(tuple(r) for r in group)], ng)
    bauts = automorphism_perms(
        [tuple(tuple(r) for r in meet), tuple(tuple(r) for r in join)], nb
    )
    seen = set()
    classes = 0
    for act in actions:
        if act in seen:
            continue
        classes += 1
        for tau in gauts:
            for sigma in bauts:
                sigma_inv = [0] * nb
                for i, p in enumerate(sigma):
                    sigma_inv[p] = i
                moved = tuple(
                    tuple(sigma_inv[act[sigma[a]][tau[u]]] for u in range(ng))
                    for a in range(nb)
                )
                seen.add(moved)
    return classes
