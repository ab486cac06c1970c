import random

from stablecp.search import ScoreTables


def random_scores(inst, seed):
    """Random weighted scores that respect every preference order."""
    rng = random.Random(seed)
    n = inst.n
    tables = []
    for pl in (inst.mpl, inst.wpl):
        rows = [()]
        for i in range(1, n + 1):
            vals = sorted(rng.sample(range(1, 10 * n + 1), n))
            row = [0] * (n + 1)
            for a in range(1, n + 1):
                row[pl[i][a]] = vals[a - 1]
            rows.append(tuple(row))
        tables.append(rows)
    return ScoreTables(*tables)
