from itertools import combinations

from howedual import DualPair, HCParam, delta_of


def occurring_params(pair: DualPair, max_doubled: int = 13) -> list[HCParam]:
    """All occurring parameters with entries bounded by max_doubled/2.

    Occurrence forces entries into delta + Z_{>=0}, so the candidates are
    the strictly decreasing tuples drawn from that lattice slice.
    """
    d = delta_of(pair)
    vals = []
    v = d
    while v.doubled <= max_doubled:
        vals.append(v)
        v = v + 1
    return [
        HCParam(combo)
        for combo in combinations(sorted(vals, reverse=True), pair.l)
    ]


def all_pairs(max_l: int = 3, max_lp: int = 5) -> list[DualPair]:
    return [
        DualPair(l, lp) for l in range(1, max_l + 1) for lp in range(l, max_lp + 1)
    ]
