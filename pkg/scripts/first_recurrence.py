"""Empirical recurrence times against the closed-form bound.

For each instance with q > 0 and each origin, plays are enumerated
exhaustively and two numbers are recorded:

* worst first repeat: the largest step at which some play first revisits
  a configuration;
* certified step: the smallest T such that in every play the configuration
  after T moves was already seen.

Columns: origins whose bound is violated by some play, the smallest
(bound - certified step) over origins, and the worst first repeat.

Usage: python scripts/first_recurrence.py [--max-cards 7] [--max-players 4]
"""

import argparse

from gameofcards import GameParams, build_graph, recurrence_bound
from gameofcards.oracle import enumerate_plays


def first_repeat(seq):
    seen = set()
    for t, c in enumerate(seq):
        if c in seen:
            return t
        seen.add(c)
    return None


def certified_step(origin, limit):
    for t in range(limit + 1):
        if all(seq[-1] in seq[:-1] for seq in enumerate_plays(origin, t, cap=10**6)):
            return t
    return None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-cards", type=int, default=7)
    ap.add_argument("--max-players", type=int, default=4)
    args = ap.parse_args()

    print(f"{'n':>3} {'p':>3} {'origins':>8} {'violations':>10} {'min slack':>9} {'worst repeat':>12}")
    for p in range(2, args.max_players + 1):
        for n in range(args.max_cards + 1):
            params = GameParams(n, p)
            if params.q == 0:
                continue
            g = build_graph(params)
            violations = 0
            slack = []
            worst = 0
            for origin in g.nodes:
                bound = recurrence_bound(origin)
                # every play eventually cycles inside the duals, so this terminates
                t = certified_step(origin, bound + len(g.nodes))
                plays = list(enumerate_plays(origin, bound, cap=10**6))
                worst = max([worst] + [first_repeat(s) or 0 for s in plays])
                if any(s[-1] not in s[:-1] for s in plays):
                    violations += 1
                slack.append(bound - t)
            print(f"{n:>3} {p:>3} {len(g.nodes):>8} {violations:>10} {min(slack):>9} {worst:>12}")


if __name__ == "__main__":
    main()
