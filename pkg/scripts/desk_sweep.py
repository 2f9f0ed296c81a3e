"""Run every verification check over the desk-scale sweep and tabulate the results.

Usage: python scripts/desk_sweep.py [--max-cards 10] [--max-players 5]
"""

import argparse
from collections import Counter, defaultdict

from gameofcards.oracle import SweepConfig, run_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-cards", type=int, default=10)
    ap.add_argument("--max-players", type=int, default=5)
    ap.add_argument("--origin-max-states", type=int, default=84)
    args = ap.parse_args()

    cfg = SweepConfig(args.max_cards, args.max_players, args.origin_max_states)
    tally = defaultdict(Counter)
    failing = defaultdict(list)
    for outcome in run_sweep(cfg):
        tally[outcome.check_name][outcome.status] += 1
        if not outcome.passed:
            failing[outcome.check_name].append(f"({outcome.params.n},{outcome.params.p})")

    print(f"{'check':<24} {'pass':>6} {'fail':>6} {'inconcl':>8}  failing instances")
    for name, counts in tally.items():
        print(
            f"{name:<24} {counts['pass']:>6} {counts['fail']:>6} {counts['inconclusive']:>8}  "
            + " ".join(failing[name])
        )


if __name__ == "__main__":
    main()
