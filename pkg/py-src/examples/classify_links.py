"""Example: Sort random diagrams into arc shift classes and check mirror equivalence.

Usage:
    uv run python py-src/examples/classify_links.py <components> <chords> [count] [seed]

Example:
    uv run python py-src/examples/classify_links.py 2 6 20 7
"""

import random
import sys
from collections import defaultdict

from arcshift_kit import (
    GaussDiagram,
    equivalent,
    gen_canonical,
    gen_random,
    mirror_equivalent,
    parity_matrix,
    replay,
    same_diagram,
    serialize,
)


def main(components: int, chords: int, count: int, seed: int) -> None:
    rng = random.Random(seed)
    classes: dict[str, list[GaussDiagram]] = defaultdict(list)
    for _ in range(count):
        d = gen_random(components, chords, rng.randrange(2**32))
        classes[serialize(gen_canonical(parity_matrix(d)))].append(d)

    print(f"{count} diagrams, {len(classes)} classes")
    for code, members in sorted(classes.items()):
        first = members[0]
        print(f"\nclass [{code}] x{len(members)}")
        print(f"  mirror equivalent: {bool(mirror_equivalent(first))}")
        for other in members[1:3]:
            result = equivalent(first, other, witness=True)
            assert result.witness is not None
            assert same_diagram(replay(first, result.witness), other)
            print(f"  {first}  ->  {other}")
            print(f"    witness cost {result.witness.arc_shift_cost}: {result.witness}")


if __name__ == "__main__":
    if len(sys.argv) < 3:
        print(__doc__)
        sys.exit(1)
    args = [int(value) for value in sys.argv[1:]]
    main(args[0], args[1], args[2] if len(args) > 2 else 20, args[3] if len(args) > 3 else 0)
