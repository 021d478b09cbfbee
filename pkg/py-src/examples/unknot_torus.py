"""Example: Unknot the (2, 4n) virtual torus links and bracket their arc shift number.

Usage:
    uv run python py-src/examples/unknot_torus.py [max_n]

Example:
    uv run python py-src/examples/unknot_torus.py 4
"""

import sys

from arcshift_kit import SearchBudget, bracket, gen_torus, replay, unknot_report


def main(max_n: int) -> None:
    for n in range(1, max_n + 1):
        d = gen_torus(n)
        print(f"\n(2,{4 * n}) torus: {d}")

        result = unknot_report(d)
        assert replay(d, result.script).is_unlink
        print(f"  planner: {result.script}")
        print(f"  phase costs: {result.phases.model_dump()}")

        # 深度受限搜索，planner 的结果作为上界
        bounds = bracket(d, SearchBudget(max_arc_shifts=n, max_states=50_000))
        print(f"  bracket: {bounds.summary()}")
        print(f"  search: {bounds.stats.states_explored} states, {bounds.stats.budget_status}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 3)
