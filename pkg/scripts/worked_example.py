"""Walk a small two-variable instance through the full pipeline.

Prints the node-by-node search trace, the solution set with both objective
vectors, and the brute-force cross-check.
"""
from effset import branch_cut, efficient_sets, instance, ratio


def demo_instance():
    criteria = [
        ratio([1, 0], -4, [0, -1], 2),
        ratio([-1, 0], 4, [0, 1], 1),
        ratio([-1, 1], 0, [0, 0], 1),
    ]
    utilities = [
        ratio([-1, 1], -3, [2, 1], 1),
        ratio([-4, 3], 1, [2, 1], 2),
    ]
    return instance([[-1, 4], [2, -1]], [0, 8], criteria, utilities)


def main():
    inst = demo_instance()
    report = branch_cut.run(inst)

    print("search trace")
    for rec in report.trace:
        parent = "root" if rec.parent is None else f"from {rec.parent}"
        line = f"  node {rec.node_id:>2} ({parent}): {rec.action}"
        if rec.point is not None:
            pt = ", ".join(str(v) for v in rec.point)
            line += f"  at ({pt}), value {rec.value}"
        if rec.h is not None:
            h = ",".join(f"x{j}" for j in sorted(rec.h))
            hp = ",".join(f"x{j}" for j in sorted(rec.hprime))
            line += f"  H={{{h}}} H'={{{hp}}}"
        print(line)

    print(f"\nnodes processed: {report.nodes_processed}")
    print(f"fathomed: {report.fathoms}")

    print("\nsolution set")
    for rec in report.solutions:
        print(
            f"  x = {rec.point}  criteria = {tuple(map(str, rec.criteria_values))}"
            f"  utilities = {tuple(map(str, rec.utility_values))}"
        )

    x_e, x_ep, both = efficient_sets(inst)
    print("\nbrute force")
    print(f"  criteria-efficient: {x_e}")
    print(f"  utility-efficient:  {x_ep}")
    print(f"  common:             {both}")
    agree = set(both) == report.solution_points()
    print(f"  matches the search: {'yes' if agree else 'NO'}")


if __name__ == "__main__":
    main()
