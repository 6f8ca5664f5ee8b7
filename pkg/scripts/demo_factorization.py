#!/usr/bin/env python3
"""End-to-end tour: build relations, inspect them, and run the solvers.

Walks the right-side factorization A = B∘T at relation and operator level on
a solvable pair, shows a failing pair with the violated condition named, and
confirms the failure by brute-force witness search at desk scale.
"""

from linrel import (
    LinearRelation,
    Matrix,
    brute_force_right_witness,
    profile,
    serialize_relation,
    solve_right_operator,
    solve_right_relation,
)


def show(title: str, rel: LinearRelation) -> None:
    p = profile(rel)
    print(f"--- {title}: dom={p.dom.dim} ran={p.ran.dim} ker={p.ker.dim} "
          f"mul={p.mul.dim} operator={'yes' if p.is_operator else 'no'}")
    print(serialize_relation(rel), end="")


def main() -> None:
    a = LinearRelation.graph_of_matrix(Matrix.from_rows([[3, 0], [0, 0]]))
    b = LinearRelation.graph_of_matrix(Matrix.from_rows([[1, 0], [0, 0]]))
    show("A", a)
    show("B", b)

    print("\n=== solve right, relation level ===")
    print(solve_right_relation(a, b).to_text(), end="")

    print("\n=== solve right, operator level ===")
    report = solve_right_operator(a, b)
    print(report.to_text(), end="")
    show("witness T with B∘T = A", report.witness)

    bad = LinearRelation.graph_of_matrix(Matrix.from_rows([[0, 0], [1, 0]]))
    print("\n=== unsolvable pair: range of A escapes range of B ===")
    failing = solve_right_operator(bad, b)
    print(failing.to_text(), end="")
    print("failed conditions:", ", ".join(failing.failed_conditions()))

    print("\nbrute-force search over grid operator graphs:",
          "no witness" if brute_force_right_witness(bad, b) is None else "witness?!")


if __name__ == "__main__":
    main()
