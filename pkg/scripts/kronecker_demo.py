#!/usr/bin/env python3
"""HH^1 of the Kronecker algebra and its trivial extension, side by side."""
from gentle_hh1.coords import coordinates
from gentle_hh1.lie import classify, structure_constants
from gentle_hh1.linalg import Field
from gentle_hh1.quiver import presentation


def show(L, title):
    print(title)
    for i, label in enumerate(L.labels):
        print(f"  x{i} = {label}")
    for (i, j), vec in sorted(L.table.items()):
        if i < j:
            rhs = " + ".join(f"{c}*x{k}" for k, c in sorted(vec.items()))
            print(f"  [x{i}, x{j}] = {rhs}")


def main():
    G = presentation(["e1", "e2"], [("b1", "e1", "e2"), ("b2", "e1", "e2")], [])
    for f in (Field(0), Field(2)):
        A = structure_constants(G, f, "A")
        show(A, f"HH^1(A) over {f.label()}")
        if f.char != 2:
            b1, b2 = G.arrow_paths
            co = coordinates(G, f)
            index = {b: i for i, b in enumerate(A.basis)}
            new = (co.h1({(b1, b1): 2}), co.h1({(b2, b1): 1}), co.h1({(b1, b2): 1}))
            S = A.change_basis([{index[k]: c for k, c in v.items()} for v in new], ["h", "e", "f"])
            show(S, "  ... in the basis h = 2(b1,b1), e = (b2,b1), f = (b1,b2)")
        T = structure_constants(G, f, "TA")
        show(T, f"HH^1(TA) over {f.label()}")
        c = classify(G, f)
        print(f"  solvable(A)={c.solvable_A} solvable(TA)={c.solvable_TA} gl2={c.gl2_flag}\n")


if __name__ == "__main__":
    main()
