"""When do Pauli strings generate all of su(2^n)?

Spanning V, a connected frustration graph and a forbidden 6-subset are
needed together. Run: python demos/full_generation.py
"""
from pauli_dla import check_generates_full
from pauli_dla.instances import parity_basis
from pauli_dla.pauli import parse_many, render_pauli


def show(name, ps):
    r = check_generates_full(ps)
    print(f"{name:<28} full={r.full!s:<5} connected={r.connected!s:<5} spans={r.spans!s:<5} "
          f"witness={r.witness!s:<5} -> {r.classification.label}")


show("n=3, seven strings", parse_many(["iXII", "iZII", "iIXI", "iIZI", "iIIX", "iZZI", "iIZZ"]))

# iX_j, iZ_j alone: three commuting copies of su(2)
show("G0, n=3", parity_basis(3, []))

# one extra string is never enough for odd n
show("G0 + iZ1Z2", parity_basis(3, [(0, 1)]))
show("G0 + iZ1Z2Z3", parity_basis(3, [(0, 1, 2)]))

# overlapping subsets with an even one do it
show("G0 + iZ1Z2 + iZ2Z3", parity_basis(3, [(0, 1), (1, 2)]))
show("G0 + iZ1Z2Z3Z4, n=4", parity_basis(4, [(0, 1, 2, 3)]))

# no 6-subset at all, still full via so(6) = su(4)
ps = parse_many(["iXI", "iZI", "iIX", "iIZ", "iYY"])
print([render_pauli(p) for p in ps])
show("n=2, five strings", ps)
