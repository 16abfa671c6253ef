"""QAOA mixers and cost terms: path, cycle, and a graph with an odd cycle.

Run: python demos/qaoa_family.py
"""
from pauli_dla import classify, closure
from pauli_dla.gf2 import QuadraticForm
from pauli_dla.instances import qaoa_cycle, qaoa_graph, qaoa_path
from pauli_dla.pauli import generator_vectors

# path: the frustration graph is a path, the line graph of a longer path
for n in range(2, 7):
    c = classify(qaoa_path(n))
    print(f"path  n={n}: {c.components[0].summand.label:<16} = {c.label:<24} dim {c.total_dim}")

# closing the cycle adds iZ_1 Z_n and doubles everything
for n in range(3, 7):
    c = classify(qaoa_cycle(n))
    print(f"cycle n={n}: {c.label:<40} dim {c.total_dim}")

# a triangle with a pendant vertex is not bipartite: no line graph any more
ps = qaoa_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
c = classify(ps)
rep = c.components[0]
print("triangle+pendant:", rep.branch, c.label, "dim", c.total_dim)
print("  diagnostics:", rep.diagnostics)

# brute force agrees
vecs, _ = generator_vectors(ps)
print("  closure size:", len(closure(vecs, QuadraticForm.pauli(4))))
