"""The 32 forbidden frustration graphs and the sp(4) they generate.

Run: python demos/forbidden_graphs.py
"""
from collections import Counter

from pauli_dla import classify_vectors, closure, recognize_root
from pauli_dla.gf2 import QuadraticForm
from pauli_dla.oracle import catalog_realizations, model_to_pauli
from pauli_dla.pauli import PauliVector, from_vector, render_pauli

catalog = catalog_realizations()
print(len(catalog), "graphs on 6 vertices")
print("edge counts:", sorted(Counter(len(fg.graph.edges()) for fg in catalog).items()))

# none of them is a line graph
print("line graphs among them:", sum(recognize_root(fg.graph) is not None for fg in catalog))

# realize one on three qubits and classify it
form = QuadraticForm.pauli(3)
fg = catalog[0]
vecs = [model_to_pauli(v) for v in fg.basis]
print("generators:", [render_pauli(from_vector(PauliVector(3, v))) for v in vecs])
print("edges:", fg.graph.edges())
c = classify_vectors(vecs, form)
print("algebra:", c.label, "dim", c.total_dim, "closure", len(closure(vecs, form)))
