"""Timing on random generator sets; the pipeline is polynomial in (n, m).

Run: python demos/scaling.py
"""
import random
import time

import numpy as np

from pauli_dla import classify
from pauli_dla.instances import random_generators

sizes = [125, 250, 500, 1000]
rows = []
for n in sizes:
    for m in sizes:
        gens = random_generators(n, m, random.Random(n + m))
        t = time.perf_counter()
        c = classify(gens)
        dt = time.perf_counter() - t
        rows.append((n, m, dt))
        print(f"n={n:5d} m={m:5d} {dt:7.3f}s  {c.label[:50]}")

x = np.log([max(n, m) for n, m, _ in rows])
y = np.log([dt for *_, dt in rows])
print("log-log slope in max(n, m): %.2f" % np.polyfit(x, y, 1)[0])
