"""Locate the exact order where complete graphs stop being two-colorable.

For each (t, k) the question is: color the edges of K_n red and blue so
the red side has no t-clique and every blue component stays under k
vertices.  Below a sharp threshold this is always possible, at the
threshold it never is.  The script sweeps n and prints the flip.
"""

from cocritical.construction import ramsey_number
from cocritical.graphs import complete_graph
from cocritical.search import arrows

for t, k in ((3, 3), (3, 4), (4, 3), (4, 4)):
    predicted = ramsey_number(t, k)
    row = []
    for n in range(2, predicted + 1):
        row.append("X" if arrows(complete_graph(n), t, k) else ".")
    print(f"t={t} k={k}  n=2..{predicted}: {' '.join(row)}  (threshold {predicted})")
    # the flip must happen exactly at the closed-form value
    assert row[-1] == "X" and all(c == "." for c in row[:-1])

print("every threshold matches (t-1)(k-1)+1")
