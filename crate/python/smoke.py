"""Quick checks of the vinberg_py extension.

Install the extension with `pip install ./crates/python` (needs maturin),
or run `cargo test -p vinberg-python`, which executes this file in an
embedded interpreter.
"""

import vinberg_py as vb

g2 = vb.GradedAlgebra.from_labels("G2: s=[1,0,1]")
assert g2.m == 3
assert g2.graded_dims() == [4, 5, 5]
assert g2.rank() == 1
assert g2.nilcone_dim() == 4

e = {"e[0,1]": 1}
assert g2.centralizer_dims(e) == [2, 3, 3]
xs, xn = g2.jordan_decomposition({"e[0,1]": 1, "e[3,1]": 1, "e[-3,-2]": 1})
assert xn == {}
t = g2.sl2_triple(e)
assert t["relations_hold"] and t["transversal"]
assert g2.bracket(t["h"], e) == {"e[0,1]": "2"}

try:
    vb.GradedAlgebra.from_labels("G2: s=[1,x,1]")
except ValueError:
    pass
else:
    raise AssertionError("malformed labels accepted")

e8 = vb.GradedAlgebra.e8_trivector()
assert e8.dim == 248 and e8.graded_dims() == [80, 84, 84]
x = vb.trivector([(1, 2, 3, 1), (4, 5, 6, 1), (7, 8, 9, 1),
                  (1, 4, 9, 1), (1, 5, 8, 1), (1, 6, 7, 1), (2, 4, 8, 1), (3, 5, 7, 1)])
assert e8.centralizer_dims(x) == [4, 6, 8]

dims = [c["dims"] for c in vb.e8_class_dims()]
assert dims == [[4, 6, 8], [4, 8, 8], [4, 10, 8]]
assert all(vb.e8_slice_example(v)["induction"]["witnessed"] for v in (1, 2, 3))
assert vb.e8_adapted_cartan()["verdict"] == "Obstructed"

modes = vb.solve_modes([3, 0, 0], 3)
assert modes["identity_holds"] and modes["lambda"] == ["1", "1", "1"]

rows = vb.verify_tables("small")
assert len(rows) == 4 and all(r["pass"] for r in rows)

print("smoke ok")
