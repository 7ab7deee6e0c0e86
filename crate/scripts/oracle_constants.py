"""Independent oracle for the realization constants c_ij and n_ij.

Works in Euclidean coordinates: roots are explicit vectors, s is a product of
reflection matrices, and (1+s)/(1-s) on the moved subspace is taken as
(1+s) pinv(1-s). Writes crates/core/tests/fixtures/realization_constants.json.
"""
import json
import pathlib
import sympy as sp

# simple roots and the scale of the invariant form, chosen so (a_i, a_i) = 2 d_i
SYSTEMS = {
    "A2": ([sp.Matrix([1, -1, 0]), sp.Matrix([0, 1, -1])], 1),
    "B2": ([sp.Matrix([1, -1]), sp.Matrix([0, 1])], 2),
}
CASES = [("A2", [1, 2]), ("A2", [2, 1]), ("B2", [1, 2]), ("B2", [2, 1])]


def reflection(a, scale):
    n = a.shape[0]
    return sp.eye(n) - 2 * a * a.T / (a.T * a)[0]


def constants(name, word):
    roots, scale = SYSTEMS[name]
    form = lambda x, y: scale * (x.T * y)[0]
    n = roots[0].shape[0]
    s = sp.eye(n)
    for i in word:
        s = s * reflection(roots[i - 1], scale)
    one_minus = sp.eye(n) - s
    cayley = (sp.eye(n) + s) * one_minus.pinv()
    l = len(roots)
    c = [[sp.nsimplify(form(cayley * roots[i], roots[j])) for j in range(l)] for i in range(l)]
    d = [form(a, a) / 2 for a in roots]
    nn = [[c[i][j] / (2 * d[j]) for j in range(l)] for i in range(l)]
    return c, nn


def main():
    out = []
    for name, word in CASES:
        c, nn = constants(name, word)
        out.append({
            "type": name[0],
            "rank": int(name[1:]),
            "s": word,
            "c": [[str(x) for x in row] for row in c],
            "n": [[str(x) for x in row] for row in nn],
        })
    path = pathlib.Path(__file__).resolve().parent.parent / "crates/core/tests/fixtures/realization_constants.json"
    path.write_text(json.dumps(out, indent=2) + "\n")
    print(path)


if __name__ == "__main__":
    main()
