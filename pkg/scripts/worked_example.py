"""The one-variable example f = x^2 - 1 end to end: Bezoutian, extension step,
bounded root functionals and their products."""

from rootext import (SystemProfile, bezout_poly, eval_functional, extend_step, poly_parse,
                     product_functional, root_functional_basis)


def show(label, L):
    body = ", ".join(f"x^{e[0]} -> {v}" for e, v in sorted(L.coeffs.items()))
    print(f"{label}: {body or 'zero functional'}")


def main():
    f = SystemProfile.parse(["x1^2 - 1"])
    print("f =", f[0], " delta_f =", f.delta_f)
    print("R(x, y) for F = x:", bezout_poly(f, poly_parse("x1", 1)))

    L = eval_functional([1], 2)
    print("H(x) for F = x^2, L = eval at 1:", extend_step(L, 0, f, poly_parse("x1^2", 1)))

    basis = root_functional_basis(f, 2)
    print(f"bounded root functionals at D = 2: dimension {basis.dimension}")
    for i, B in enumerate(basis.basis):
        show(f"  basis[{i}]", B)

    one, minus = eval_functional([1], 1), eval_functional([-1], 1)
    show("eval(1) * eval(1)", product_functional(one, 0, one, 0, f))
    show("eval(1) * eval(-1)", product_functional(one, 0, minus, 0, f))

    # products of the dual monomials of the double point (x1^2, x2^2); the table is symmetric
    g = SystemProfile.parse(["x1^2", "x2^2"])
    b = root_functional_basis(g, 2).basis
    names = ["d" + ("".join(f"x{k + 1}" * e for k, e in enumerate(next(iter(B.coeffs)))) or "1")
             for B in b]
    print("products on (x1^2, x2^2), bound", g.delta_f + 1, "(support of each result):")
    for A, na in zip(b, names):
        row = []
        for B in b:
            P = product_functional(A, 0, B, 0, g)
            row.append("+".join(f"{v}*x^{list(e)}" for e, v in sorted(P.coeffs.items())) or "0")
        print(f"  {na:<6}" + "  ".join(f"{r:<12}" for r in row))

if __name__ == "__main__":
    main()
