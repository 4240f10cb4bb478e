"""Show that the descendants increment misses its limit by alpha^2 / (n (n-1)),
and that a second difference of the total removes the error."""

from fractions import Fraction

from elenas.genfunc import catalog, constants

N = 400
cat = catalog(N)
count, psi = cat["count"].coefficients, cat["psi"].coefficients
limit = float(constants()["descendants"])


def per_node(n):
    return Fraction(psi[n], n * count[n])


def mean_total(n):
    return Fraction(psi[n], count[n])


print(f"{'n':>5} {'increment error':>18} {'error*n(n-1)':>14} {'2nd-difference error':>22}")
for n in (10, 25, 50, 100, 200, 400):
    inc = float(per_node(n) - per_node(n - 1)) - limit
    second = float((mean_total(n) - 2 * mean_total(n - 1) + mean_total(n - 2)) / 2) - limit
    print(f"{n:5d} {inc:18.3e} {inc * n * (n - 1):14.10f} {second:22.3e}")
