"""Walkthrough: Hodge classes of the bundle stack from a period matrix.

The odd universal classes of the stack come in two integral families a, b
indexed by a symplectic homology basis of the curve.  Given the period
matrix tau (Siegel upper half-space), the holomorphic directions are spanned
by theta = A a + B b; this demo computes A and B exactly for a rational tau
and verifies the exact basis-change identities.
"""

from hodge_series import PeriodMatrix, QC, theta_coefficients, validate_period_matrix
from hodge_series.vhs import basis_change_consistent, identity_times_i

print("=== tau = i * Id (the 'square' curve normalization) ===")
pm = identity_times_i(2)
A, B = theta_coefficients(pm)
print("A =", [[str(x) for x in row] for row in A])
print("B =", [[str(x) for x in row] for row in B])

print()
print("=== a genus-2 rational period matrix ===")
pm = PeriodMatrix.from_rows([
    [QC("1/2", 2), QC("1/3", "1/2")],
    [QC("1/3", "1/2"), QC("-1/4", 1)],
])
ok, diagnostics = validate_period_matrix(pm)
print("valid:", ok, diagnostics)
A, B = theta_coefficients(pm)
for j in range(2):
    for i in range(2):
        print("A[%d][%d] = %-18s B[%d][%d] = %s" % (j, i, A[j][i], j, i, B[j][i]))
print("basis-change identities hold exactly:", basis_change_consistent(pm))

print()
print("=== JSON input (decimal strings are exact) ===")
text = '{"g": 1, "tau": [[["0.75", "2.5"]]]}'
pm = PeriodMatrix.from_json(text)
A, B = theta_coefficients(pm)
print("tau = 3/4 + 5i/2 ->  A =", A[0][0], "   B =", B[0][0])
