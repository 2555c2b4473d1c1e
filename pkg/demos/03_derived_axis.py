"""The derived axis d = (2ab - alpha a - b)/(alpha - 1) and the half-dimensional H(M_3) model."""

from axialjordan.axial import axis_report, frobenius_form
from axialjordan.classifier import build_row_model, verify_multiplication_table
from axialjordan.models import ParameterTuple, derived_axis

p = ParameterTuple.parse("1/2, 1/2, 1/16, 1/8")
m = build_row_model("A9", p)
A, a, b, c = m.algebra, *m.axes
print("model:", m.provenance, "|", *m.notes)

d = derived_axis(A, a, b, p.alpha)
G = frobenius_form(A, m.axes)
print("d^2 == d:", d * d == d, "  a d == 0:", (a * d).is_zero(), "  axis:", axis_report(A, d).is_axis)
print("(c, d) =", G(c, d))

# S8 itself: (a, b) = 0 and psi = 0
s8 = build_row_model("A8", ParameterTuple.parse("0, 1/4, 1/2, 0"))
rep = verify_multiplication_table(s8, "S8")
for cell in rep.cells:
    if cell.status != "match":
        print(cell.status, cell.to_json())
