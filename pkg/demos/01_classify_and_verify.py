"""Walk through one tuple per non-simple row: classify it, build the model, check the radical.

Run with ``python3 demos/01_classify_and_verify.py``.
"""

from axialjordan.classifier import ROWS, classify_parameters, verify_row
from axialjordan.witnesses import WITNESSES, GENERIC
from axialjordan.models import realize_universal
from axialjordan.axial import frobenius_form, radical

for row in ROWS:
    p = WITNESSES[row]
    match = classify_parameters(p)
    rep = verify_row(row, p)
    zero = sum(r.zero for r in rep.residuals)
    print(f"{row}  ({p})  -> {match.iso_class:9s} dim {rep.model_dim}  "
          f"model {rep.provenance:9s} radical vectors vanishing {zero}/{len(rep.residuals)}")
    for line in rep.failures():
        print("     !", line)

# off the non-simple locus the three axes generate all of M_3^+
p = WITNESSES[GENERIC]
m = realize_universal(p)
G = frobenius_form(m.algebra, m.axes)
print(f"\ngeneric ({p}): closure dim {m.algebra.dim}, radical dim {radical(m.algebra, G).dim}")
print("recovered parameters:", m.recovered_params(G))
