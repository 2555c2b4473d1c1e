"""Three axes inside M_2^+: how the generator matrices are chosen and what they satisfy."""

from axialjordan.classifier import verify_multiplication_table
from axialjordan.exactfield import fmt
from axialjordan.models import ParameterTuple, s7_generators, s7_trace_report

p = ParameterTuple.parse("1/2, 1/3, 2, 11/12")
for branch in ("minus", "plus"):
    m = s7_generators(p, branch)
    lam = ", ".join(f"{k}={fmt(v)}" for k, v in m.lambdas.items() if k != "branch")
    print(f"branch {branch}: {lam}")
    for name, M in m.extras["matrices"].items():
        print(f"  {name} =", [[fmt(x) for x in row] for row in M])

print("\ntrace identities")
for t in s7_trace_report(m):
    print(f"  {'ok ' if t.holds else 'NO '} {t.name}:  {fmt(t.lhs)} vs {fmt(t.rhs)}")

# the printed table in the basis a, b, c, ab
rep = verify_multiplication_table(m, "S7")
print(f"\ntable cells matching: {sum(c.status == 'match' for c in rep.cells)}/{len(rep.cells)}")
for c in rep.cells:
    if c.status != "match":
        d = c.to_json()
        print(f"  ({c.row}, {c.col}) printed {d['printed']}  computed {d['computed']}")
