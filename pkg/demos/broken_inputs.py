"""What a failing check reports, and how the witness is confirmed.

Run: python demos/broken_inputs.py
"""

from tpalg import check_class
from tpalg.data import load_examples

examples = load_examples()
good, bent = examples.get("algebras", "A3"), examples.get("algebras", "A3_perturbed")
print("A3 passes COMM_ASSOC:", all(r.holds for r in check_class(good, "COMM_ASSOC")))

for report in check_class(bent, "COMM_ASSOC"):
    if report.holds:
        print(f"{report.identity_id}: holds")
        continue
    labels = [bent.basis_labels[i] for i in report.witness]
    values = [str(v) for v in report.defect]
    print(f"{report.identity_id}: fails at {dict(zip(report.variables, labels))}, defect {values}")
    print("  recomputed from the identity at the witness:", [str(v) for v in report.reevaluate()])
    print("  agrees:", report.reevaluate() == report.defect)

print()
print("The same check from the shell:")
print("  tpalg verify @examples A3_perturbed COMM_ASSOC")
