"""The G2^(1) operators as powers of the D4^(3) ones.

f_i on V_l agrees with f^_i applied m_i = (3, 3, 1)[i] times in B^_{3l}.
"""
from crystal_kit import G2Crystal, classify_f, g2_f, hat_f, verify_similarity, z_vector
from crystal_kit.fixtures import golden_fixture

box = golden_fixture(1).by_label()

# Follow three hat steps from box 9 and watch the case change under them.
b = box["9"]
for step in range(4):
    print(f"hat f_0^{step}: {b}  case F{classify_f(z_vector(b))}")
    b = hat_f(0, b, 3)
print("G2 f_0      :", g2_f(0, box["9"], 1))

for l in range(4):
    report = verify_similarity(l)
    checked = sum(c.checked for c in report.clauses)
    print(f"level {l}: {len(G2Crystal(l).elements()):>4} elements, {checked:>5} checks, {report.to_json_obj()['status']}")
