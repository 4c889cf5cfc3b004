"""Minimal elements, the psi identity and the limit crystal B_infinity."""
from crystal_kit import (
    B_INF,
    G2Crystal,
    MinimalElement,
    binf_f,
    embed,
    level_of,
    minimal_elements,
    psi,
    verify_coherent,
    verify_perfect,
    z_vector,
)
from crystal_kit.perfectness import growth, phi_vector

for l in range(1, 5):
    report = verify_perfect(l)
    print(f"B_{l}: {report.notes['minimal_count']} minimal elements, perfect check {report.to_json_obj()['status']}")

print("\nminimal elements of B_2:")
for b in minimal_elements(2):
    print("  ", b)

# <c, phi(b)> - l equals psi(z(b)); psi is returned x3.
B2 = G2Crystal(2)
sample = B2.elements()[::15]
for b in sample:
    print(f"{b.to_text():<26} <c,phi>-l = {level_of(phi_vector(B2, b)) - 2}   psi = {psi(z_vector(b)) / 3:g}")

# Embeddings into B_infinity commute with the operators.
m = MinimalElement(1, 0)
b = B2.elements()[40]
print("\nembed(b)        ", embed(2, m, b))
print("f_0 then embed  ", embed(2, m, B2.f(0, b)) if B2.f(0, b) else None)
print("embed then f_0  ", binf_f(0, embed(2, m, b)))
print("b_inf           ", B_INF)

for l in (1, 2, 3):
    print(f"coherent check at level {l}: {verify_coherent(l).to_json_obj()['status']}")
print("size of union of images for L = 1..4:", growth(4))
