"""Coordinates, z-vectors and the 0-operators on B_1.

Run: python demos/01_coordinates_and_operators.py
"""
from crystal_kit import Element, G2Crystal, a_vector, classify_f, g2_f, s_scaled, z_vector

# Elements are stored x3 so every coordinate is an integer.
box9 = Element.from_paper((0, 0, 0, "4/3", "1/3", 0))
print("box 9          ", box9, "scaled", box9.astuple())
print("3 s(b)         ", s_scaled(box9))

# The 0-arrow is chosen by which of the six inequality cases z falls into.
z = z_vector(box9)
print("scaled z       ", tuple(z))
print("A              ", tuple(a_vector(z)), "max", max(a_vector(z)))
print("case           ", f"F{classify_f(z)}")

# z4 = 2/3 triggers one of the two special sub-branches of f_0.
print("f_0(box 9)     ", g2_f(0, box9, 1))

# Statistics for every element of B_1
B1 = G2Crystal(1)
print()
print(f"{'element':<26}{'eps':<12}{'phi':<12}wt")
for b in B1.elements():
    eps = tuple(B1.eps(i, b) for i in range(3))
    phi = tuple(B1.phi(i, b) for i in range(3))
    print(f"{b.to_text():<26}{str(eps):<12}{str(phi):<12}{B1.weight(b)}")
