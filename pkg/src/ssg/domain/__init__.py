"""Domain layer: tree automorphisms, Cantor-space values and RN elements."""
