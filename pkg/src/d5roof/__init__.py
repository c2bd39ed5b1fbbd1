"""Verification engine for the D5 roof: Bott cohomology, exact-sequence bookkeeping, mutation replay."""
