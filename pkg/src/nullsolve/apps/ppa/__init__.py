"""End-of-the-Line instances for the Combinatorial Nullstellensatz over F_2."""
