# Stability - S- and beta-invariants from volume profiles
