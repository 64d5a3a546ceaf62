# Strata - singularity classification, catalogued singular points and F_p oracles
