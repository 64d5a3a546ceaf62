# Toric - the fan of the moduli component
