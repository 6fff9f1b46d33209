"""Domain services: algebra, operators, bridges, groups, Lorentz and verification."""
