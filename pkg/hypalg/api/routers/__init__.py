"""API routers grouped by concern: algebra, groups, verification, lorentz."""
