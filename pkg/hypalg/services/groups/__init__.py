"""Group specs, generator solving, closure and invariance checks."""
