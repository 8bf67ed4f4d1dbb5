"""HTTP service wrapping the calculator; see main.app."""
