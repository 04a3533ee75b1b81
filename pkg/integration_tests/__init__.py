"""Integration tests: end-to-end flows across modules."""
