"""
Test fixtures for unit tests.
"""
