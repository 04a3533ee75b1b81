"""
Unit tests for the multi-state imaginarity and coherence toolkit.
Tests are organized to mirror the structure of src/.
"""
