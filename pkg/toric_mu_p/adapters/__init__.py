"""Adapter components for reading input documents and writing reports."""
