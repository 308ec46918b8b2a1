"""Puts this directory on sys.path so tests can import the oracles module."""
