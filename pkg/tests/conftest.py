"""Shared pytest configuration; keeps this directory importable so the
tests can reach the bruteforce reference module."""
