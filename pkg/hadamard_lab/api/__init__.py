"""Hadamard Lab FastAPI Service - read-only walk reports."""
