"""Utility modules for monocheck: configuration, factorization cache, polynomial parsing."""
