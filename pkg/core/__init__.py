"""Core arithmetic and monogenity pipelines for monocheck."""
