"""Language support for monocheck."""
