"""Report exporters for monocheck."""
