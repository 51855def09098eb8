#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Factor Cache

Append-only text file memoizing complete factorizations, one line per
integer:

    1022117<TAB>1009*1013
    48<TAB>2^4*3

Keys are absolute values. Corrupt lines are skipped with a warning; only
complete factorizations are stored.
"""

import logging
import os
import threading

from core.intfactor import FactoredInt, is_prime

logger = logging.getLogger(__name__)


def parse_factorization(text):
    """
    Parse "2^4*3" into {2: 4, 3: 1}.

    Raises:
        ValueError: On malformed text
    """
    factors = {}
    if text == "1":
        return factors
    for part in text.split("*"):
        base, _, exponent = part.partition("^")
        p = int(base)
        e = int(exponent) if exponent else 1
        if p < 2 or e < 1 or p in factors:
            raise ValueError(f"bad factor {part!r}")
        factors[p] = e
    return factors


class FactorCache:
    """
    Thread-safe factorization cache backed by a text file.
    """

    def __init__(self, path):
        """
        Initialize the cache and load existing entries.

        Args:
            path: Cache file path; created on first store
        """
        self.path = path
        self._entries = {}
        self._lock = threading.Lock()
        self.hits = 0
        self._load()

    def _load(self):
        if not os.path.exists(self.path):
            return
        with open(self.path, 'r', encoding='utf-8') as f:
            for line_number, line in enumerate(f, 1):
                line = line.rstrip("\n")
                if not line:
                    continue
                try:
                    key_text, factor_text = line.split("\t")
                    n = int(key_text)
                    factors = parse_factorization(factor_text)
                    product = 1
                    for p, e in factors.items():
                        product *= p ** e
                    if n < 1 or product != n or not all(is_prime(p) for p in factors):
                        raise ValueError("factorization does not match key")
                except ValueError as e:
                    logger.warning(f"Factor Cache: skipping corrupt line {line_number} of {self.path}: {e}")
                    continue
                self._entries[n] = factors
        logger.debug(f"Factor Cache: loaded {len(self._entries)} entries from {self.path}")

    def __len__(self):
        return len(self._entries)

    def __contains__(self, n):
        return abs(n) in self._entries

    def get(self, n):
        """
        Cached factorization of |n|, or None.
        """
        with self._lock:
            factors = self._entries.get(abs(n))
            if factors is None:
                return None
            self.hits += 1
        return FactoredInt(value=abs(n), sign=1, factors=dict(factors), cofactor=1)

    def put(self, n, factored):
        """
        Store a complete factorization of |n|.
        """
        if not factored.is_complete:
            return
        key = abs(n)
        with self._lock:
            if key in self._entries:
                return
            self._entries[key] = dict(factored.factors)
            directory = os.path.dirname(self.path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(self.path, 'a', encoding='utf-8') as f:
                f.write(f"{key}\t{factored.render()}\n")
