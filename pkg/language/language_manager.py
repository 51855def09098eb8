#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Language Manager

This module provides functionality for localizing human-readable output.
Machine formats (JSON, TSV) are never localized.
"""

import importlib
import logging
import os

logger = logging.getLogger(__name__)

DEFAULT_LANGUAGE = "EN"


class LanguageManager:
    """
    Class for managing message languages and translations.
    """

    def __init__(self, language=DEFAULT_LANGUAGE):
        """
        Initialize the language manager.

        Args:
            language: Language code to load, falling back to English
        """
        self.current_language = DEFAULT_LANGUAGE
        self.language_dict = {}
        self.available_languages = []
        self.language_names = {}

        self._load_available_languages()
        self.load_language(language)

    def _load_available_languages(self):
        """
        Load list of available language files.
        """
        language_dir = os.path.dirname(os.path.abspath(__file__))

        for file_name in sorted(os.listdir(language_dir)):
            if not file_name.endswith('.py') or file_name.startswith('__') or file_name == "language_manager.py":
                continue
            language_code = os.path.splitext(file_name)[0]
            self.available_languages.append(language_code)
            try:
                language_module = importlib.import_module(f"language.{language_code}")
                self.language_names[language_code] = getattr(language_module, 'LANGUAGE_NAME', language_code)
            except ImportError:
                self.language_names[language_code] = language_code

    def load_language(self, language_code):
        """
        Load a language file.

        Args:
            language_code: Language code to load

        Returns:
            True if successful, False otherwise
        """
        try:
            language_module = importlib.import_module(f"language.{language_code}")
        except ImportError as e:
            logger.warning(f"Language Manager: cannot load language {language_code!r}: {e}")
            if language_code != DEFAULT_LANGUAGE:
                self.load_language(DEFAULT_LANGUAGE)
            return False

        if not hasattr(language_module, 'LANGUAGE_DICT'):
            logger.warning(f"Language Manager: language.{language_code} does not contain LANGUAGE_DICT")
            if language_code != DEFAULT_LANGUAGE:
                self.load_language(DEFAULT_LANGUAGE)
            return False

        self.language_dict = language_module.LANGUAGE_DICT
        self.current_language = language_code
        return True

    def get_text(self, key, default=None):
        """
        Get translated text for a key.

        Args:
            key: Text key, dotted for nested entries (e.g. "verdict.Monogenic")
            default: Default text if key not found

        Returns:
            Translated text
        """
        current = self.language_dict
        for part in key.split("."):
            if isinstance(current, dict) and part in current:
                current = current[part]
            else:
                return default if default is not None else key
        return current

    def get_current_language(self):
        return self.current_language

    def get_language_name(self, language_code=None):
        if language_code is None:
            language_code = self.current_language
        return self.language_names.get(language_code, language_code)

    def get_available_languages(self):
        return self.available_languages


# Create global instance
_instance = None

def get_instance():
    """
    Get singleton instance of LanguageManager.

    Returns:
        LanguageManager instance
    """
    global _instance
    if _instance is None:
        _instance = LanguageManager()
    return _instance

def get_text(key, default=None):
    """
    Convenience function to get translated text.
    """
    return get_instance().get_text(key, default)

def change_language(language_code):
    """
    Convenience function to change language for this process.

    Returns:
        True if successful, False otherwise
    """
    return get_instance().load_language(language_code)
