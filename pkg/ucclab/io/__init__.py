"""Readers and writers for families, graphs, bijections and suitable indices."""

__author__ = "ucclab developers"
__copyright__ = "Copyright 2026, ucclab developers"
__license__ = "MIT"
__status__ = "Development"
