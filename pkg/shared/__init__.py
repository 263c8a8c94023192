"""Shared constants, models and utilities of the TTP toolkit"""
__version__ = "1.0.0"
