"""TTP engine - objective evaluation, solver portfolio and instance features"""
__version__ = "1.0.0"
