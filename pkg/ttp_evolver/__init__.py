"""
TTP Instance Evolver - evolves TTP instances on which a solver portfolio shows a prescribed ranking
"""
__version__ = "1.0.0"
