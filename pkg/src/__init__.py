"""
Grassmannian Integral Kernel
"""

__version__ = "1.0.0"
