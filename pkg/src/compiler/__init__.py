"""
Compiler Module
"""

from .class_compiler import ClassCompiler, expand_class, roots_of
from .expression_parser import parse_expression, render_class

__all__ = ["ClassCompiler", "expand_class", "parse_expression", "render_class", "roots_of"]
