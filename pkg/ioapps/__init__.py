__author__ = "Henry R. Winterbottom"
__version__ = "0.1.0"
