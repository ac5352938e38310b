__author__ = "vtrigger developers"
__version__ = "0.1.0"
