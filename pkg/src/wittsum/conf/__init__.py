"""
Settings Management
"""

from .constants import *
from .globals import *
