from .hull import *
from .polygon import *
from .polytope import *
