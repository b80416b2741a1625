from .ffield import *
from .laurent import *
from .wittring import *
from .cyclotomic import *
from .upoly import *
