from .words import *
from .burau import *
from .subsets import *
from .winding import *
from .groups import *
from .conjugation import *
