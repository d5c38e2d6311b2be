from .io import *
from .linalg import *
from .misc import *
