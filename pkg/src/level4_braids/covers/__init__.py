from .labels import *
from .psi import *
from .certificate import *
