from .closed_forms import *
from .betti import *
from .albanese import *
