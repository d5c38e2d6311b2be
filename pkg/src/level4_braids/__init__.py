from .errors import *
from .config import *
from .braids import *
from .homology import *
from .covers import *
from .reps import *
from .oracle import *
from .formulas import *
