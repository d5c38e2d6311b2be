from .characters import *
from .modules import *
from .classes import *
from .constituents import *
from .isotypic import *
from .multiplicity import *
from .submodules import *
from .branching import *
from .torsion import *
from .abelianization import *
