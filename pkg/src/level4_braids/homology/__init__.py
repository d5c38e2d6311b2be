from .basis import *
from .vectors import *
from .expressions import *
from .ring import *
from .reduce import *
from .action import *
from .boundary import *
from .functorial import *
