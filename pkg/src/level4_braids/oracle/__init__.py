from .presentation import *
from .schreier import *
from .abelian import *
from .certify import *
