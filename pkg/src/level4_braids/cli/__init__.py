from .report import *
from .verify import *
from .main import COMMANDS, build_parser, parse_word, run
