from .arguments import get_args, parse_args
from .exceptions import BracketError, NumericalError, ParameterError, PoleError, VertexworkError
from .initialize import initialize
