from .commands import COMMANDS, cmd_bands, cmd_coupling, cmd_smatrix, cmd_star, cmd_sweep, main
from .config import RunConfig
