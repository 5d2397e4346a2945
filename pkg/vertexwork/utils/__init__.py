from .common import as_complex_tensor, format_significant, get_current_device, round_significant, set_seed
from .logging import get_logger, init_logger, write_logger_to_file
from .roots import bisect, bisect_predicate, scan_roots, sign_change_brackets
