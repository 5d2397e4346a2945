import contextlib
import csv
import json
import sys

from vertexwork.utils import format_significant

DIAGRAM_HEADER = ("t", "e_lo", "e_hi", "edge_lo", "edge_hi", "kind")


@contextlib.contextmanager
def open_output(path=None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as f:
            yield f


def _format_cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_significant(value)
    return str(value)


def write_csv(stream, header, rows):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_format_cell(value) for value in row])


def write_table(cfg, header, rows, summary=None):
    """CSV rows at the configured significant digits, or JSON records at full precision.

    ``summary`` holds values that describe the whole table; JSON carries it next to the rows and CSV leaves it to
    the log.
    """
    with open_output(cfg.out) as stream:
        if cfg.format == "csv":
            write_csv(stream, header, rows)
        else:
            records = [dict(zip(header, row)) for row in rows]
            payload = dict(command=cfg.command, params=cfg.params(), rows=records)
            if summary is not None:
                payload["summary"] = summary
            stream.write(json.dumps(payload, indent=2))
            stream.write("\n")


def write_diagram(cfg, diagram):
    with open_output(cfg.out) as stream:
        if cfg.format == "csv":
            write_csv(stream, DIAGRAM_HEADER, diagram.to_rows())
        else:
            stream.write(diagram.to_json())
            stream.write("\n")
