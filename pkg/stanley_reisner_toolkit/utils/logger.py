import datetime
import logging
import sys

import termcolor


COLORS = {
    "WARNING": "yellow",
    "INFO": "white",
    "DEBUG": "blue",
    "CRITICAL": "red",
    "ERROR": "red",
}


class ColoredFormatter(logging.Formatter):
    def __init__(self, fmt, use_color=True):
        logging.Formatter.__init__(self, fmt)
        self.use_color = use_color

    def format(self, record):
        levelname = record.levelname
        if self.use_color and levelname in COLORS:

            def colored(text):
                return termcolor.colored(
                    text,
                    color=COLORS[levelname],
                    attrs=["bold"],
                )

            record.levelname2 = colored(f"{record.levelname:<7}")
            record.message2 = colored(record.getMessage())
            record.asctime2 = termcolor.colored(
                str(datetime.datetime.fromtimestamp(record.created)), color="green"
            )
            record.module2 = termcolor.colored(record.module, color="cyan")
            record.funcName2 = termcolor.colored(record.funcName, color="cyan")
            record.lineno2 = termcolor.colored(str(record.lineno), color="cyan")
        else:
            record.levelname2 = f"{record.levelname:<7}"
            record.message2 = record.getMessage()
            record.asctime2 = str(datetime.datetime.fromtimestamp(record.created))
            record.module2 = record.module
            record.funcName2 = record.funcName
            record.lineno2 = record.lineno
        return logging.Formatter.format(self, record)


class ColoredLogger(logging.Logger):
    FORMAT = (
        "[%(levelname2)s] %(module2)s:%(funcName2)s:%(lineno2)s - %(message2)s"
    )


def setup_logger(level="info", stream=None):
    """Attach a single stderr handler to the package logger.

    Colour is only used when the stream is a terminal, so redirected
    diagnostics stay plain text.
    """
    stream = stream if stream is not None else sys.stderr
    numeric_level = getattr(logging, str(level).upper())
    logger.setLevel(numeric_level)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(stream)
    handler.setLevel(numeric_level)
    use_color = hasattr(stream, "isatty") and stream.isatty()
    handler.setFormatter(ColoredFormatter(ColoredLogger.FORMAT, use_color=use_color))
    logger.addHandler(handler)
    return logger


logger = logging.getLogger("stanley_reisner_toolkit")
logger.__class__ = ColoredLogger
