from . import agree, export, judge, report, reward, score, validate

# Registration order is the order shown in --help.
COMMANDS = [validate, score, judge, reward, agree, export, report]

__all__ = ["COMMANDS"]
