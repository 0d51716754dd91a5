from .report_writer import FORMATS, DEFAULT_FORMAT, emit_report, write_report
