from .main import main, build_parser
