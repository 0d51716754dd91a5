from .par_utils import ParUtils
