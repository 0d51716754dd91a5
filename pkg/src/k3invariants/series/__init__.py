from .truncated_series import TruncatedSeries
from .combinatorics import binomial, h_proj, series_one_over_products, series_ratio
