from multiprocessing.pool import ThreadPool
from typing import Callable, List, Optional, Sequence, TypeVar

T = TypeVar('T')
R = TypeVar('R')


class ParUtils:

    @staticmethod
    def par_map(func: Callable[[T], R], items: Sequence[T], processes: Optional[int] = None) -> List[R]:
        """
        Parallel map function. Results keep the order of the items.
        Batches of fewer than two items are mapped in the calling thread.
        """
        if len(items) < 2:
            return [func(item) for item in items]
        with ThreadPool(processes) as p:
            return p.map(func, items)
