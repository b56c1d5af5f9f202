from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def pmap(fn: Callable[[T], R], items: Iterable[T], threads: int = 1) -> List[R]:
    """Map `fn` over `items`, preserving input order. Serial unless `threads` > 1; `fn` must be pure.

    Workers are threads, so `fn` may be a closure. The mapped work here is
    pure Python and holds the GIL, which means extra threads change the
    scheduling but give little speedup.
    """
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
