import threading
from collections import deque
from typing import Generic, Iterable, List, Optional, TypeVar

T = TypeVar("T")


class ThreadSafeDeque(Generic[T]):
    def __init__(self, maxlen: Optional[int] = None):
        self.deque = deque(maxlen=maxlen)
        self.lock = threading.Lock()

    def append(self, item: T) -> None:
        with self.lock:
            self.deque.append(item)

    def extend(self, items: Iterable[T]) -> None:
        with self.lock:
            self.deque.extend(items)

    def popleft(self) -> Optional[T]:
        with self.lock:
            if self.deque:
                return self.deque.popleft()
            return None

    def drain(self) -> List[T]:
        with self.lock:
            items = list(self.deque)
            self.deque.clear()
            return items

    def __len__(self) -> int:
        with self.lock:
            return len(self.deque)

    def is_empty(self) -> bool:
        with self.lock:
            return len(self.deque) == 0
