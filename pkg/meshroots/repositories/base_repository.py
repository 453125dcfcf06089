from typing import Dict, Generic, Hashable, Optional, TypeVar

KeyType = TypeVar("KeyType", bound=Hashable)
ValueType = TypeVar("ValueType")


class BaseRepository(Generic[KeyType, ValueType]):
    """
    Base repository with generic in-memory storage.

    Responsibilities:
    - Only storage operations (get, add)
    - Stores immutable domain values
    - NO computation (Service layer responsibility)
    """

    def __init__(self):
        self._items: Dict[KeyType, ValueType] = {}

    def add(self, key: KeyType, value: ValueType) -> ValueType:
        """
        Store a value.

        Args:
            key: Lookup key
            value: Domain value

        Returns:
            ValueType: The stored value
        """
        self._items[key] = value
        return value

    def get(self, key: KeyType) -> Optional[ValueType]:
        """
        Get a value by key.

        Args:
            key: Lookup key

        Returns:
            ValueType | None: Stored value or None if not found
        """
        return self._items.get(key)
