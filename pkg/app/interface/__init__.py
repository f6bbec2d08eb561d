from app.interface.interface import Interface, build_parser
from app.interface.payload import Payload

__all__ = [
    "Interface",
    "Payload",
    "build_parser",
]
