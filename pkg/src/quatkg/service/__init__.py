from . import runners, schemas

__all__ = ["runners", "schemas"]
