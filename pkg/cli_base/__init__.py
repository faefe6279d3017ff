from .app_shell import CrystalCliApp

__all__ = ["CrystalCliApp"]
