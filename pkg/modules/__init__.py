from .error_dispatcher import ErrorDispatcher, ErrorLevel, ErrorEvent, get_dispatcher
from .exceptions import CrystalError
from .cartan import Weight
from .crystal_graph import ZERO, CrystalElement, CrystalGraph, bfs_generate
from .config_manager import RunConfig
from .model_registry import ModelRegistry
from .save_manager import SaveManager

__all__ = [
	"ErrorDispatcher",
	"ErrorLevel",
	"ErrorEvent",
	"get_dispatcher",
	"CrystalError",
	"Weight",
	"ZERO",
	"CrystalElement",
	"CrystalGraph",
	"bfs_generate",
	"RunConfig",
	"ModelRegistry",
	"SaveManager",
]
