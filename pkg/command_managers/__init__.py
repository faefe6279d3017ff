from .command import Command
from .generate_command import GenerateCommand
from .verify_command import VerifyCommand
from .convert_command import ConvertCommand
from .member_command import MemberCommand
from .command_registry import registry as registry

__all__ = [
	"Command",
	"GenerateCommand",
	"VerifyCommand",
	"ConvertCommand",
	"MemberCommand",
	"registry",
]
