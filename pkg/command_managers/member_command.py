"""`member`: decide membership of one element in a model."""

from __future__ import annotations

import argparse
from typing import Any

from command_managers.command import (
    EXIT_FAILURE,
    EXIT_OK,
    Command,
    add_input_argument,
    add_rank_arguments,
    build_config,
    read_json,
)
from modules.config_manager import MODELS
from modules.model_registry import registry as model_registry
from modules.monomial_core import parse_canonical


class MemberCommand(Command):
    name = "member"
    help = "check whether an element belongs to a model"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--model", required=True, choices=MODELS)
        add_rank_arguments(parser)
        parser.add_argument(
            "--element",
            default=None,
            help="canonical monomial such as 'Y1(-1)^1*Y2(-2)^1'; otherwise JSON is read from --input",
        )
        add_input_argument(parser)
        # membership needs no truncation; a zero depth satisfies the *-binf config check
        parser.set_defaults(depth=0)

    def decode(self, app: Any, args: argparse.Namespace, cfg: Any) -> Any:
        realization = model_registry.require(cfg.model)
        if args.element is not None and cfg.model.startswith("monomial-"):
            return parse_canonical(args.element, cfg.n, extended=cfg.infinite)
        return realization.decode(read_json(app, args.input), cfg)

    def run(self, app: Any, args: argparse.Namespace) -> int:
        cfg = build_config(args)
        element = self.decode(app, args, cfg)
        violation = model_registry.require(cfg.model).check(element, cfg)
        if violation is None:
            app.save_manager.save_element({"member": True})
            return EXIT_OK
        app.save_manager.save_element(
            {"member": False, "condition": violation.condition, "message": str(violation)}
        )
        return EXIT_FAILURE


__all__ = ["MemberCommand"]
