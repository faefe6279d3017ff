"""`convert`: carry one element between realizations of the same crystal."""

from __future__ import annotations

import argparse
from typing import Any

from command_managers.command import (
    EXIT_OK,
    Command,
    add_input_argument,
    add_rank_arguments,
    build_config,
    read_json,
)
from modules.config_manager import REALIZATIONS
from modules.model_registry import convert
from modules.model_registry import registry as model_registry


class ConvertCommand(Command):
    name = "convert"
    help = "convert an element between monomial, X-form and tableau realizations"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--from", dest="source", required=True, choices=REALIZATIONS)
        parser.add_argument("--to", dest="target", required=True, choices=REALIZATIONS)
        add_rank_arguments(parser)
        add_input_argument(parser)

    def run(self, app: Any, args: argparse.Namespace) -> int:
        cfg = build_config(args)
        source = model_registry.require(args.source)
        element = source.decode(read_json(app, args.input), cfg)
        result = convert(element, args.source, args.target, cfg)
        app.save_manager.save_element(model_registry.require(args.target).encode(result))
        return EXIT_OK


__all__ = ["ConvertCommand"]
