"""`generate`: close a model's canonical seed and print the crystal graph."""

from __future__ import annotations

import argparse
from typing import Any

from command_managers.command import EXIT_OK, Command, add_rank_arguments, build_config
from modules.config_manager import FORMATS, MODELS
from modules.crystal_graph import bfs_generate
from modules.model_registry import registry as model_registry


class GenerateCommand(Command):
    name = "generate"
    help = "generate a crystal graph from its maximal vector"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--model", required=True, choices=MODELS)
        add_rank_arguments(parser)
        parser.add_argument("--depth", type=int, default=None, help="f-step limit; required for *-binf models")
        parser.add_argument("--format", default="dot", choices=FORMATS)

    def run(self, app: Any, args: argparse.Namespace) -> int:
        cfg = build_config(args)
        seed = model_registry.require(cfg.model).seed(cfg)
        graph = bfs_generate(seed, cfg.depth, cfg.threads)
        app.save_manager.save_graph(graph, cfg.fmt)
        return EXIT_OK


__all__ = ["GenerateCommand"]
