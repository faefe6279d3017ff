"""`verify <kind>`: run one verification feature and print its report."""

from __future__ import annotations

import argparse
from typing import Any

from command_managers.command import EXIT_FAILURE, EXIT_OK, Command, add_rank_arguments, build_config
from features.feature_registry import registry as feature_registry
from modules.exceptions import ConfigError


class VerifyCommand(Command):
    name = "verify"
    help = "check an isomorphism, closure, product or axiom property"

    def __init__(self, features: Any = None) -> None:
        self.features = features or feature_registry

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("kind", choices=self.features.list())
        add_rank_arguments(parser)
        parser.add_argument("--depth", type=int, default=None, help="truncation depth for B(infinity) checks")
        parser.add_argument("--mu", metavar="L1,...,Ln", help="first weight of a product check")
        parser.add_argument("--tau", metavar="L1,...,Ln", help="second weight of a product check")
        parser.add_argument(
            "--networkx",
            action="store_true",
            help="cross-check iso-bla and iso-binf with the networkx VF2 matcher",
        )

    def run(self, app: Any, args: argparse.Namespace) -> int:
        cfg = build_config(args)
        feature = self.features.get(args.kind)
        if feature is None:
            raise ConfigError(f"unknown verification kind {args.kind!r}")
        report = feature.run(cfg)
        app.save_manager.save_report(report.summary(), report.to_dict())
        return EXIT_OK if report.ok else EXIT_FAILURE


__all__ = ["VerifyCommand"]
