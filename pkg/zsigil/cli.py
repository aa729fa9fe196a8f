"""
Z-Sigil CLI
~~~~~~~~~~~

Command-line interface for Z-Sigil.

Exit codes: 0 success, 2 bad parameters or unparsable input,
3 key or chain generation failure, 4 capacity exceeded,
5 integrity failure on decryption.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable
from contextlib import ExitStack
from typing import TYPE_CHECKING, TextIO

if TYPE_CHECKING:
    from zsigil.core.sigil import Sigil

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GENERATION = 3
EXIT_CAPACITY = 4
EXIT_INTEGRITY = 5


def _build_parser() -> argparse.ArgumentParser:
    from zsigil import __version__

    parser = argparse.ArgumentParser(
        prog="zsigil",
        description="zsigil: experimental Z-Sigil public-key scheme and attack lab",
    )
    parser.add_argument(
        "--version",
        "-V",
        action="version",
        version=f"zsigil {__version__}",
        help="Show version and exit",
    )
    parser.add_argument(
        "--verbose",
        "-v",
        action="store_true",
        help="Log debug output to stderr",
    )
    parser.add_argument(
        "--config",
        type=str,
        default=None,
        help="Path to sigil_config.yaml",
    )
    subparsers = parser.add_subparsers(dest="command")

    # keygen command
    keygen_parser = subparsers.add_parser("keygen", help="Generate a key pair")
    keygen_parser.add_argument(
        "--dim", type=int, default=None, help="Real torus dimension r (even, default 6)"
    )
    keygen_parser.add_argument(
        "--max-blocks",
        type=int,
        default=None,
        help="Largest message in UTF-16 units (default 65536)",
    )
    keygen_parser.add_argument("--seed", type=str, default=None, help="64 hex chars")
    keygen_parser.add_argument(
        "--out", type=str, required=True, help="Basename for .pub and .key files"
    )

    # encrypt command
    encrypt_parser = subparsers.add_parser("encrypt", help="Encrypt a UTF-8 text file")
    encrypt_parser.add_argument(
        "--pub", type=str, required=True, help="Public key file"
    )
    encrypt_parser.add_argument("--in", dest="input", type=str, required=True)
    encrypt_parser.add_argument("--out", type=str, required=True)
    encrypt_parser.add_argument("--seed", type=str, default=None, help="64 hex chars")

    # decrypt command
    decrypt_parser = subparsers.add_parser("decrypt", help="Decrypt a ciphertext file")
    decrypt_parser.add_argument(
        "--key", type=str, required=True, help="Private key file"
    )
    decrypt_parser.add_argument("--in", dest="input", type=str, required=True)
    decrypt_parser.add_argument("--out", type=str, required=True)

    # attack command
    attack_parser = subparsers.add_parser("attack", help="Run an attack experiment")
    attack_parser.add_argument(
        "--mode",
        choices=["grover", "exhaustive", "ratio", "depth"],
        required=True,
    )
    attack_parser.add_argument(
        "--bits", type=int, default=1024, help="Key bit length n"
    )
    attack_parser.add_argument(
        "--alpha", type=float, default=1.0, help="Density exponent"
    )
    attack_parser.add_argument("--levels", type=int, default=2, help="Grid levels q")
    attack_parser.add_argument(
        "--dim",
        type=int,
        default=None,
        help="Torus dimension r, even; also the grid components for exhaustive",
    )
    attack_parser.add_argument("--trials", type=int, default=None)
    attack_parser.add_argument("--blocks", type=int, default=64)
    attack_parser.add_argument("--seed", type=str, default=None, help="64 hex chars")
    attack_parser.add_argument("--out", type=str, default=None, help="CSV output file")

    # version command
    subparsers.add_parser("version", help="Show version")

    return parser


def main(argv: list[str] | None = None) -> int:
    """Main CLI entry point; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    if args.command == "version":
        from zsigil import __version__

        print(f"zsigil {__version__}")
        return EXIT_OK

    handlers = {
        "keygen": _run_keygen,
        "encrypt": _run_encrypt,
        "decrypt": _run_decrypt,
        "attack": _run_attack,
    }
    return _guarded(handlers[args.command], args)


def _guarded(
    handler: Callable[[argparse.Namespace], None], args: argparse.Namespace
) -> int:
    """Run a command and map failures to exit codes."""
    from zsigil.exceptions import (
        CapacityError,
        GenerationError,
        IntegrityError,
        SigilError,
    )

    try:
        handler(args)
    except CapacityError as exc:
        print(exc, file=sys.stderr)
        return EXIT_CAPACITY
    except IntegrityError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INTEGRITY
    except GenerationError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_GENERATION
    except (SigilError, ValueError, OSError) as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def _parse_seed(text: str | None) -> bytes | None:
    if text is None:
        return None
    seed = bytes.fromhex(text)
    if len(seed) != 32:
        raise ValueError(f"--seed must be 64 hex characters, got {len(text)}")
    return seed


def _make_sigil(config_path: str | None, dim: int | None = None) -> Sigil:
    """Create a Sigil from config or defaults, optionally overriding r."""
    from zsigil.config.loader import load_config, load_config_from_dict
    from zsigil.core.sigil import Sigil

    config = load_config(config_path) if config_path else load_config_from_dict({})
    if dim is not None:
        data = config.model_dump()
        data["manifold"]["dimension"] = dim
        config = load_config_from_dict(data)
    return Sigil(config=config)


def _run_keygen(args: argparse.Namespace) -> None:
    """Run the keygen command."""
    from zsigil.formats.keyfile import write_key_files

    seed = _parse_seed(args.seed)
    if args.max_blocks is not None and args.max_blocks < 1:
        raise ValueError(f"--max-blocks must be >= 1, got {args.max_blocks}")
    sigil = _make_sigil(args.config, args.dim)
    pair = sigil.keygen(args.max_blocks, seed=seed)
    pub_path, key_path = write_key_files(pair, args.out)
    print(f"Wrote {pub_path} and {key_path}", file=sys.stderr)


def _run_encrypt(args: argparse.Namespace) -> None:
    """Run the encrypt command."""
    from zsigil.formats.ciphertext import write_ciphertext
    from zsigil.formats.keyfile import read_public_key

    seed = _parse_seed(args.seed)
    pub = read_public_key(args.pub)
    with open(args.input, "rb") as f:
        text = f.read().decode("utf-8")
    sigil = _make_sigil(args.config, pub.r)
    ct = sigil.encrypt(pub, text, message_seed=seed)
    write_ciphertext(args.out, ct)


def _run_decrypt(args: argparse.Namespace) -> None:
    """Run the decrypt command."""
    from zsigil.formats.ciphertext import read_ciphertext
    from zsigil.formats.keyfile import read_private_key

    sigil = _make_sigil(args.config)
    pair = read_private_key(args.key, sigil.config)
    ct = read_ciphertext(args.input)
    text = sigil.decrypt(pair, ct)
    with open(args.out, "wb") as f:
        f.write(text.encode("utf-8"))


def _run_attack(args: argparse.Namespace) -> None:
    """Run the attack command; CSV to stdout or --out, summary to stderr."""
    from zsigil.observability.exporters import CsvExporter, SummaryExporter

    seed_bytes = _parse_seed(args.seed)
    seed = int.from_bytes(seed_bytes, "little") if seed_bytes is not None else None
    mode = args.mode
    sigil = _make_sigil(args.config, args.dim if mode in ("ratio", "depth") else None)

    with ExitStack() as stack:
        stream: TextIO = sys.stdout
        if args.out:
            stream = stack.enter_context(
                open(args.out, "w", encoding="utf-8", newline="")
            )
        sigil.add_exporter(CsvExporter(stream))
        sigil.add_exporter(SummaryExporter(sys.stderr))

        if mode == "grover":
            sigil.grover_report(args.bits, args.alpha)
        elif mode == "exhaustive":
            sigil.exhaustive_report(
                args.levels,
                args.dim if args.dim is not None else 8,
                args.trials if args.trials is not None else 1000,
                seed=seed,
            )
        elif mode == "ratio":
            sigil.ratio_report(
                args.blocks, args.trials if args.trials is not None else 100, seed=seed
            )
        else:
            sigil.depth_report(
                args.blocks, args.trials if args.trials is not None else 10, seed=seed
            )


if __name__ == "__main__":
    sys.exit(main())
