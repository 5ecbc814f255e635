"""Command-line front end: ``signet keygen|hash|sign|verify``.

Exit status: 0 success or accepted signature, 1 rejected signature,
2 usage or I/O error, 3 malformed key or signature file.
"""

import argparse
import os
import sys

from . import bigint, rsa, sha1
from .primality import DEFAULT_ROUNDS, make_rng

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_USAGE = 2
EXIT_MALFORMED = 3


class CliError(Exception):
    def __init__(self, message, status):
        super().__init__(message)
        self.status = status


def _read_input(path):
    try:
        if path == "-":
            return sys.stdin.buffer.read()
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_USAGE) from None


def _read_text(path):
    data = _read_input(path)
    try:
        return data.decode("ascii")
    except UnicodeDecodeError:
        raise CliError(f"{path}: not an ASCII text file", EXIT_MALFORMED) from None


def _write(path, text, private=False):
    mode = 0o600 if private else 0o644
    try:
        fd = os.open(path, os.O_WRONLY | os.O_CREAT | os.O_TRUNC, mode)
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror}", EXIT_USAGE) from None


def _load(loader, path):
    try:
        return loader(_read_text(path))
    except rsa.KeyFormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_MALFORMED) from None


def run_keygen(args):
    if args.bits < rsa.MIN_MODULUS_BITS:
        raise CliError(
            f"--bits must be at least {rsa.MIN_MODULUS_BITS} (got {args.bits})", EXIT_USAGE)
    rng = make_rng(args.seed)
    pub, priv = rsa.keygen(args.bits, rng, random_e=args.random_e, rounds=args.mr_rounds)
    _write(args.out + ".pub", rsa.dump_public_key(pub))
    _write(args.out + ".key", rsa.dump_private_key(priv), private=True)
    print(f"wrote {args.out}.pub and {args.out}.key ({bigint.bit_length(pub.n)}-bit modulus)")
    return EXIT_OK


def run_hash(args):
    print(sha1.digest_hex(_read_input(args.input)))
    return EXIT_OK


def run_sign(args):
    key = _load(rsa.load_private_key, args.key)
    message = _read_input(args.input)
    try:
        sig = rsa.sign(key, message)
    except rsa.ModulusTooSmall as exc:
        raise CliError(f"{args.key}: {exc}", EXIT_MALFORMED) from None
    _write(args.out, rsa.dump_signature(sig))
    return EXIT_OK


def run_verify(args):
    key = _load(rsa.load_public_key, args.key)
    sig = _load(rsa.load_signature, args.sig)
    message = _read_input(args.input)
    try:
        ok = rsa.verify(key, message, sig)
    except rsa.SignatureOutOfRange as exc:
        raise CliError(f"{args.sig}: {exc}", EXIT_MALFORMED) from None
    print("OK" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_REJECT


def build_parser():
    parser = argparse.ArgumentParser(prog="signet", description="RSA/SHA-1 signature toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate a keypair")
    p.add_argument("--bits", type=int, required=True, help="modulus size in bits")
    p.add_argument("--seed", type=lambda s: int(s, 0), default=None,
                   help="seed for reproducible keys (default: OS entropy)")
    p.add_argument("--out", required=True, help="writes PREFIX.pub and PREFIX.key")
    p.add_argument("--mr-rounds", type=int, default=DEFAULT_ROUNDS)
    p.add_argument("--random-e", action="store_true",
                   help="pick a random public exponent instead of 65537")
    p.set_defaults(func=run_keygen)

    p = sub.add_parser("hash", help="print the SHA-1 digest of a file")
    p.add_argument("input", help="file path, or - for standard input")
    p.set_defaults(func=run_hash)

    p = sub.add_parser("sign", help="sign a file")
    p.add_argument("--key", required=True, help="private key file")
    p.add_argument("--out", required=True, help="signature output file")
    p.add_argument("input")
    p.set_defaults(func=run_sign)

    p = sub.add_parser("verify", help="verify a signature")
    p.add_argument("--key", required=True, help="public key file")
    p.add_argument("--sig", required=True, help="signature file")
    p.add_argument("input")
    p.set_defaults(func=run_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "mr_rounds", 1) < 1:
        print("signet: --mr-rounds must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except CliError as exc:
        print(f"signet: {exc}", file=sys.stderr)
        return exc.status


if __name__ == "__main__":
    sys.exit(main())
