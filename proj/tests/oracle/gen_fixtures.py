#!/usr/bin/env python3
# Copyright 2026 The gasledger Authors.
# SPDX-License-Identifier: Apache-2.0
"""Generates the committed test fixtures from independent reference code.

Hashing comes from pycryptodome (keccak256) and hashlib (sha2-256), ABI
encoding from eth-abi, CIDs from the multiformats package. The Swarm BMT and
chunk-tree roots are computed here with a recursive top-down construction,
independent of the bottom-up C++ builder.

Usage: python3 gen_fixtures.py <output-dir>
"""

import hashlib
import json
import sys
from pathlib import Path

from Crypto.Hash import keccak
from eth_abi import encode as abi_encode
from multiformats import CID, multihash


def keccak256(data: bytes) -> bytes:
    h = keccak.new(digest_bits=256)
    h.update(data)
    return h.digest()


def pattern(kind: str, n: int) -> bytes:
    """Deterministic byte patterns, mirrored by tests/fixture_data.hpp."""
    if kind == "zero":
        return bytes(n)
    if kind == "mod251":
        return bytes((i * 31 + 7) % 251 for i in range(n))
    if kind == "ascii":
        return bytes(0x21 + (i * 7) % 94 for i in range(n))
    raise ValueError(kind)


# ---------------------------------------------------------------- keccak

def keccak_vectors():
    out = []
    for kind, n in [("zero", 0), ("ascii", 3), ("mod251", 135), ("mod251", 136),
                    ("mod251", 137), ("mod251", 200), ("ascii", 1000)]:
        data = pattern(kind, n)
        out.append({"pattern": kind, "len": n, "digest": keccak256(data).hex()})
    out.append({"text": "abc", "digest": keccak256(b"abc").hex()})
    out.append({"text": "", "digest": keccak256(b"").hex()})
    return out


# ---------------------------------------------------------------- ABI

SIGNATURES = [
    "transfer(address,uint256)",
    "store(string)",
    "storeData(string)",
    "logData(string)",
    "reset()",
    "data()",
    "balanceOf(address)",
    "anchor(bytes)",
]


def abi_vectors():
    selectors = [{"signature": s, "selector": keccak256(s.encode())[:4].hex()} for s in SIGNATURES]
    addr = "0x" + "11" * 19 + "22"
    cases = [
        (["bool"], [True], [{"bool": True}]),
        (["bool"], [False], [{"bool": False}]),
        (["string"], ["abc"], [{"string": "abc"}]),
        (["string"], [""], [{"string": ""}]),
        (["string"], ["x" * 32], [{"string": "x" * 32}]),
        (["string"], ["y" * 33], [{"string": "y" * 33}]),
        (["uint256"], [0], [{"uint256": "0"}]),
        (["uint256"], [2**256 - 1], [{"uint256": str(2**256 - 1)}]),
        (["uint256", "string"], [7, "hello world"], [{"uint256": "7"}, {"string": "hello world"}]),
        (["address", "bytes"], [addr, bytes([0, 1, 2, 0xff])],
         [{"address": addr[2:]}, {"bytes": "000102ff"}]),
        (["string", "string", "bool"], ["a", "b" * 40, True],
         [{"string": "a"}, {"string": "b" * 40}, {"bool": True}]),
        (["bytes", "uint256", "bytes"], [b"", 12288, bytes(range(70))],
         [{"bytes": ""}, {"uint256": "12288"}, {"bytes": bytes(range(70)).hex()}]),
    ]
    encodings = [{"types": t, "values": v, "encoded": abi_encode(t, raw).hex()} for t, raw, v in cases]
    calls = []
    for sig, types, raw, v in [
        ("store(string)", ["string"], ["abc"], [{"string": "abc"}]),
        ("transfer(address,uint256)", ["address", "uint256"], [addr, 1000],
         [{"address": addr[2:]}, {"uint256": "1000"}]),
        ("reset()", [], [], []),
    ]:
        sel = keccak256(sig.encode())[:4]
        calls.append({"signature": sig, "values": v, "encoded": (sel + abi_encode(types, raw)).hex()})
    return {"selectors": selectors, "encodings": encodings, "calls": calls}


# ---------------------------------------------------------------- Swarm BMT

CHUNK = 4096
SEGMENTS = 128


def bmt_root(chunk: bytes) -> bytes:
    def node(lo: int, hi: int) -> bytes:
        # hash of segments [lo, hi)
        if hi - lo == 1:
            return padded[lo * 32:(lo + 1) * 32]
        mid = (lo + hi) // 2
        return keccak256(node(lo, mid) + node(mid, hi))

    padded = chunk + bytes(CHUNK - len(chunk))
    return node(0, SEGMENTS)


def bmt_address(chunk: bytes, span: int) -> bytes:
    assert len(chunk) <= CHUNK
    return keccak256(span.to_bytes(8, "little") + bmt_root(chunk))


def swarm_tree(data: bytes, fanout: int = 128):
    """Returns (root, chunk_count, node_count, depth) by top-down recursion."""
    if len(data) <= CHUNK:
        return bmt_address(data, len(data)), 1, 1, 1
    cap = CHUNK
    while cap * fanout < len(data):
        cap *= fanout
    refs = b""
    chunks = nodes = depth = 0
    for off in range(0, len(data), cap):
        r, c, n, d = swarm_tree(data[off:off + cap], fanout)
        refs += r
        chunks += c
        nodes += n
        depth = max(depth, d)
    return bmt_address(refs, len(data)), chunks, nodes + 1, depth + 1


def bmt_vectors():
    out = []
    for kind, n, span in [("zero", 0, 0), ("ascii", 1, 1), ("zero", 4096, 4096),
                          ("mod251", 4096, 4096), ("ascii", 100, 100), ("mod251", 33, 33),
                          ("ascii", 64, 1_000_000)]:
        out.append({"pattern": kind, "len": n, "span": span,
                    "address": bmt_address(pattern(kind, n), span).hex()})
    return out


def swarm_tree_vectors():
    out = []
    for kind, n in [("zero", 0), ("ascii", 1), ("ascii", 4096), ("ascii", 4097),
                    ("mod251", 128 * 4096), ("mod251", 128 * 4096 + 1),
                    ("ascii", 129 * 4096 + 5), ("zero", 300 * 4096)]:
        root, chunks, nodes, depth = swarm_tree(pattern(kind, n))
        out.append({"pattern": kind, "len": n, "root": root.hex(), "chunk_count": chunks,
                    "node_count": nodes, "depth": depth})
    return out


# ---------------------------------------------------------------- CIDs

def cid_strings(digest: bytes):
    mh = multihash.wrap(digest, "sha2-256")
    v0 = CID("base58btc", 0, "dag-pb", mh)
    v1 = CID("base32", 1, "raw", mh)
    return {"v0": str(v0), "v1": str(v1), "v0_bin": bytes(v0).hex(), "v1_bin": bytes(v1).hex()}


def cid_vectors():
    out = []
    for kind, n in [("zero", 0), ("ascii", 1), ("ascii", 3), ("zero", 4096),
                    ("mod251", 1000), ("ascii", 262144)]:
        digest = hashlib.sha256(pattern(kind, n)).digest()
        out.append({"pattern": kind, "len": n, "digest": digest.hex(), **cid_strings(digest)})
    return out


def ipfs_tree(data: bytes, chunk_size: int, fanout: int):
    """Balanced DAG: leaves are sha2-256 of chunk bytes, interior nodes are
    sha2-256 over the concatenated child multihashes. Every level is grouped
    fanout-at-a-time, a lone trailing child still gets its own parent."""
    leaves = [hashlib.sha256(data[o:o + chunk_size]).digest()
              for o in range(0, max(len(data), 1), chunk_size)]
    level = leaves
    nodes = len(leaves)
    depth = 1
    while len(level) > 1:
        groups = [level[i:i + fanout] for i in range(0, len(level), fanout)]
        level = [hashlib.sha256(b"".join(b"\x12\x20" + d for d in g)).digest() for g in groups]
        nodes += len(level)
        depth += 1
    return level[0], len(leaves), nodes, depth


def ipfs_tree_vectors():
    out = []
    for kind, n, cs, fo in [("zero", 0, 262144, 174), ("ascii", 1, 262144, 174),
                            ("ascii", 262144, 262144, 174), ("mod251", 1 << 20, 262144, 174),
                            ("ascii", 10000, 1024, 4), ("mod251", 70000, 1000, 3),
                            ("ascii", 262144, 4096, 174)]:
        root, chunks, nodes, depth = ipfs_tree(pattern(kind, n), cs, fo)
        out.append({"pattern": kind, "len": n, "chunk_size": cs, "fanout": fo,
                    "digest": root.hex(), "chunk_count": chunks, "node_count": nodes,
                    "depth": depth, **cid_strings(root)})
    return out


def main():
    outdir = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent.parent / "fixtures")
    outdir.mkdir(parents=True, exist_ok=True)
    files = {
        "keccak.json": keccak_vectors(),
        "abi.json": abi_vectors(),
        "bmt.json": bmt_vectors(),
        "swarm_tree.json": swarm_tree_vectors(),
        "cid.json": cid_vectors(),
        "ipfs_tree.json": ipfs_tree_vectors(),
    }
    for name, body in files.items():
        (outdir / name).write_text(json.dumps(body, indent=1) + "\n")


if __name__ == "__main__":
    main()
