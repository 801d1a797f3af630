"""Shared cached builders so expensive groups are enumerated once per run."""

from functools import lru_cache

from coxex import GroupData, build_root_system, parse_descriptor
from coxex.descriptors import CoxeterDescriptor


@lru_cache(maxsize=None)
def system(token: str):
    if "x" in token:
        return build_root_system([parse_descriptor(t) for t in token.split("x")])
    return build_root_system(parse_descriptor(token))


@lru_cache(maxsize=None)
def data(token: str) -> GroupData:
    return GroupData(system(token))


def descriptor(token: str) -> CoxeterDescriptor:
    return parse_descriptor(token)
