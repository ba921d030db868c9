"""Schemas for input files."""
from .config_files import IdealFile, MuEntry, RTableEntry, RTableFile, SystemFile, WGraphFile

__all__ = ["IdealFile", "MuEntry", "RTableEntry", "RTableFile", "SystemFile", "WGraphFile"]
