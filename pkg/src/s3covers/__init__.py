"""Exact algebra for S3-covers: building data, their algebras, and the relation ideal."""

from __future__ import annotations

__version__ = "0.1.0"
