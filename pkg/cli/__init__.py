"""
Command Line Interface Module

CLI 명령어 및 인터페이스를 제공합니다.
"""

from cli.operad import cli, main

__all__ = ["cli", "main"]
