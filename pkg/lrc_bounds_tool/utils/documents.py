"""
Reading and writing of the JSON documents (codes, families, plans, reports).
"""

from pathlib import Path
from typing import Any

from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer


class IndentedJSONRenderer(JSONRenderer):
    """
    JSON renderer with a stable indentation, for files meant to be read and
    diffed.
    """

    def get_indent(self, accepted_media_type, renderer_context):
        return 2


def render_document(data: Any, indent: bool = True) -> str:
    """
    Returns
    -------
    str
        The JSON text of ``data``.
    """
    renderer = IndentedJSONRenderer() if indent else JSONRenderer()
    return renderer.render(data).decode("utf-8")


def read_document(path: str | Path) -> Any:
    """
    Parses the JSON document stored at ``path``.
    """
    with open(path, "rb") as stream:
        return JSONParser().parse(stream)


def write_document(path: str | Path, data: Any):
    """
    Writes ``data`` as an indented JSON document to ``path``.
    """
    Path(path).write_text(render_document(data) + "\n", encoding="utf-8")
