#!/usr/bin/env python3
"""
SVG Polygon Renderer
--------------------
Desenha polígonos HN como SVG 1.1: uma polyline por fibrado, vértices em
coordenadas inteiras (posto, grau) multiplicadas por uma escala inteira de
pixels, viewBox ajustado ao conteúdo e rótulos "(posto, grau)".
"""

import logging
import xml.etree.ElementTree as ET
from typing import List, Optional, Sequence, Tuple

from bundles.errors import PreconditionError
from bundles.hn_core import Bundle
from verify.config import get_settings

logger = logging.getLogger(__name__)

SVG_NS = "http://www.w3.org/2000/svg"
ALIGNMENTS = ("left", "right")
COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]


def polygon_points(bundle: Bundle, alignment: str = "left") -> List[Tuple[int, int]]:
    """
    Vértices do polígono HN em coordenadas (posto, grau).

    Com alignment="left" o polígono começa na origem; com "right" termina nela.
    """
    if alignment not in ALIGNMENTS:
        raise PreconditionError(f"alignment must be one of {ALIGNMENTS}, got {alignment!r}")
    x, y = (0, 0) if alignment == "left" else (-bundle.rank, -bundle.degree)
    points = [(x, y)]
    for vec in bundle.hn_vectors:
        x, y = x + vec.x, y + vec.y
        points.append((x, y))
    return points


def render_svg(
    bundles: Sequence[Bundle], alignment: str = "left", scale: Optional[int] = None
) -> str:
    """
    Gera o documento SVG com um polígono por fibrado.

    Args:
        bundles: Fibrados a desenhar, na ordem da legenda
        alignment: "left" ou "right"
        scale: Pixels por unidade de posto e de grau (padrão HNFF_SVG_SCALE)

    Returns:
        str: Documento SVG 1.1 completo
    """
    scale = scale or get_settings().svg_scale
    polygons = [polygon_points(b, alignment) for b in bundles]
    xs = [x for points in polygons for x, _ in points] or [0]
    ys = [y for points in polygons for _, y in points] or [0]
    margin = 2 * scale
    left, right = min(xs) * scale - margin, max(xs) * scale + margin
    top, bottom = -max(ys) * scale - margin, -min(ys) * scale + margin
    width, height = right - left, bottom - top

    root = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "version": "1.1",
            "width": str(width),
            "height": str(height),
            "viewBox": f"{left} {top} {width} {height}",
        },
    )
    axes = ET.SubElement(root, "g", {"class": "axes", "stroke": "#999999", "stroke-width": "1"})
    ET.SubElement(axes, "line", {"x1": str(left), "y1": "0", "x2": str(right), "y2": "0"})
    ET.SubElement(axes, "line", {"x1": "0", "y1": str(top), "x2": "0", "y2": str(bottom)})

    for index, (bundle, points) in enumerate(zip(bundles, polygons)):
        color = COLORS[index % len(COLORS)]
        group = ET.SubElement(root, "g", {"class": "hn-polygon"})
        ET.SubElement(group, "title").text = str(bundle)
        ET.SubElement(
            group,
            "polyline",
            {
                "points": " ".join(f"{x * scale},{-y * scale}" for x, y in points),
                "fill": "none",
                "stroke": color,
                "stroke-width": "2",
            },
        )
        for x, y in points:
            ET.SubElement(
                group,
                "circle",
                {"cx": str(x * scale), "cy": str(-y * scale), "r": "3", "fill": color},
            )
            label = ET.SubElement(
                group,
                "text",
                {
                    "x": str(x * scale + 4),
                    "y": str(-y * scale - 4),
                    "font-size": str(max(8, scale // 3)),
                    "fill": color,
                },
            )
            label.text = f"({x}, {y})"

    logger.debug("rendered %d polygon(s) aligned %s", len(polygons), alignment)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"
