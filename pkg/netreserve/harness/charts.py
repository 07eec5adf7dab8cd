# coding: utf-8
"""
SVG Charts
==========

This module builds a self-contained SVG line chart from figure series:
one polyline per series, the axes, the bounds of the value range and a legend.

.. doctest:: charts_demo

    >>> from netreserve.harness.charts import ChartBuilder

    >>> builder = ChartBuilder(title="violations", width=200, height=100, margin=10)
    >>> tree = builder.generate_chart_tree([1, 2, 3], {"lazy@0": [0.0, 1.0, 0.5]})
    >>> tree.tag
    '{http://www.w3.org/2000/svg}svg'
    >>> tree.find("{http://www.w3.org/2000/svg}polyline").get("points")
    '10.00,90.00 100.00,10.00 190.00,50.00'
"""
import collections

from lxml import etree

#: Colors of the series, used in turn.
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f")


class Namespace(collections.namedtuple("Namespace", "prefix, uri")):
    """
    XML namespace of the chart elements: a *prefix* (``None`` for the
    default namespace) and an *uri*.
    """
    __slots__ = ()

    def tag(self, name):
        """ Element name in Clark notation: ``{uri}name``. """
        return "{{{uri}}}{name}".format(uri=self.uri, name=name)

    @property
    def nsmap(self):
        return {self.prefix: self.uri}


#: SVG namespace, used as the default namespace of the charts.
SVG_NS = Namespace(None, "http://www.w3.org/2000/svg")


class ChartBuilder(object):
    """
    SVG line chart builder.
    """

    def __init__(self, title="", width=640, height=400, margin=50, svg_ns=SVG_NS, **options):
        """
        Initialize the builder.

        :param str title: Title of the chart.

        :param int width: Width of the chart (pixels).

        :param int height: Height of the chart (pixels).

        :param int margin: Margin around the plotting area (pixels).

        :type  svg_ns: Namespace
        :param svg_ns: Namespace of the SVG elements.

        :keyword options: Extra building options.
        """
        self.title = title
        self.width = width
        self.height = height
        self.margin = margin
        self.svg_ns = svg_ns
        self.options = options

    def _scale(self, values, size, reverse=False):
        low = min(values)
        high = max(values)
        span = high - low or 1.0
        extent = size - 2 * self.margin

        def scale(value):
            ratio = (value - low) / span
            if reverse:
                ratio = 1.0 - ratio
            return self.margin + ratio * extent

        return scale, low, high

    def generate_chart_tree(self, t, columns):
        """
        Build the SVG tree.

        :param t: Abscissas (slot numbers).

        :param columns: Ordered mapping ``name -> values`` (one value per abscissa).

        :return: The ``<svg>`` element.
        """
        qname = self.svg_ns.tag
        attrs = {
            "width": str(self.width),
            "height": str(self.height),
            "viewBox": "0 0 {0} {1}".format(self.width, self.height),
        }
        svg_elem = etree.Element(qname("svg"), attrib=attrs, nsmap=self.svg_ns.nsmap)
        title_elem = etree.SubElement(svg_elem, qname("title"))
        title_elem.text = self.title

        values = [float(value) for series in columns.values() for value in series] or [0.0]
        x_scale, t_low, t_high = self._scale([float(x) for x in t] or [0.0], self.width)
        y_scale, y_low, y_high = self._scale(values, self.height, reverse=True)

        bottom = self.height - self.margin
        axes = "M{0},{1} L{0},{2} L{3},{2}".format(self.margin, self.margin, bottom, self.width - self.margin)
        etree.SubElement(svg_elem, qname("path"), attrib={"d": axes, "stroke": "black", "fill": "none"})
        labels = [
            (self.margin - 4, y_scale(y_high), "end", "{0:.4g}".format(y_high)),
            (self.margin - 4, y_scale(y_low), "end", "{0:.4g}".format(y_low)),
            (x_scale(t_low), bottom + 14, "middle", "{0:g}".format(t_low)),
            (x_scale(t_high), bottom + 14, "middle", "{0:g}".format(t_high)),
        ]
        for x, y, anchor, text in labels:
            attrs = {"x": "{0:.2f}".format(x), "y": "{0:.2f}".format(y), "text-anchor": anchor, "font-size": "10"}
            text_elem = etree.SubElement(svg_elem, qname("text"), attrib=attrs)
            text_elem.text = text

        for position, (name, series) in enumerate(columns.items()):
            color = PALETTE[position % len(PALETTE)]
            points = " ".join(
                "{0:.2f},{1:.2f}".format(x_scale(float(x)), y_scale(float(y))) for x, y in zip(t, series))
            attrs = {"points": points, "stroke": color, "fill": "none", "stroke-width": "1"}
            line_elem = etree.SubElement(svg_elem, qname("polyline"), attrib=attrs)
            line_title = etree.SubElement(line_elem, qname("title"))
            line_title.text = name
            attrs = {
                "x": str(self.width - self.margin + 4),
                "y": str(self.margin + 12 * position),
                "fill": color,
                "font-size": "10",
            }
            legend_elem = etree.SubElement(svg_elem, qname("text"), attrib=attrs)
            legend_elem.text = name
        return svg_elem

    def to_string(self, t, columns):
        """
        Build the SVG document.

        :rtype: str
        :return: The serialized document, with an XML declaration.
        """
        tree = etree.ElementTree(self.generate_chart_tree(t, columns))
        return etree.tostring(tree, encoding="utf-8", xml_declaration=True, pretty_print=True).decode("utf-8")
