"""Parse an SVG drawing and check its circle and line counts."""
import sys
import xml.etree.ElementTree as ET

NS = "{http://www.w3.org/2000/svg}"

path, vertices, edges = sys.argv[1], int(sys.argv[2]), int(sys.argv[3])
root = ET.parse(path).getroot()
if root.tag != NS + "svg":
    sys.exit(f"root element is {root.tag}")
circles = len(root.findall(f".//{NS}circle"))
lines = len(root.findall(f".//{NS}line"))
if (circles, lines) != (vertices, edges):
    sys.exit(f"expected {vertices} circles and {edges} lines, got {circles} and {lines}")
print(f"ok: {circles} circles, {lines} lines")
