"""
Plain text rendering of scenarios.
"""


def _coords(values):
    return "(" + ", ".join(str(v) for v in values) + ")"


def render_scenario_table(document):
    """Rays with their vectors, then contexts by label."""
    rays = document['rays']
    width = max(len(ray['label']) for ray in rays)
    synthetic = sum(1 for ray in rays if ray['synthetic'])
    lines = [
        f"dimension {document['dimension']}, {len(rays)} rays "
        f"({synthetic} synthetic), {len(document['contexts'])} contexts",
        "",
    ]
    for ray in rays:
        mark = " *" if ray['synthetic'] else ""
        label = ray['label'].ljust(width)
        lines.append(f"{label}  {_coords(ray['vector'])}{mark}")
    lines.append("")
    for number, context in enumerate(document['contexts'], start=1):
        lines.append(f"C{number}: {' '.join(context)}")
    return "\n".join(lines) + "\n"
