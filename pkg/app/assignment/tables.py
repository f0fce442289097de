"""
Plain text rendering of assignment tables.
"""


def render_assignment_table(table):
    """Render an assignment table with rays as columns."""
    count = table['assignment_count']
    lines = [f"{count} assignment{'' if count == 1 else 's'}"]
    if not count:
        return "\n".join(lines) + "\n"
    widths = [max(len(label), 1) for label in table['rays']]
    index_width = max(len("index"), len(str(count)))
    header = " ".join(
        label.rjust(w) for label, w in zip(table['rays'], widths)
    )
    lines.append(f"{'index'.ljust(index_width)} | {header}")
    for number, row in enumerate(table['rows'], start=1):
        cells = " ".join(str(v).rjust(w) for v, w in zip(row, widths))
        lines.append(f"{str(number).ljust(index_width)} | {cells}")
    return "\n".join(lines) + "\n"
