"""
Plain text rendering of reports and empirical models.

Layouts follow the usual published tables: contexts as rows, one-hot
outcomes as columns.
"""


def _vector(coords):
    return "(" + ", ".join(str(a) for a in coords) + ")"


def _grid(header, rows):
    """Left aligned columns separated by " | "."""
    widths = [
        max(len(str(cell)) for cell in column)
        for column in zip(header, *rows)
    ]

    def line(cells):
        return " | ".join(
            str(cell).ljust(w) for cell, w in zip(cells, widths)
        ).rstrip()

    return [line(header)] + [line(row) for row in rows]


def render_report(document):
    """Render a report document for reading."""
    lines = [
        f"verdict: {document['verdict']}",
        f"method: {document['method']}",
        f"assignments: {document['assignment_count']}",
    ]
    if 'methods_agree' in document:
        lines.append(f"methods agree: {document['methods_agree']}")
    for name, seconds in sorted(document.get('timings', {}).items()):
        lines.append(f"time {name}: {seconds:.4f} s")
    if document['all_ones']:
        lines.append(
            "valued 1 by every assignment: "
            + ", ".join(_vector(u) for u in document['all_ones'])
        )
    lines.append(f"witness subspaces: {len(document['witness_subspaces'])}")
    for basis in document['witness_subspaces']:
        lines.append("  span " + ", ".join(_vector(v) for v in basis))
    if document['diagnostics']:
        lines.append("")
        rows = [
            [
                " ".join(d['pair']),
                d['situation'],
                "yes" if d['excluded'] else "no",
                d['shortcut_ray'] or "-",
                d['explanation'],
            ]
            for d in document['diagnostics']
        ]
        lines += _grid(
            ["pair", "situation", "excluded", "shortcut", "evidence"], rows
        )
    if 'assignments' in document:
        lines.append("")
        lines.append(f"assignment rows: {len(document['assignments'])}")
        for number, row in enumerate(document['assignments'], start=1):
            lines.append(f"{number} | " + " ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def render_empirical_model(dimension, rows):
    """Contexts as rows, one-hot outcomes as columns."""
    header = ["context"] + [
        " ".join("1" if k == j else "0" for k in range(dimension))
        for j in range(dimension)
    ]
    body = [
        [" ".join(row['context'])] + [str(p) for p in row['probabilities']]
        for row in rows
    ]
    return _grid(header, body)


def render_state_check(document, dimension):
    """Render a check_state result with its empirical model."""
    lines = [
        f"state: {_vector(document['state'])}",
        f"verdict: {document['verdict']}",
    ]
    if document['witness_ones'] is not None:
        lines.append(
            f"witness: assignment row {document['witness_index'] + 1}, "
            "valued 1: "
            + " ".join(document['witness_ones'])
        )
    lines.append("")
    lines += render_empirical_model(dimension, document['empirical_model'])
    return "\n".join(lines) + "\n"
