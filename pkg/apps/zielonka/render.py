from apps.core.ordering import label


def _node_text(node):
    colors = ', '.join(label(color) for color in node.colors)
    return f'({colors})' if node.positive else f'[{colors}]'


def pretty(tree):
    """Indented rendering: positive nodes in parentheses, negative in brackets."""
    lines = []
    for path, node in tree.walk():
        lines.append('  ' * len(path) + _node_text(node))
    return '\n'.join(lines) + '\n'


def to_dot(tree, name='zielonka'):
    """Render ``tree`` as DOT text; positive nodes are circles, negative boxes."""
    lines = [f'digraph "{name}" {{']
    for path, node in tree.walk():
        ident = 'n' + ''.join(f'_{index}' for index in path)
        shape = 'circle' if node.positive else 'box'
        lines.append(f'    {ident} [label="{", ".join(label(c) for c in node.colors)}", shape={shape}];')
        if path:
            parent = 'n' + ''.join(f'_{index}' for index in path[:-1])
            lines.append(f'    {parent} -> {ident};')
    lines.append('}')
    return '\n'.join(lines) + '\n'
