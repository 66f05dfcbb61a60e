from django.conf import settings


def search_budget():
    """Return the node budget for brute-force searches."""
    return getattr(settings, 'MEMORIA_MAX_SEARCH', 200000)


def default_bound():
    """Return the finite ordinal bound used when a caller gives none."""
    return getattr(settings, 'MEMORIA_DEFAULT_BOUND', 4)


def default_seed():
    """Return the default seed for random sampling."""
    return getattr(settings, 'MEMORIA_DEFAULT_SEED', 0)


def report_format():
    """Return the default report format ('text' or 'json')."""
    return getattr(settings, 'MEMORIA_REPORT_FORMAT', 'text')
