#!/usr/bin/env python
"""Provides utilities for logging, timing, parallel maps and file handling."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import io
import sys
import time
import logging
import logging.handlers

import requests
from joblib import Parallel, delayed

logger = logging.getLogger(__name__)


def timeit(method):
    """Time decorator."""
    def timed(*args, **kw):
        ts = time.time()
        result = method(*args, **kw)
        te = time.time()
        logger.debug('%s  %2.2f sec' % (method.__name__, te - ts))
        return result
    timed.__name__ = method.__name__
    timed.__doc__ = method.__doc__
    return timed


def pmap(func, iterable, n_jobs=1, chunk_size=1):
    """Map func over iterable, in parallel when n_jobs != 1.

    The output list follows the order of the input, so callers can rely on
    canonical ordering regardless of scheduling.

    >>> pmap(abs, [-1, 2, -3])
    [1, 2, 3]
    """
    if n_jobs == 1:
        return [func(item) for item in iterable]
    parallel = Parallel(n_jobs=n_jobs, batch_size=chunk_size)
    return list(parallel(delayed(func)(item) for item in iterable))


def configure_logging(logger, verbosity=0, filename=None, stream=None):
    """Utility to configure the logging aspects.

    If filename is None then no info is stored in files.
    If filename is not None then everything that is logged is dumped to file
    (including program traces).
    Verbosity is an int that can take values: 0 -> warning,
    1 -> info, >=2 -> debug.
    Console messages go to stream, stderr by default, so that the report
    stream on stdout stays parseable.
    """
    logger.propagate = False
    logger.handlers = []
    log_level = logging.WARNING
    if verbosity == 1:
        log_level = logging.INFO
    elif verbosity >= 2:
        log_level = logging.DEBUG
    logger.setLevel(logging.DEBUG if filename is not None else log_level)
    # create console handler
    ch = logging.StreamHandler(stream if stream is not None else sys.stderr)
    ch.setLevel(log_level)
    ch.setFormatter(logging.Formatter('%(message)s'))
    logger.addHandler(ch)

    if filename is not None:
        fh = logging.handlers.RotatingFileHandler(filename=filename,
                                                  maxBytes=10000000,
                                                  backupCount=10)
        fh.setLevel(logging.DEBUG)
        fformatter = logging.Formatter(
            '%(asctime)s | %(levelname)-6s | %(name)10s | %(filename)10s |'
            ' %(lineno)4s | %(message)s')
        fh.setFormatter(fformatter)
        logger.addHandler(fh)


def serialize_dict(the_dict, full=True, offset='small'):
    """Render a flat dictionary as aligned 'key: value' lines.

    >>> print(serialize_dict({'holds': True, 'closure_size': 4}))
    closure_size: 4
         holds: True
    """
    if not the_dict:
        return ""
    text = []
    for key in sorted(the_dict):
        if offset == 'small':
            line = '%10s: %s' % (key, the_dict[key])
        elif offset == 'large':
            line = '%25s: %s' % (key, the_dict[key])
        else:
            raise Exception('ERROR: unrecognized option: %s' % offset)
        line = line.replace('\n', ' ')
        if full is False and len(line) > 100:
            line = line[:100] + '  ...  ' + line[-20:]
        text.append(line)
    return '\n'.join(text)


def read(uri):
    """Abstract read function.

    Accepts a python list of lines, '-' for standard input, a URL or a file
    path. In all cases a list of lines is returned.
    """
    if isinstance(uri, list):
        return uri
    if uri == '-':
        return sys.stdin.read().splitlines()
    if uri.startswith('http://') or uri.startswith('https://'):
        response = requests.get(uri)
        response.raise_for_status()
        return response.text.splitlines()
    with io.open(uri, encoding='utf-8') as f:
        return f.read().splitlines()


def write(text, uri=None):
    """Write text to a file path, or to stdout when uri is None or '-'."""
    if uri is None or uri == '-':
        sys.stdout.write(text)
        if not text.endswith('\n'):
            sys.stdout.write('\n')
        return
    with io.open(uri, 'w', encoding='utf-8') as f:
        f.write(text)
        if not text.endswith('\n'):
            f.write(u'\n')
    logger.info('Written file: %s' % uri)
