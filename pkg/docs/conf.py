# Sphinx configuration for the hpck documentation.
import os
import sys

sys.path.insert(0, os.path.abspath('..'))

from hpck.version import __version__  # noqa: E402

project = 'hpck'
copyright = '2026, hpck developers'
author = 'hpck developers'
release = __version__
version = '.'.join(__version__.split('.')[:2])

master_doc = 'index'
source_suffix = '.rst'
exclude_patterns = ['_build']

html_theme = 'sphinx_rtd_theme'
