import facilidyn
import datetime
import sphinx_rtd_theme

project = 'facilidyn'
author = 'facilidyn developers'
copyright = '{}, {}'.format(datetime.datetime.now().year, author)

version = facilidyn.__version__
release = facilidyn.__version__

extensions = [
    'myst_parser',
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx_autodoc_typehints',
]
autosummary_generate = True

myst_enable_extensions = [
    'colon_fence',
    'dollarmath',
    'deflist',
]
myst_heading_anchors = 2

intersphinx_mapping = {
    'python': ('https://docs.python.org/3/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
}

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'collapse_navigation': False,
    'navigation_depth': 2,
}
add_module_names = False

# module pages list each subpackage's public names through {{ facilidyn.<pkg>.classes }}
rst_context = {'facilidyn': facilidyn}


def setup(app):
    def skip(app, what, name, obj, skip, options):
        return True if name in ('__init__', '__repr__', '__weakref__', '__dict__', '__module__') else skip

    def rst_jinja_render(app, docname, source):
        source[0] = app.builder.templates.render_string(source[0], rst_context)

    app.connect('autodoc-skip-member', skip)
    app.connect('source-read', rst_jinja_render)
