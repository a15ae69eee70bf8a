import facilidyn.polyalg
import facilidyn.model
import facilidyn.regions
import facilidyn.localform
import facilidyn.simulate
import facilidyn.checks
import facilidyn.utils

__version__ = '0.1.0'

__all__ = [
    '__version__',
    'polyalg',
    'model',
    'regions',
    'localform',
    'simulate',
    'checks',
    'utils'
]
