# -*- coding: utf-8 -*-
"""Newton-Puiseux expansions of plane algebraic curves."""
