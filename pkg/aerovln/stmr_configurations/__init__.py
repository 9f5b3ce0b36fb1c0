# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Globally configure aerovln.

This module contains variables which can be set by the user in
order to globally configure the behaviour of all ``stmr_*`` packages.
"""

import logging

LOGGING_LEVEL = logging.WARNING
"""Define the globally used logging level.

In order to change the logging of your navigation script,
you need to set this variable before building any navigation object:

    >>> import logging
    >>> from aerovln import stmr_configurations
    >>> stmr_configurations.LOGGING_LEVEL = logging.INFO
    >>> ...  # all other code follows here

Loggers are class based. Each instance with logging abilities
fetches the logger of its class, named after module and class.
"""
