# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

import sys

from aerovln import stmr_commands

sys.exit(stmr_commands.main())
