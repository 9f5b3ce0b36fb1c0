# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

import os
import pathlib
import subprocess
import sys
import typing
import unittest

from . import configurations


__all__ = ("ModuleImportTest", "GoldenFileTestCase")


class ModuleImportTest(unittest.TestCase):
    """Test that any order of import subpackages works.

    In namespace packages we do not explicitly declare the import order
    of submodules. Therefore some circular import problems can appear
    in case the user picks a wrong import order. This tests checks that
    any import order of modules work without any problem.
    """

    module_name_list = []

    def _test_import(self, module_name: str):
        try:
            exit_code = subprocess.run(
                [sys.executable, "-c", f"from aerovln import {module_name}"],
                check=True,
            ).returncode
        except subprocess.CalledProcessError as e:
            failure_information = f"Import of 'aerovln.{module_name}' failed: {e}"
            exit_code = 1
        else:
            failure_information = ""

        self.assertEqual(0, exit_code, failure_information)

    def test_module_import(self):
        for module_name in self.module_name_list:
            with self.subTest(module_name=module_name):
                self._test_import(module_name)


class GoldenFileTestCase(unittest.TestCase):
    """Compare text byte-exactly with a stored golden file.

    Golden files are written (or rewritten) instead of compared when
    the environment variable named in
    ``stmr_utilities.configurations.UPDATE_GOLDEN_ENVIRONMENT_VARIABLE``
    is set to ``1``. Otherwise a missing golden file fails the test.
    """

    golden_directory: typing.Optional[pathlib.Path] = None
    """Where the golden files live. Defaults to the ``golden`` directory
    next to the enclosing ``tests`` package of the test module."""

    def _golden_directory(self) -> pathlib.Path:
        if self.golden_directory is not None:
            return pathlib.Path(self.golden_directory)
        module_path = pathlib.Path(sys.modules[type(self).__module__].__file__)
        for parent in module_path.resolve().parents:
            if parent.name == "tests":
                return parent / "golden"
        return module_path.parent / "golden"

    def assertGolden(self, text: str, golden_name: str):
        path = self._golden_directory() / golden_name
        update = (
            os.environ.get(configurations.UPDATE_GOLDEN_ENVIRONMENT_VARIABLE, "0")
            == "1"
        )
        if update:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_bytes(text.encode("utf-8"))
            return
        if not path.exists():
            self.fail(
                f"Golden file '{path}' is missing. Set "
                f"{configurations.UPDATE_GOLDEN_ENVIRONMENT_VARIABLE}=1 to write it."
            )
        self.assertEqual(path.read_bytes().decode("utf-8"), text)
