"""
Driving the command line from Python
====================================

Everything the ``ballot-oop`` command does is reachable through ``main``.
Counts computed by the oracle are cached; here the cache lives in a
temporary directory.
"""

import os
import tempfile

from ballot_oop.cli import main

os.environ["BALLOT_OOP_CACHE_DIR"] = tempfile.mkdtemp()

main(["count", "ballot", "--n", "7", "--d", "3", "--explain"])
main(["count", "ballot", "--n", "9", "--d", "2", "--method", "oracle", "--explain"])
main(["count", "ballot", "--n", "9", "--d", "2", "--method", "oracle", "--explain"])
main(["cache", "list"])

main(["table", "bndk", "--n", "6"])
main(["table", "pnd", "--max-n", "12", "--max-d", "5"])

main(["map", "phi-d1", "125783469"])
main(["map", "reverse", "1 4 3 5 2"])

code = main(["verify", "--max-n", "7", "--suites", "conjecture,appendix-tables"])
print("exit code", code)
