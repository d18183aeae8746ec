import os
import sys

# Under ctest the build-tree module must win over an installed or editable copy.
_tree = os.environ.get("LIEPOSET_BUILD_TREE")
if _tree:
    sys.meta_path[:] = [f for f in sys.meta_path if type(f).__name__ != "ScikitBuildRedirectingFinder"]
    sys.path.insert(0, _tree)
