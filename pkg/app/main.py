from __future__ import annotations

import sys
import traceback
from typing import Sequence

from app.base.errors import ConfigError, DomainError, NumericalError


def main(argv: Sequence[str] | None = None) -> int:
    try:
        from app.interface.interface import Interface

        app = Interface(argv)
        app.run()
    except SystemExit as e:
        # argparse usage errors exit with 2, --help with 0
        return e.code if isinstance(e.code, int) else 2
    except ConfigError as e:
        sys.stderr.write(f"configuration error: {e}\n")
        return ConfigError.exit_code
    except (DomainError, NumericalError) as e:
        sys.stderr.write(f"{e.__class__.__name__}: {e}\n")
        return e.exit_code
    except Exception:
        traceback.print_exc()
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
