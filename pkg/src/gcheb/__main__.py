from gcheb.cli import main

raise SystemExit(main())
