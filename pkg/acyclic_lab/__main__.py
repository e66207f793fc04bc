from acyclic_lab.cli import main

raise SystemExit(main())
