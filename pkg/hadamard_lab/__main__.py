from hadamard_lab.cli import main

raise SystemExit(main())
