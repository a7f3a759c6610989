from bourbaki_degree.cli.main import main

raise SystemExit(main())
