from pruneclust.main import run_cli

raise SystemExit(run_cli())
