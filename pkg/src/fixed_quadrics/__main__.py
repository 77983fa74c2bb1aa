from fixed_quadrics.cli import main

main()
