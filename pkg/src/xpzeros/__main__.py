from xpzeros.cli import main

main()
