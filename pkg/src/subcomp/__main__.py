from subcomp.cli import console_main

console_main()
