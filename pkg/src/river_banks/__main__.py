from river_banks.cli import console_main

console_main()
