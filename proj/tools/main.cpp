// CLI entry point; subcommands are wired up in cli.cpp.
int cli_main(int argc, char** argv);

int main(int argc, char** argv) { return cli_main(argc, argv); }
