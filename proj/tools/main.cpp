#include "leafdeck/cli.hpp"

int main(int argc, char** argv) { return leafdeck::run_cli(argc, argv); }
