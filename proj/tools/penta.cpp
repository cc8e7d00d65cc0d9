#include "penta/cli.hpp"

int main(int argc, char** argv) { return penta::run_cli(argc, argv); }
