#include "involex/cli.hpp"

int main(int argc, char** argv) { return involex::cli_main(argc, argv); }
