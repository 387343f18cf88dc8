#include "bergtoep/cli.hpp"

int main(int argc, char** argv) { return bergtoep::cli_main(argc, argv); }
