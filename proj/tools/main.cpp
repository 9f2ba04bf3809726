#include "beamwidth/cli.hpp"

int main(int argc, char** argv) { return beamwidth::cli::run_main(argc, argv); }
