#include "eph/plotcli/cli.hpp"

int main(int argc, char **argv) { return eph::plot::cli_main(argc, argv); }
