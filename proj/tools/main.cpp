#include "enhcube/cli.hpp"

int main(int argc, char** argv) { return enhcube::cli_main(argc, argv); }
