#include "ncmorse_cli.hpp"

int main(int argc, char** argv) { return ncmorse::cli::run(argc, argv); }
