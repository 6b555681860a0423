#include "relsig/cli.hpp"

int main(int argc, char** argv) { return relsig::cli::run(argc, argv); }
