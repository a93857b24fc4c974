#include "cli_commands.hpp"

int main(int argc, char** argv) { return zp::cli::run(argc, argv); }
