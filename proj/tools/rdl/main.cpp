#include "cli.hpp"

int main(int argc, char** argv) { return rdl::cli::main(argc, argv); }
