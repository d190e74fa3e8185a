#include "clustercox/cli.hpp"

int main(int argc, char** argv) { return clustercox::cli::main_entry(argc, argv); }
