#include "cli.hpp"

int main(int argc, char** argv) { return latcomp::cli::main_entry(argc, argv); }
