#include "cli.hpp"

int main(int argc, char** argv) { return rhocalc::cli::run(argc, argv); }
