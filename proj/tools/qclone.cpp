#include <iostream>

#include "qclone/cli.hpp"

int main(int argc, char** argv) { return qclone::cli::run(argc, argv, std::cout, std::cerr); }
