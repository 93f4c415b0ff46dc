#include <iostream>

#include "ocsym/cli.hpp"

int main(int argc, char** argv) { return ocsym::cli::run(argc, argv, std::cout, std::cerr); }
