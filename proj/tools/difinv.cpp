#include <iostream>

#include "difinv/cli.hpp"

int main(int argc, char** argv) { return difinv::cli::run(argc, argv, std::cout, std::cerr); }
