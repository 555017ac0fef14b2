#include <hyperweyl/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return hyperweyl::cli::run(argc, argv, std::cout, std::cerr); }
