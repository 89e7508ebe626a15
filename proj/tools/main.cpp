#include <iostream>

#include "sympair/cli.hpp"

int main(int argc, char** argv) { return sympair::cli::run(argc, argv, std::cout); }
