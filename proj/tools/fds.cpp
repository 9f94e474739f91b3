#include <iostream>

#include "fds/cli.hpp"

int main(int argc, char** argv) { return fds::cli::run(argc, argv, std::cout, std::cerr); }
