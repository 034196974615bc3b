#include <iostream>

#include "cyclink/cli.hpp"

int main(int argc, char** argv) { return cyclink::cli::run(argc, argv, std::cout, std::cerr); }
