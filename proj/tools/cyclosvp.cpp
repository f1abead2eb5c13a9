#include <iostream>

#include "cyclosvp/cli.hpp"

int main(int argc, char** argv) { return cyclosvp::run_cli(argc, argv, std::cout, std::cerr); }
