#include <iostream>

#include "hodograph/cli/app.hpp"

int main(int argc, char** argv) { return hodograph::cli::run(argc, argv, std::cout, std::cerr); }
