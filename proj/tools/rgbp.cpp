#include <iostream>

#include "rgbp/cli.hpp"

int main(int argc, char** argv) { return rgbp::cli::run(argc, argv, std::cout, std::cerr); }
