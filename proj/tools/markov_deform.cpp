#include <iostream>

#include "mdeform/cli.hpp"

int main(int argc, char** argv) { return mdeform::cli::run(argc, argv, std::cout, std::cerr); }
