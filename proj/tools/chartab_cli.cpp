#include <iostream>

#include "chartab/io/cli.hpp"

int main(int argc, char** argv) { return chartab::io::dispatch(argc, argv, std::cout, std::cerr); }
