#include <iostream>

#include "iml/cli.hpp"

int main(int argc, char** argv) { return iml::run(argc, argv, std::cout, std::cerr); }
