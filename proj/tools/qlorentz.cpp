#include <iostream>

#include "qlorentz/cli/app.hpp"

int main(int argc, char** argv) { return qlorentz::run(argc, argv, std::cout, std::cerr); }
