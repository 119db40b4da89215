// main.cpp: qcstab command-line tool

#include <iostream>

#include "qcstab/scan/cli.hpp"

int main(int argc, char** argv) { return qcstab::scan::run_cli(argc, argv, std::cout, std::cerr); }
