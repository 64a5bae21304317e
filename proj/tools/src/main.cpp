#include <iostream>

#include "dehnforge_app/app.hpp"

int main(int argc, char** argv) { return dehnforge::app::run_cli(argc, argv, std::cout, std::cerr); }
