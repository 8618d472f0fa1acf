#include <iostream>

#include "qsp/cli.hpp"

int main(int argc, char** argv) {
    return qsp::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
