#include <iostream>

#include "bicx/cli.hpp"

int main(int argc, char** argv) {
    return bicx::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
