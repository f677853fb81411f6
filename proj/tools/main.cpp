#include <iostream>

#include "maxtri/io.hpp"

int main(int argc, char** argv) {
    return maxtri::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
