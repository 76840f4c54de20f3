#include <iostream>
#include <string>
#include <vector>

#include "rigged/cli.hpp"

int main(int argc, char** argv) {
    return rigged::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
