#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::optional<std::string> threads;
    if (const char* env = std::getenv("FSLAB_THREADS"))
        threads = env;
    return fslab::cli::run(argc, argv, std::cout, std::cerr, threads);
}
