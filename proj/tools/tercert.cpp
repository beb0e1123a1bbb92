#include "tercert/cli.hpp"

int main(int argc, char** argv) { return tercert::cli::run(argc, argv, std::cout, std::cerr); }
