#include <gammastar/cli.hpp>

int main(int argc, char** argv) { return gammastar::run_cli(argc, argv, std::cout, std::cerr); }
